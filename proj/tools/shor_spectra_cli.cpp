// Command-line front end: orbit and shift-spectrum tables, the spacing and
// intensity experiments, the Thue-Morse column and the verification battery.

#include "shor_spectra/error.hpp"
#include "shor_spectra/experiment.hpp"
#include "shor_spectra/matrix_io.hpp"
#include "shor_spectra/numtheory.hpp"
#include "shor_spectra/operators.hpp"
#include "shor_spectra/shift_spectrum.hpp"
#include "shor_spectra/thue_morse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <optional>
#include <string>

namespace ss = shor_spectra;

namespace {

constexpr int exit_config_error = 2;
constexpr int exit_verification_failure = 3;

struct CommonOptions {
  int n1 = 10;
  std::uint64_t modulus = 29;
  std::uint64_t base = 2;
  std::string thetas = "paper";
  std::string out;
  double bins = 0.25;
  bool wraparound = false;
  std::optional<std::size_t> seed_index;
  std::string state_theta;
};

void add_shape_flags(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("--n1", opts.n1, "qubits in the first register");
  cmd->add_option("--modulus,-N", opts.modulus, "odd modulus N");
  cmd->add_option("--base,-x", opts.base, "base x, coprime to N");
}

void add_experiment_flags(CLI::App *cmd, CommonOptions &opts) {
  add_shape_flags(cmd, opts);
  cmd->add_option("--thetas", opts.thetas,
                  "sector angles: paper (five defaults) | all | seeds | p/q[,p/q...] (2*pi*p/q)");
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--bins", opts.bins, "histogram bin width");
  cmd->add_flag("--wraparound", opts.wraparound,
                "include the spacing across 2*pi");
  cmd->add_option("--seed-index", opts.seed_index,
                  "eigenstate index (sorted by eigenangle) for fig23; default 2^n1/2");
  cmd->add_option("--state-theta", opts.state_theta,
                  "sector p/q of the fig23 eigenstate (default: first theta)");
}

ss::ExperimentConfig make_config(const CommonOptions &opts) {
  ss::ExperimentConfig config;
  config.n1 = opts.n1;
  config.modulus = opts.modulus;
  config.base = opts.base;
  config.thetas = ss::parse_thetas(opts.thetas);
  config.bin_width = opts.bins;
  config.include_wraparound = opts.wraparound;
  config.output_dir = opts.out;
  config.state_index = opts.seed_index;
  if (!opts.state_theta.empty()) {
    const auto selection = ss::parse_thetas(opts.state_theta);
    if (selection.selector != ss::ThetaSelector::explicit_list ||
        selection.turns.size() != 1) {
      throw ss::Error(ss::Errc::invalid_config,
                      "--state-theta takes a single p/q value");
    }
    config.state_theta = selection.turns.front();
  }
  config.validate();
  return config;
}

void print_json(const nlohmann::ordered_json &j) { std::cout << j.dump(2) << '\n'; }

int exit_code_for(ss::Errc code) {
  switch (code) {
  case ss::Errc::verification_failure:
    return exit_verification_failure;
  case ss::Errc::invalid_config:
  case ss::Errc::invalid_theta:
  case ss::Errc::not_coprime:
  case ss::Errc::bad_dimension:
  case ss::Errc::dimension_too_large:
  case ss::Errc::domain_error:
  case ss::Errc::index_out_of_range:
    return exit_config_error;
  default:
    return 1;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral statistics of the order-finding unitaries"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto *orbits = app.add_subcommand("orbits", "cycle decomposition of k -> x k mod N");
  orbits->add_option("--base,-x", opts.base, "base x (default 2)");
  orbits->add_option("--modulus,-N", opts.modulus, "modulus N")->required();

  auto *shift = app.add_subcommand("shift-spectrum", "distinct eigenangles of S");
  shift->add_option("--base,-x", opts.base, "base x (default 2)");
  shift->add_option("--modulus,-N", opts.modulus, "modulus N")->required();

  auto *fig1 = app.add_subcommand("fig1", "spacing distribution of the sector blocks");
  add_experiment_flags(fig1, opts);

  auto *fig23 = app.add_subcommand("fig23", "intensity statistics of one eigenstate");
  add_experiment_flags(fig23, opts);

  int tm_n1 = 0;
  std::string tm_out;
  auto *tm = app.add_subcommand("thue-morse", "Fourier column of the Thue-Morse signs");
  tm->add_option("--n1", tm_n1, "sequence length 2^n1")->required();
  tm->add_option("--out", tm_out, "CSV file (default stdout)");

  auto *verify = app.add_subcommand("verify", "cross-check battery on a small shape");
  add_shape_flags(verify, opts);
  verify->add_option("--out", opts.out, "output directory");

  std::string dump_theta = "0";
  std::string dump_path;
  bool dump_composed = false;
  auto *dump = app.add_subcommand("dump-block", "write one sector block as a binary matrix dump");
  dump->add_option("--n1", opts.n1, "qubits in the first register");
  dump->add_option("--theta", dump_theta, "sector angle p/q (2*pi*p/q)");
  dump->add_option("--out", dump_path, "output file")->required();
  dump->add_flag("--composed", dump_composed, "use the explicit matrix product");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config_error;
  }

  try {
    if (*orbits) {
      const auto decomp = ss::orbit_decomposition(opts.base, opts.modulus);
      nlohmann::ordered_json j;
      j["modulus"] = decomp.modulus;
      j["base"] = decomp.base;
      j["order"] = decomp.order;
      j["orbits"] = nlohmann::ordered_json::array();
      for (const auto &orbit : decomp.orbits) {
        j["orbits"].push_back({{"seed", orbit.seed},
                               {"length", orbit.length()},
                               {"elements", orbit.elements}});
      }
      print_json(j);
    } else if (*shift) {
      const auto decomp = ss::orbit_decomposition(opts.base, opts.modulus);
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto &c : ss::distinct_eigenangles(decomp)) {
        j.push_back({{"theta", c.theta()},
                     {"multiplicity", c.multiplicity},
                     {"seeds", c.seeds}});
      }
      print_json(j);
    } else if (*fig1) {
      print_json(ss::run_fig1(make_config(opts)).to_json());
    } else if (*fig23) {
      print_json(ss::run_fig23(make_config(opts)).to_json());
    } else if (*tm) {
      const auto column = ss::tm_fourier_column(tm_n1);
      std::ofstream file;
      if (!tm_out.empty()) {
        file.open(tm_out);
        if (!file) {
          throw ss::Error(ss::Errc::invalid_config, "cannot write " + tm_out);
        }
      }
      std::ostream &out = tm_out.empty() ? std::cout : file;
      out.imbue(std::locale::classic());
      out << std::setprecision(17) << "k,re,im,intensity\n";
      const double dim = static_cast<double>(column.size());
      for (Eigen::Index k = 0; k < column.size(); ++k) {
        out << k << ',' << column(k).real() << ',' << column(k).imag() << ','
            << dim * std::norm(column(k)) << '\n';
      }
    } else if (*verify) {
      ss::ExperimentConfig config;
      config.n1 = opts.n1;
      config.modulus = opts.modulus;
      config.base = opts.base;
      config.output_dir = opts.out;
      const auto report = ss::run_verify(config, false);
      print_json(report.to_json());
      if (!report.passed()) {
        std::cerr << "verification failed\n";
        return exit_verification_failure;
      }
    } else if (*dump) {
      const auto selection = ss::parse_thetas(dump_theta);
      if (selection.selector != ss::ThetaSelector::explicit_list ||
          selection.turns.size() != 1) {
        throw ss::Error(ss::Errc::invalid_config, "--theta takes a single p/q value");
      }
      const ss::BlockSpec spec(selection.turns.front(), opts.n1);
      const auto block = dump_composed ? ss::block_operator_composed(spec)
                                       : ss::block_operator_direct(spec);
      ss::write_matrix_dump(dump_path, block, {spec.theta(), spec.n1()});
    }
  } catch (const ss::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

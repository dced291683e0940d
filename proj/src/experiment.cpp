#include "shor_spectra/experiment.hpp"

#include "shor_spectra/error.hpp"
#include "shor_spectra/operators.hpp"
#include "shor_spectra/shift_spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <locale>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace shor_spectra {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double theta_match_tolerance = 1e-12;
constexpr std::size_t max_verify_dim = 4096;
constexpr std::size_t max_utilde_dense_dim = 1024;

double circular_distance(double a, double b) {
  const double diff = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(diff, two_pi - diff);
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::invalid_config,
                "cannot parse theta '" + std::string(whole) +
                    "', expected p/q meaning 2*pi*p/q");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

class CsvWriter {
public:
  CsvWriter(const std::filesystem::path &path, std::string_view header)
      : out_(path) {
    if (!out_) {
      throw Error(Errc::invalid_config, "cannot write " + path.string());
    }
    out_.imbue(std::locale::classic());
    out_ << std::setprecision(17) << header << '\n';
  }

  template <typename... Values> void row(const Values &...values) {
    std::size_t column = 0;
    ((out_ << (column++ == 0 ? "" : ",") << values), ...);
    out_ << '\n';
  }

private:
  std::ofstream out_;
};

void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::invalid_config, "cannot write " + path.string());
  }
  out << text;
}

void prepare_output(const ExperimentConfig &config) {
  if (!config.output_dir.empty()) {
    std::filesystem::create_directories(config.output_dir);
  }
}

KsSummary ks_against_references(std::span<const double> samples) {
  KsSummary ks;
  ks.cue = ks_distance(samples, wigner_cue_cdf);
  ks.goe = ks_distance(samples, wigner_goe_cdf);
  ks.poisson = ks_distance(samples, poisson_cdf);
  return ks;
}

nlohmann::ordered_json ks_json(const KsSummary &ks) {
  return {{"cue", ks.cue}, {"goe", ks.goe}, {"poisson", ks.poisson}};
}

CheckResult check_at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}

const char *fig1_script = R"(# Nearest-neighbour spacing histogram against the surmises.
set datafile separator ','
set key autotitle columnhead
set xlabel 's'
set ylabel 'P(s)'
set xrange [0:4]
set style fill solid 0.35 border
cue(s) = 32.0*s**2/pi**2*exp(-4.0*s**2/pi)
goe(s) = pi*s/2.0*exp(-pi*s**2/4.0)
poisson(s) = exp(-s)
set terminal pngcairo size 800,600
set output 'fig1.png'
plot 'histogram.csv' using 1:2 with boxes title 'spacings', \
     cue(x) with lines lw 2 title 'CUE', \
     goe(x) with lines dt 2 title 'GOE', \
     poisson(x) with lines dt 3 title 'Poisson'
)";

const char *fig23_script = R"(# Eigenstate intensities and their cumulative distribution.
set datafile separator ','
set key autotitle columnhead
set terminal pngcairo size 800,600
set output 'fig2.png'
set xlabel 'm'
set ylabel 'x'
plot 'intensities.csv' using 1:2 with impulses title 'intensity'
set output 'fig3.png'
set xlabel 'x'
set ylabel 'xi(x)'
set key bottom right
plot 'cumulative.csv' using 1:2 with steps title 'empirical', \
     1 - exp(-x) with lines lw 2 title '1 - exp(-x)'
)";

} // namespace

std::string to_string(const Turn &turn) {
  return std::to_string(turn.num()) + "/" + std::to_string(turn.den());
}

ThetaSelection parse_thetas(std::string_view text) {
  text = trim(text);
  if (text == "paper") {
    return {ThetaSelector::defaults, {}};
  }
  if (text == "all") {
    return {ThetaSelector::all, {}};
  }
  if (text == "seeds") {
    return {ThetaSelector::seeds, {}};
  }
  ThetaSelection selection{ThetaSelector::explicit_list, {}};
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) {
      throw Error(Errc::invalid_config, "empty entry in theta list");
    }
    const auto slash = item.find('/');
    const std::int64_t num = parse_integer(item.substr(0, slash), item);
    const std::int64_t den =
        slash == std::string_view::npos
            ? 1
            : parse_integer(item.substr(slash + 1), item);
    if (den <= 0) {
      throw Error(Errc::invalid_config,
                  "theta '" + std::string(item) + "' needs a positive denominator");
    }
    selection.turns.emplace_back(num, den);
  }
  if (selection.turns.empty()) {
    throw Error(Errc::invalid_config, "theta list is empty");
  }
  return selection;
}

std::vector<Turn> default_thetas() {
  return {Turn(-10, 28), Turn(0, 28), Turn(2, 28), Turn(3, 28), Turn(7, 28)};
}

void ExperimentConfig::validate() const {
  if (n1 < 1 || n1 > 12) {
    throw Error(Errc::invalid_config,
                "n1 must be in [1, 12], got " + std::to_string(n1));
  }
  if (modulus < 3 || modulus % 2 == 0) {
    throw Error(Errc::invalid_config,
                "modulus must be odd and >= 3, got " + std::to_string(modulus));
  }
  if (base < 1 || std::gcd(base, modulus) != 1) {
    throw Error(Errc::invalid_config, "base " + std::to_string(base) +
                                          " is not coprime to " +
                                          std::to_string(modulus));
  }
  if (!(bin_width > 0.0) || !(histogram_max > bin_width)) {
    throw Error(Errc::invalid_config, "histogram bin width must be positive "
                                      "and smaller than the histogram range");
  }
  if (state_index && *state_index >= (std::size_t{1} << n1)) {
    throw Error(Errc::invalid_config,
                "eigenstate index " + std::to_string(*state_index) +
                    " out of range for n1=" + std::to_string(n1));
  }
}

std::size_t ExperimentConfig::resolved_state_index() const {
  return state_index.value_or((std::size_t{1} << n1) / 2);
}

std::vector<Turn> resolve_thetas(const ExperimentConfig &config) {
  config.validate();
  const OrbitDecomposition decomp = orbit_decomposition(config.base, config.modulus);
  const std::vector<EigenangleClass> classes = distinct_eigenangles(decomp);

  std::vector<Turn> requested;
  switch (config.thetas.selector) {
  case ThetaSelector::defaults:
    requested = default_thetas();
    break;
  case ThetaSelector::all:
    for (const auto &c : classes) {
      requested.push_back(c.angle);
    }
    return requested;
  case ThetaSelector::seeds: {
    // 0 plus the fundamental angle 2*pi/rho of every orbit length rho > 1.
    std::vector<Turn> picked{Turn(0, 1)};
    for (const Orbit &orbit : decomp.orbits) {
      if (orbit.length() > 1) {
        picked.emplace_back(1, static_cast<std::int64_t>(orbit.length()));
      }
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
  }
  case ThetaSelector::explicit_list:
    requested = config.thetas.turns;
    break;
  }

  std::vector<Turn> resolved;
  for (const Turn &turn : requested) {
    const EigenangleClass *nearest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto &c : classes) {
      const double d = circular_distance(turn.radians(), c.theta());
      if (d < best) {
        best = d;
        nearest = &c;
      }
    }
    if (nearest == nullptr || best > theta_match_tolerance) {
      std::ostringstream msg;
      msg << "theta = 2*pi*" << to_string(turn)
          << " is not an eigenangle of S for x=" << config.base
          << ", N=" << config.modulus;
      if (nearest != nullptr) {
        msg << "; nearest valid angle is 2*pi*" << to_string(nearest->angle);
      }
      throw Error(Errc::invalid_theta, msg.str());
    }
    resolved.push_back(nearest->angle);
  }
  return resolved;
}

IntensitySummary summarize_intensities(const IntensityRecord &record, Turn angle) {
  if (record.intensities.empty()) {
    throw Error(Errc::empty_spectrum, "intensity record is empty");
  }
  IntensitySummary summary;
  summary.angle = angle;
  summary.state_index = record.state_index;
  summary.length = record.intensities.size();
  summary.mean = std::accumulate(record.intensities.begin(),
                                 record.intensities.end(), 0.0) /
                 static_cast<double>(summary.length);
  summary.ks_exponential = ks_distance(record.intensities, poisson_cdf);
  return summary;
}

double ExperimentReport::residual_max() const {
  double worst = 0.0;
  for (const auto &b : blocks) {
    worst = std::max(worst, b.residual);
  }
  return worst;
}

std::size_t ExperimentReport::degeneracies() const {
  std::size_t total = 0;
  for (const auto &b : blocks) {
    total += b.degeneracies;
  }
  return total;
}

bool ExperimentReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.passed; });
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;

  auto &params = j["params"];
  params["n1"] = config.n1;
  params["N"] = config.modulus;
  params["x"] = config.base;
  params["thetas"] = nlohmann::ordered_json::array();
  params["theta_turns"] = nlohmann::ordered_json::array();
  for (const Turn &t : thetas) {
    params["thetas"].push_back(t.radians());
    params["theta_turns"].push_back(to_string(t));
  }
  j["options"] = {{"bin_width", config.bin_width},
                  {"histogram_max", config.histogram_max},
                  {"include_wraparound", config.include_wraparound},
                  {"state_index", config.resolved_state_index()}};

  j["counts"] = {{"blocks", blocks.size()},
                 {"spacings", spacing_count},
                 {"histogram_overflow", histogram_overflow}};
  j["spacing_count"] = spacing_count;
  j["raw_mean"] = raw_mean;
  if (ks) {
    j["ks"] = ks_json(*ks);
  }
  if (ks_unrescaled) {
    j["ks_unrescaled"] = ks_json(*ks_unrescaled);
  }
  j["degeneracies"] = degeneracies();
  j["residual_max"] = residual_max();

  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto &b : blocks) {
    j["blocks"].push_back({{"theta", b.angle.radians()},
                           {"theta_turn", to_string(b.angle)},
                           {"residual", b.residual},
                           {"orthonormality_defect", b.orthonormality_defect},
                           {"degeneracies", b.degeneracies},
                           {"spacings", b.spacing_count}});
  }
  if (intensity) {
    j["intensity"] = {{"theta", intensity->angle.radians()},
                      {"theta_turn", to_string(intensity->angle)},
                      {"state_index", intensity->state_index},
                      {"length", intensity->length},
                      {"mean", intensity->mean},
                      {"ks_exponential", intensity->ks_exponential}};
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"value", c.value},
                           {"threshold", c.threshold},
                           {"passed", c.passed}});
  }
  j["passed"] = passed();
  j["files"] = files;
  return j;
}

ExperimentReport run_fig1(const ExperimentConfig &config) {
  ExperimentReport report;
  report.experiment = "fig1";
  report.config = config;
  report.thetas = resolve_thetas(config);

  std::vector<std::vector<double>> spacing_lists;
  for (const Turn &turn : report.thetas) {
    const BlockSpec spec(turn, config.n1);
    const BlockSpectrum spectrum =
        eigendecompose_unitary(block_operator_direct(spec), spec.theta());
    std::vector<double> spacings =
        normalized_spacings(spectrum, config.include_wraparound);
    report.blocks.push_back({turn, spectrum.residual,
                             spectrum.orthonormality_defect,
                             count_degeneracies(spacings), spacings.size()});
    spacing_lists.push_back(std::move(spacings));
  }

  const SpacingEnsemble ensemble = pool_ensemble(spacing_lists);
  report.spacing_count = ensemble.raw_count;
  report.raw_mean = ensemble.raw_mean;
  report.ks = ks_against_references(ensemble.spacings);
  std::vector<double> unrescaled;
  for (const auto &list : spacing_lists) {
    unrescaled.insert(unrescaled.end(), list.begin(), list.end());
  }
  report.ks_unrescaled = ks_against_references(unrescaled);

  const Histogram hist =
      histogram(ensemble.spacings, config.bin_width, config.histogram_max);
  report.histogram_overflow = hist.overflow;

  const std::size_t levels = std::size_t{1} << config.n1;
  const std::size_t per_block = config.include_wraparound ? levels : levels - 1;
  const double expected = static_cast<double>(report.thetas.size() * per_block);
  report.checks.push_back(
      {"spacing_count", static_cast<double>(report.spacing_count), expected,
       static_cast<double>(report.spacing_count) == expected});

  if (!config.output_dir.empty()) {
    prepare_output(config);
    const auto &dir = config.output_dir;
    {
      CsvWriter csv(dir / "spacings.csv", "s");
      for (double s : ensemble.spacings) {
        csv.row(s);
      }
    }
    {
      CsvWriter csv(dir / "histogram.csv", "bin_center,density");
      for (const auto &bin : hist.bins) {
        csv.row(bin.center, bin.density);
      }
    }
    {
      CsvWriter csv(dir / "reference_curves.csv", "s,cue,goe,poisson");
      const int steps = 400;
      for (int i = 0; i <= steps; ++i) {
        const double s = config.histogram_max * i / steps;
        csv.row(s, wigner_cue_pdf(s), wigner_goe_pdf(s), poisson_pdf(s));
      }
    }
    write_text(dir / "fig1.gp", fig1_script);
    report.files = {"spacings.csv", "histogram.csv", "reference_curves.csv",
                    "fig1.gp", "fig1_report.json"};
    write_text(dir / "fig1_report.json", report.to_json().dump(2) + "\n");
  }
  return report;
}

ExperimentReport run_fig23(const ExperimentConfig &config) {
  ExperimentReport report;
  report.experiment = "fig23";
  report.config = config;
  report.thetas = resolve_thetas(config);

  Turn angle = report.thetas.front();
  if (config.state_theta) {
    ExperimentConfig single = config;
    single.thetas = {ThetaSelector::explicit_list, {*config.state_theta}};
    angle = resolve_thetas(single).front();
  }
  const BlockSpec spec(angle, config.n1);
  const BlockSpectrum spectrum =
      eigendecompose_unitary(block_operator_direct(spec), spec.theta());
  report.blocks.push_back({angle, spectrum.residual,
                           spectrum.orthonormality_defect, 0, 0});

  const IntensityRecord record = intensity_record(spectrum, config.resolved_state_index());
  report.intensity = summarize_intensities(record, angle);
  report.checks.push_back(check_at_most(
      "intensity_mean", std::abs(report.intensity->mean - 1.0), 1e-12));

  if (!config.output_dir.empty()) {
    prepare_output(config);
    const auto &dir = config.output_dir;
    {
      CsvWriter csv(dir / "intensities.csv", "m,x");
      for (std::size_t m = 0; m < record.intensities.size(); ++m) {
        csv.row(m, record.intensities[m]);
      }
    }
    const std::vector<CdfPoint> cdf = cumulative_distribution(record);
    {
      CsvWriter csv(dir / "cumulative.csv", "x,xi");
      for (const auto &p : cdf) {
        csv.row(p.x, p.xi);
      }
    }
    {
      CsvWriter csv(dir / "cumulative_reference.csv", "x,xi");
      const double x_max = std::max(1.0, cdf.back().x);
      const int steps = 400;
      for (int i = 0; i <= steps; ++i) {
        const double x = x_max * i / steps;
        csv.row(x, poisson_cdf(x));
      }
    }
    write_text(dir / "fig23.gp", fig23_script);
    report.files = {"intensities.csv", "cumulative.csv",
                    "cumulative_reference.csv", "fig23.gp", "fig23_report.json"};
    write_text(dir / "fig23_report.json", report.to_json().dump(2) + "\n");
  }
  return report;
}

ExperimentReport run_verify(const ExperimentConfig &config, bool throw_on_failure) {
  config.validate();
  ExperimentReport report;
  report.experiment = "verify";
  report.config = config;

  RegisterShape shape;
  shape.n1 = config.n1;
  shape.modulus = config.modulus;
  shape.base = config.base;
  shape.n2 = min_second_register_qubits(config.modulus);
  shape.validate();
  const std::uint64_t d = shape.first_dim();
  const std::uint64_t n = shape.modulus;
  if (d * n > dense_dimension_limit(max_verify_dim)) {
    throw Error(Errc::invalid_config,
                "verify needs 2^n1 * N <= " +
                    std::to_string(dense_dimension_limit(max_verify_dim)));
  }

  const OrbitDecomposition decomp = orbit_decomposition(shape.base, n);
  const std::vector<EigenangleClass> classes = distinct_eigenangles(decomp);
  for (const auto &c : classes) {
    report.thetas.push_back(c.angle);
  }
  auto &checks = report.checks;

  // Full operator: unitarity and the shift symmetry.
  const UnitaryMatrix u = full_operator_U(shape);
  checks.push_back(check_at_most("full_unitarity", unitarity_defect(u.entries), 1e-12));
  checks.push_back(check_at_most("commutator", shift_commutator_norm(u, shape), 1e-12));

  // Sector blocks: closed form vs explicit product, and their spectra.
  std::map<Turn, BlockSpectrum> block_spectra;
  double direct_gap = 0.0;
  double block_defect = 0.0;
  for (const auto &c : classes) {
    const BlockSpec spec(c.angle, shape.n1);
    const UnitaryMatrix composed = block_operator_composed(spec);
    const UnitaryMatrix direct = block_operator_direct(spec);
    direct_gap = std::max(direct_gap,
                          max_entry_distance(direct.entries, composed.entries));
    block_defect = std::max(block_defect, unitarity_defect(composed.entries));
    BlockSpectrum spectrum = eigendecompose_unitary(composed, spec.theta());
    report.blocks.push_back({c.angle, spectrum.residual,
                             spectrum.orthonormality_defect, 0, 0});
    block_spectra.emplace(c.angle, std::move(spectrum));
  }
  checks.push_back(check_at_most("direct_vs_composed", direct_gap, 1e-12));
  checks.push_back(check_at_most("block_unitarity", block_defect, 1e-12));
  checks.push_back(check_at_most("block_residual", report.residual_max(), 1e-8));

  // Block-diagonalization: full spectrum = union of sector spectra.
  const BlockSpectrum full = eigendecompose_unitary(u);
  std::vector<double> union_angles;
  for (const auto &c : classes) {
    const auto &angles = block_spectra.at(c.angle).eigenangles;
    for (std::uint64_t rep = 0; rep < c.multiplicity; ++rep) {
      union_angles.insert(union_angles.end(), angles.begin(), angles.end());
    }
  }
  checks.push_back(check_at_most(
      "block_spectrum_match",
      angle_multiset_distance(full.eigenangles, union_angles), 1e-8));

  // Shift eigenbasis.
  const std::vector<ShiftEigenpair> pairs = shift_eigenbasis(decomp, shape.second_dim());
  const ComplexMatrix s = shift_matrix(shape.base, n, shape.second_dim()).entries;
  double shift_residual = 0.0;
  ComplexMatrix basis(shape.second_dim(), static_cast<Eigen::Index>(pairs.size()));
  ComplexMatrix rebuilt = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto &p = pairs[i];
    const Complex lambda = std::polar(1.0, p.theta());
    shift_residual = std::max(shift_residual, (s * p.vector - lambda * p.vector).norm());
    basis.col(static_cast<Eigen::Index>(i)) = p.vector;
    const ComplexVector head = p.vector.head(n);
    rebuilt += lambda * head * head.adjoint();
  }
  const ComplexMatrix gram = basis.adjoint() * basis;
  checks.push_back(check_at_most("shift_eigen_residual", shift_residual, 1e-12));
  checks.push_back(check_at_most(
      "shift_orthonormality",
      (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(),
      1e-12));
  checks.push_back(check_at_most(
      "shift_reconstruction",
      max_entry_distance(rebuilt, s.topLeftCorner(n, n)), 1e-10));
  std::uint64_t periodicity_failures = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t image = k;
    for (std::uint64_t step = 0; step < decomp.order; ++step) {
      image = mul_mod(shape.base, image, n);
    }
    periodicity_failures += image != k ? 1 : 0;
  }
  checks.push_back(check_at_most("shift_periodicity",
                                 static_cast<double>(periodicity_failures), 0.0));

  // Product states |phi_l>|s_j> are eigenvectors of U.
  ComplexMatrix products(d * n, d * n);
  ComplexVector product_values(d * n);
  Eigen::Index col = 0;
  for (const auto &p : pairs) {
    const BlockSpectrum &block = block_spectra.at(p.angle);
    for (std::uint64_t l = 0; l < d; ++l, ++col) {
      for (std::uint64_t j = 0; j < d; ++j) {
        for (std::uint64_t k = 0; k < n; ++k) {
          products(j * n + k, col) = block.eigenvectors(j, l) * p.vector(k);
        }
      }
      product_values(col) = std::polar(1.0, block.eigenangles[l]);
    }
  }
  const ComplexMatrix product_image = u.entries * products;
  double product_residual = 0.0;
  for (Eigen::Index c = 0; c < products.cols(); ++c) {
    product_residual = std::max(
        product_residual,
        (product_image.col(c) - product_values(c) * products.col(c)).norm());
  }
  checks.push_back(check_at_most("product_state_residual", product_residual, 1e-10));

  // Utilde spectrum from cycle structure.
  const UtildeSpectrum utilde = utilde_eigenvalues(shape);
  double off_order = 0.0;
  std::uint64_t unit_multiplicity = 0;
  std::int64_t lcm = 1;
  for (const auto &entry : utilde.nontrivial) {
    if (decomp.order % static_cast<std::uint64_t>(entry.angle.den()) != 0) {
      off_order += 1.0;
    }
    if (entry.angle.num() == 0) {
      unit_multiplicity = entry.multiplicity;
    }
    lcm = std::lcm(lcm, entry.angle.den());
  }
  checks.push_back(check_at_most("utilde_roots_of_order", off_order, 0.0));
  checks.push_back(check_at_most(
      "utilde_sector_size",
      std::abs(static_cast<double>(utilde.nontrivial_size()) -
               static_cast<double>(d * n)),
      0.0));
  checks.push_back(check_at_most(
      "utilde_unit_degeneracy",
      std::max(0.0, static_cast<double>(d) - static_cast<double>(unit_multiplicity)),
      0.0));
  checks.push_back(check_at_most(
      "utilde_equal_spacing",
      std::abs(static_cast<double>(utilde.nontrivial.size()) - static_cast<double>(lcm)),
      0.0));
  if (d * n <= max_utilde_dense_dim) {
    const BlockSpectrum dense = eigendecompose_unitary(full_operator_Utilde(shape));
    std::vector<double> cycle_angles;
    for (const Complex &z : utilde.expand_nontrivial()) {
      cycle_angles.push_back(std::arg(z));
    }
    checks.push_back(check_at_most(
        "utilde_dense_match",
        angle_multiset_distance(dense.eigenangles, cycle_angles), 1e-8));
  }

  if (!config.output_dir.empty()) {
    prepare_output(config);
    report.files = {"verify_report.json"};
    write_text(config.output_dir / "verify_report.json",
               report.to_json().dump(2) + "\n");
  }

  if (throw_on_failure && !report.passed()) {
    std::string failed;
    for (const auto &c : checks) {
      if (!c.passed) {
        failed += (failed.empty() ? "" : ", ") + c.name + " (" +
                  std::to_string(c.value) + " > " + std::to_string(c.threshold) + ")";
      }
    }
    throw Error(Errc::verification_failure, failed);
  }
  return report;
}

} // namespace shor_spectra

#include "shor_spectra/error.hpp"
#include "shor_spectra/experiment.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>

using namespace shor_spectra;

namespace {

std::filesystem::path scratch_dir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("shor_spectra_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

Errc error_code(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::domain_error;
}

} // namespace

TEST_CASE("theta parsing") {
  CHECK(parse_thetas("paper").selector == ThetaSelector::defaults);
  CHECK(parse_thetas("all").selector == ThetaSelector::all);
  CHECK(parse_thetas("seeds").selector == ThetaSelector::seeds);
  const auto list = parse_thetas("-10/28, 0, 2/28");
  REQUIRE(list.selector == ThetaSelector::explicit_list);
  CHECK(list.turns == std::vector<Turn>{Turn(9, 14), Turn(0, 1), Turn(1, 14)});
  CHECK(error_code([] { parse_thetas("1/x"); }) == Errc::invalid_config);
  CHECK(error_code([] { parse_thetas("1/0"); }) == Errc::invalid_config);
  CHECK(error_code([] { parse_thetas("1/2,,3/4"); }) == Errc::invalid_config);
}

TEST_CASE("default angles") {
  const auto t = default_thetas();
  REQUIRE(t.size() == 5);
  CHECK(t[0].radians() == doctest::Approx(36 * std::numbers::pi / 28));
  CHECK(t[1] == Turn(0, 1));
  CHECK(t[4].radians() == doctest::Approx(14 * std::numbers::pi / 28));
}

TEST_CASE("theta resolution against the S spectrum") {
  ExperimentConfig config;
  config.n1 = 4;
  CHECK(resolve_thetas(config) == default_thetas());

  config.thetas = parse_thetas("all");
  CHECK(resolve_thetas(config).size() == 28);

  config.modulus = 31;
  config.thetas = parse_thetas("seeds");
  CHECK(resolve_thetas(config) == std::vector<Turn>{Turn(0, 1), Turn(1, 5)});

  config.thetas = parse_thetas("1/3");
  try {
    resolve_thetas(config);
    FAIL("expected InvalidTheta");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::invalid_theta);
    CHECK(std::string(e.what()).find("nearest valid angle is 2*pi*2/5") !=
          std::string::npos);
  }

  config.modulus = 29;
  config.thetas = parse_thetas("paper");
  config.n1 = 0;
  CHECK(error_code([&] { resolve_thetas(config); }) == Errc::invalid_config);
  config.n1 = 4;
  config.state_index = 16;
  CHECK(error_code([&] { config.validate(); }) == Errc::invalid_config);
  config.state_index.reset();
  config.base = 29 * 2;
  CHECK(error_code([&] { config.validate(); }) == Errc::invalid_config);
}

TEST_CASE("fig1 on a single sector counts 2^n1 - 1 spacings") {
  ExperimentConfig config;
  config.thetas = parse_thetas("0/1");
  const auto report = run_fig1(config);
  CHECK(report.spacing_count == 1023);
  CHECK(report.blocks.size() == 1);
  CHECK(report.passed());
}

TEST_CASE("fig1 writes its outputs") {
  ExperimentConfig config;
  config.n1 = 6;
  config.output_dir = scratch_dir("fig1");
  config.include_wraparound = true;
  const auto report = run_fig1(config);
  CHECK(report.spacing_count == 5 * 64);
  // with the wrap-around spacing every block already has unit mean
  CHECK(report.raw_mean == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto &f : report.files) {
    CHECK(std::filesystem::exists(config.output_dir / f));
  }
  std::ifstream in(config.output_dir / "fig1_report.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j["params"]["N"] == 29);
  CHECK(j["params"]["thetas"].size() == 5);
  CHECK(j["counts"]["spacings"] == 320);
  CHECK(j["ks"].contains("cue"));
  CHECK(j["ks"].contains("goe"));
  CHECK(j["ks"].contains("poisson"));
  CHECK(j.contains("degeneracies"));
  CHECK(j.contains("residual_max"));

  std::ifstream hist(config.output_dir / "histogram.csv");
  std::string header;
  std::getline(hist, header);
  CHECK(header == "bin_center,density");
  std::ifstream spacings(config.output_dir / "spacings.csv");
  std::getline(spacings, header);
  CHECK(header == "s");
  std::filesystem::remove_all(config.output_dir);
}

TEST_CASE("fig23 intensity report") {
  ExperimentConfig config;
  config.n1 = 8;
  config.output_dir = scratch_dir("fig23");
  const auto report = run_fig23(config);
  REQUIRE(report.intensity);
  CHECK(report.intensity->length == 256);
  CHECK(report.intensity->state_index == 128);
  CHECK(report.intensity->angle == Turn(9, 14));
  CHECK(report.intensity->mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.intensity->ks_exponential < 0.12);

  std::ifstream cdf(config.output_dir / "cumulative.csv");
  std::string header;
  std::getline(cdf, header);
  CHECK(header == "x,xi");
  std::filesystem::remove_all(config.output_dir);

  config.output_dir.clear();
  config.state_theta = Turn(1, 4);
  config.state_index = 3;
  const auto other = run_fig23(config);
  CHECK(other.intensity->angle == Turn(1, 4));
  CHECK(other.intensity->state_index == 3);
}

TEST_CASE("a flat eigenstate is flagged as non-random") {
  IntensityRecord flat;
  flat.intensities.assign(1024, 1.0);
  const auto summary = summarize_intensities(flat, Turn(0, 1));
  CHECK(summary.ks_exponential == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(summary.ks_exponential > 0.5);
}

TEST_CASE("verify battery on small shapes") {
  ExperimentConfig config;
  config.base = 2;
  SUBCASE("n1=3, N=3") {
    config.n1 = 3;
    config.modulus = 3;
    const auto report = run_verify(config);
    CHECK(report.passed());
    CHECK(report.thetas == std::vector<Turn>{Turn(0, 1), Turn(1, 2)});
  }
  SUBCASE("n1=2, N=31") {
    config.n1 = 2;
    config.modulus = 31;
    const auto report = run_verify(config);
    CHECK(report.passed());
    CHECK(report.thetas.size() == 5);
  }
  SUBCASE("too large") {
    config.n1 = 8;
    config.modulus = 29;
    CHECK(error_code([&] { run_verify(config); }) == Errc::invalid_config);
  }
}

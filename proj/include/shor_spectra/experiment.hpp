#pragma once

#include "shor_spectra/numtheory.hpp"
#include "shor_spectra/spectral_stats.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shor_spectra {

enum class ThetaSelector { defaults, all, seeds, explicit_list };

struct ThetaSelection {
  ThetaSelector selector = ThetaSelector::defaults;
  std::vector<Turn> turns; // only for explicit_list
};

// "paper", "all", "seeds", or comma-separated p/q meaning 2*pi*p/q.
// Throws InvalidConfig on malformed input.
ThetaSelection parse_thetas(std::string_view text);

// The five sector angles of the n1 = 10, N = 29 study, as turns:
// -10/28, 0, 2/28, 3/28, 7/28.
std::vector<Turn> default_thetas();

struct ExperimentConfig {
  int n1 = 10;
  std::uint64_t modulus = 29;
  std::uint64_t base = 2;
  ThetaSelection thetas;
  double bin_width = 0.25;
  double histogram_max = 4.0;
  bool include_wraparound = false;
  // Empty means run without writing files.
  std::filesystem::path output_dir;
  // Eigenstate for the intensity study. The sector defaults to the first
  // theta and the index (by sorted eigenangle) to the middle of the
  // spectrum: index 0 is the eigenvalue-1 state, which is exactly flat in
  // every sector and so never typical.
  std::optional<Turn> state_theta;
  std::optional<std::size_t> state_index;

  std::size_t resolved_state_index() const;

  // Throws InvalidConfig for out-of-range parameters.
  void validate() const;
};

// Sector angles selected by the config, validated against the S spectrum.
// Throws InvalidTheta naming the nearest valid angle.
std::vector<Turn> resolve_thetas(const ExperimentConfig &config);

struct BlockSummary {
  Turn angle;
  double residual = 0.0;
  double orthonormality_defect = 0.0;
  std::size_t degeneracies = 0;
  std::size_t spacing_count = 0;
};

struct KsSummary {
  double cue = 0.0;
  double goe = 0.0;
  double poisson = 0.0;
};

struct IntensitySummary {
  Turn angle;
  std::size_t state_index = 0;
  std::size_t length = 0;
  double mean = 0.0;
  // sup |xi(x) - (1 - e^{-x})| including left limits at each step
  double ks_exponential = 0.0;
};

IntensitySummary summarize_intensities(const IntensityRecord &record, Turn angle);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct ExperimentReport {
  std::string experiment;
  ExperimentConfig config;
  std::vector<Turn> thetas;
  std::vector<BlockSummary> blocks;
  std::size_t spacing_count = 0;
  std::size_t histogram_overflow = 0;
  // Pooled mean before the global unit-mean rescale.
  double raw_mean = 0.0;
  std::optional<KsSummary> ks;
  // KS distances of the spacings before the global rescale.
  std::optional<KsSummary> ks_unrescaled;
  std::optional<IntensitySummary> intensity;
  std::vector<CheckResult> checks;
  std::vector<std::string> files;

  double residual_max() const;
  std::size_t degeneracies() const;
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

// Spacing statistics over the selected sectors (histogram, reference
// curves, KS distances).
ExperimentReport run_fig1(const ExperimentConfig &config);

// Intensity statistics for one eigenstate of one sector.
ExperimentReport run_fig23(const ExperimentConfig &config);

// Cross-check battery on a small shape. Writes the report, then throws
// VerificationFailure if any check failed and `throw_on_failure` is set.
ExperimentReport run_verify(const ExperimentConfig &config,
                            bool throw_on_failure = true);

std::string to_string(const Turn &turn);

} // namespace shor_spectra

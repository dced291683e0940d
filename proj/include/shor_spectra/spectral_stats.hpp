#pragma once

#include "shor_spectra/operators.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace shor_spectra {

/// Complete eigensystem of a unitary. Eigenangles lie in [0, 2*pi) and are
/// sorted ascending; column i of `eigenvectors` belongs to eigenangles[i]
/// and has its first non-negligible component real and positive.
struct BlockSpectrum {
  double theta = 0.0;
  std::vector<double> eigenangles;
  ComplexMatrix eigenvectors;
  // max_i |M v_i - e^{i alpha_i} v_i|_2
  double residual = 0.0;
  // max |V^dagger V - Id|
  double orthonormality_defect = 0.0;

  std::size_t size() const { return eigenangles.size(); }
};

// Diagonalizes via a complex Schur decomposition; for a normal input the
// Schur vectors are an orthonormal eigenbasis even inside degenerate
// clusters. `theta` only labels the result.
BlockSpectrum eigendecompose_unitary(const UnitaryMatrix &m, double theta = 0.0);

// max |M - V diag(e^{i alpha}) V^dagger|
double reconstruction_error(const ComplexMatrix &m, const BlockSpectrum &spectrum);

// Consecutive eigenangle differences scaled by size/(2 pi). Without
// wrap-around a spectrum of L levels gives L - 1 spacings.
std::vector<double> normalized_spacings(const BlockSpectrum &spectrum,
                                        bool include_wraparound = false);

/// Spacings pooled from several blocks and rescaled to unit mean.
struct SpacingEnsemble {
  std::vector<double> spacings;
  std::size_t source_count = 0;
  std::size_t raw_count = 0;
  // Mean of the pooled spacings before the global rescale.
  double raw_mean = 0.0;
};

SpacingEnsemble pool_ensemble(const std::vector<std::vector<double>> &spacing_lists);

// Number of spacings below `tolerance`, i.e. numerically degenerate levels.
std::size_t count_degeneracies(std::span<const double> spacings,
                               double tolerance = 1e-8);

enum class Reference { cue, goe, poisson, exponential };

std::string_view to_string(Reference reference);

// p(s) = 32 s^2 / pi^2 exp(-4 s^2 / pi)
double wigner_cue_pdf(double s);
// erf(2s/sqrt(pi)) - (4s/pi) exp(-4 s^2 / pi)
double wigner_cue_cdf(double s);
double wigner_goe_pdf(double s);
double wigner_goe_cdf(double s);
double poisson_pdf(double s);
double poisson_cdf(double s);

double reference_pdf(Reference reference, double s);
double reference_cdf(Reference reference, double s);

// Two-sided Kolmogorov-Smirnov distance between the empirical distribution
// of `samples` and `cdf`.
double ks_distance(std::span<const double> samples,
                   const std::function<double(double)> &cdf);

struct HistogramBin {
  double center = 0.0;
  double density = 0.0;
};

struct Histogram {
  double bin_width = 0.0;
  std::vector<HistogramBin> bins;
  // Samples at or beyond the last bin edge.
  std::size_t overflow = 0;
  std::size_t sample_count = 0;
};

// Densities are counts / (n * bin_width), n including overflow samples.
Histogram histogram(std::span<const double> samples, double bin_width = 0.25,
                    double max_value = 4.0);

struct DistributionComparison {
  double ks_statistic = 0.0;
  Reference reference = Reference::cue;
  std::size_t sample_size = 0;
  Histogram histogram;
};

DistributionComparison compare_to_reference(std::span<const double> samples,
                                            Reference reference,
                                            double bin_width = 0.25,
                                            double max_value = 4.0);

/// x_m = dim * |<m|phi>|^2 for one eigenvector; mean 1.
struct IntensityRecord {
  std::vector<double> intensities;
  double theta = 0.0;
  std::size_t state_index = 0;
};

IntensityRecord intensity_record(const BlockSpectrum &spectrum, std::size_t index);

struct CdfPoint {
  double x = 0.0;
  double xi = 0.0;
};

// Empirical CDF at each distinct intensity (ties collapse to one point).
std::vector<CdfPoint> cumulative_distribution(const IntensityRecord &record);

} // namespace shor_spectra

namespace shor_spectra {

// Largest circular distance between two eigenangle multisets after sorting
// both; pairings shifted by a few positions around the circle are also
// tried so that a level straddling 0 / 2*pi does not break the match.
// Returns +inf when the sizes differ.
double angle_multiset_distance(std::vector<double> a, std::vector<double> b);

} // namespace shor_spectra

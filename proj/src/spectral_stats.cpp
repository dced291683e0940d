#include "shor_spectra/spectral_stats.hpp"

#include "shor_spectra/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace shor_spectra {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
constexpr std::size_t max_eigen_dim = 4096;
constexpr double unitarity_tolerance = 1e-10;
// Components below this modulus are skipped when fixing the phase gauge.
constexpr double gauge_tolerance = 1e-8;

void require_nonnegative(double s, std::string_view what) {
  if (!(s >= 0.0)) {
    throw Error(Errc::domain_error,
                std::string(what) + " needs s >= 0, got " + std::to_string(s));
  }
}

} // namespace

BlockSpectrum eigendecompose_unitary(const UnitaryMatrix &m, double theta) {
  const Eigen::Index n = m.dim();
  if (n == 0) {
    throw Error(Errc::empty_spectrum, "cannot diagonalize an empty matrix");
  }
  if (m.entries.cols() != n) {
    throw Error(Errc::bad_dimension, "matrix is not square");
  }
  check_dense_dimension(static_cast<std::size_t>(n), max_eigen_dim,
                        "eigendecompose_unitary");
  const double defect = unitarity_defect(m.entries);
  if (defect > unitarity_tolerance) {
    throw Error(Errc::not_unitary,
                m.label + " has unitarity defect " + std::to_string(defect));
  }

  ComplexMatrix schur = m.entries;
  ComplexMatrix vectors(n, n);
  ComplexVector values(n);
  lapack_int sdim = 0;
  const auto ln = static_cast<lapack_int>(n);
  const lapack_int info =
      LAPACKE_zgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, ln, schur.data(), ln,
                    &sdim, values.data(), vectors.data(), ln);
  if (info != 0) {
    throw Error(Errc::convergence_failure,
                "zgees returned " + std::to_string(info) + " for " + m.label);
  }

  std::vector<double> angles(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    angles[i] = normalize_angle(std::arg(values(i)));
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return angles[a] < angles[b];
                   });

  BlockSpectrum spectrum;
  spectrum.theta = theta;
  spectrum.eigenangles.resize(n);
  spectrum.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    spectrum.eigenangles[i] = angles[order[i]];
    ComplexVector v = vectors.col(order[i]);
    for (Eigen::Index c = 0; c < n; ++c) {
      const double modulus = std::abs(v(c));
      if (modulus > gauge_tolerance) {
        v *= std::conj(v(c)) / modulus;
        v(c) = modulus;
        break;
      }
    }
    spectrum.eigenvectors.col(i) = v;
  }

  const ComplexMatrix image = m.entries * spectrum.eigenvectors;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lambda = std::polar(1.0, spectrum.eigenangles[i]);
    const double r =
        (image.col(i) - lambda * spectrum.eigenvectors.col(i)).norm();
    spectrum.residual = std::max(spectrum.residual, r);
  }
  spectrum.orthonormality_defect = unitarity_defect(spectrum.eigenvectors);
  return spectrum;
}

double reconstruction_error(const ComplexMatrix &m, const BlockSpectrum &spectrum) {
  const Eigen::Index n = static_cast<Eigen::Index>(spectrum.size());
  ComplexVector lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lambda(i) = std::polar(1.0, spectrum.eigenangles[i]);
  }
  const ComplexMatrix rebuilt = spectrum.eigenvectors * lambda.asDiagonal() *
                                spectrum.eigenvectors.adjoint();
  return max_entry_distance(m, rebuilt);
}

std::vector<double> normalized_spacings(const BlockSpectrum &spectrum,
                                        bool include_wraparound) {
  const auto &angles = spectrum.eigenangles;
  if (angles.empty() || (angles.size() == 1 && !include_wraparound)) {
    throw Error(Errc::empty_spectrum, "spectrum has no spacings");
  }
  const double scale = static_cast<double>(angles.size()) / two_pi;
  std::vector<double> spacings;
  spacings.reserve(angles.size());
  for (std::size_t i = 1; i < angles.size(); ++i) {
    spacings.push_back((angles[i] - angles[i - 1]) * scale);
  }
  if (include_wraparound) {
    spacings.push_back((angles.front() + two_pi - angles.back()) * scale);
  }
  return spacings;
}

SpacingEnsemble pool_ensemble(const std::vector<std::vector<double>> &spacing_lists) {
  SpacingEnsemble ensemble;
  for (const auto &list : spacing_lists) {
    if (list.empty()) {
      throw Error(Errc::empty_spectrum, "cannot pool an empty spacing list");
    }
    ensemble.spacings.insert(ensemble.spacings.end(), list.begin(), list.end());
  }
  if (ensemble.spacings.empty()) {
    throw Error(Errc::empty_spectrum, "no spacing lists to pool");
  }
  ensemble.source_count = spacing_lists.size();
  ensemble.raw_count = ensemble.spacings.size();
  const double total =
      std::accumulate(ensemble.spacings.begin(), ensemble.spacings.end(), 0.0);
  ensemble.raw_mean = total / static_cast<double>(ensemble.raw_count);
  if (ensemble.raw_mean > 0.0) {
    for (double &s : ensemble.spacings) {
      s /= ensemble.raw_mean;
    }
  }
  return ensemble;
}

std::size_t count_degeneracies(std::span<const double> spacings, double tolerance) {
  return static_cast<std::size_t>(
      std::count_if(spacings.begin(), spacings.end(),
                    [tolerance](double s) { return s < tolerance; }));
}

std::string_view to_string(Reference reference) {
  switch (reference) {
  case Reference::cue: return "cue";
  case Reference::goe: return "goe";
  case Reference::poisson: return "poisson";
  case Reference::exponential: return "exponential";
  }
  return "unknown";
}

double wigner_cue_pdf(double s) {
  require_nonnegative(s, "wigner_cue_pdf");
  return 32.0 * s * s / (pi * pi) * std::exp(-4.0 * s * s / pi);
}

double wigner_cue_cdf(double s) {
  require_nonnegative(s, "wigner_cue_cdf");
  return std::erf(2.0 * s / std::sqrt(pi)) -
         4.0 * s / pi * std::exp(-4.0 * s * s / pi);
}

double wigner_goe_pdf(double s) {
  require_nonnegative(s, "wigner_goe_pdf");
  return pi * s / 2.0 * std::exp(-pi * s * s / 4.0);
}

double wigner_goe_cdf(double s) {
  require_nonnegative(s, "wigner_goe_cdf");
  return -std::expm1(-pi * s * s / 4.0);
}

double poisson_pdf(double s) {
  require_nonnegative(s, "poisson_pdf");
  return std::exp(-s);
}

double poisson_cdf(double s) {
  require_nonnegative(s, "poisson_cdf");
  return -std::expm1(-s);
}

double reference_pdf(Reference reference, double s) {
  switch (reference) {
  case Reference::cue: return wigner_cue_pdf(s);
  case Reference::goe: return wigner_goe_pdf(s);
  case Reference::poisson:
  case Reference::exponential: return poisson_pdf(s);
  }
  return 0.0;
}

double reference_cdf(Reference reference, double s) {
  switch (reference) {
  case Reference::cue: return wigner_cue_cdf(s);
  case Reference::goe: return wigner_goe_cdf(s);
  case Reference::poisson:
  case Reference::exponential: return poisson_cdf(s);
  }
  return 0.0;
}

double ks_distance(std::span<const double> samples,
                   const std::function<double(double)> &cdf) {
  if (samples.empty()) {
    throw Error(Errc::empty_spectrum, "ks_distance needs samples");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n;
    worst = std::max({worst, above - f, f - below});
  }
  return worst;
}

Histogram histogram(std::span<const double> samples, double bin_width,
                    double max_value) {
  if (!(bin_width > 0.0) || !(max_value > 0.0)) {
    throw Error(Errc::domain_error, "histogram needs positive bin width and range");
  }
  const auto bin_count =
      static_cast<std::size_t>(std::ceil(max_value / bin_width - 1e-9));
  std::vector<std::size_t> counts(bin_count, 0);
  Histogram result;
  result.bin_width = bin_width;
  result.sample_count = samples.size();
  for (double s : samples) {
    if (s < 0.0) {
      throw Error(Errc::domain_error, "histogram samples must be nonnegative");
    }
    const auto bin = static_cast<std::size_t>(s / bin_width);
    if (bin >= bin_count) {
      ++result.overflow;
    } else {
      ++counts[bin];
    }
  }
  const double norm =
      samples.empty() ? 0.0 : 1.0 / (static_cast<double>(samples.size()) * bin_width);
  result.bins.reserve(bin_count);
  for (std::size_t b = 0; b < bin_count; ++b) {
    result.bins.push_back({(static_cast<double>(b) + 0.5) * bin_width,
                           static_cast<double>(counts[b]) * norm});
  }
  return result;
}

DistributionComparison compare_to_reference(std::span<const double> samples,
                                            Reference reference,
                                            double bin_width, double max_value) {
  DistributionComparison comparison;
  comparison.reference = reference;
  comparison.sample_size = samples.size();
  comparison.ks_statistic = ks_distance(
      samples, [reference](double s) { return reference_cdf(reference, s); });
  comparison.histogram = histogram(samples, bin_width, max_value);
  return comparison;
}

IntensityRecord intensity_record(const BlockSpectrum &spectrum, std::size_t index) {
  if (index >= spectrum.size()) {
    throw Error(Errc::index_out_of_range,
                "eigenstate index " + std::to_string(index) + " of " +
                    std::to_string(spectrum.size()));
  }
  const auto col = spectrum.eigenvectors.col(static_cast<Eigen::Index>(index));
  const double dim = static_cast<double>(col.size());
  IntensityRecord record;
  record.theta = spectrum.theta;
  record.state_index = index;
  record.intensities.reserve(col.size());
  for (Eigen::Index m = 0; m < col.size(); ++m) {
    record.intensities.push_back(dim * std::norm(col(m)));
  }
  return record;
}

std::vector<CdfPoint> cumulative_distribution(const IntensityRecord &record) {
  if (record.intensities.empty()) {
    throw Error(Errc::empty_spectrum, "intensity record is empty");
  }
  std::vector<double> sorted = record.intensities;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CdfPoint> points;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) {
      continue;
    }
    points.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return points;
}

} // namespace shor_spectra

namespace shor_spectra {

double angle_multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.empty()) {
    return 0.0;
  }
  for (double &v : a) {
    v = normalize_angle(v);
  }
  for (double &v : b) {
    v = normalize_angle(v);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::ptrdiff_t shift = -2; shift <= 2; ++shift) {
    double worst = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double other = b[static_cast<std::size_t>(((i + shift) % n + n) % n)];
      const double diff = std::abs(a[static_cast<std::size_t>(i)] - other);
      worst = std::max(worst, std::min(diff, 2.0 * std::numbers::pi - diff));
    }
    best = std::min(best, worst);
  }
  return best;
}

} // namespace shor_spectra

#include "shor_spectra/thue_morse.hpp"

#include "shor_spectra/error.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace shor_spectra {

namespace {

constexpr int max_sequence_n1 = 24;
constexpr int max_column_n1 = 20;

void check_range(int n1, int limit, std::string_view what) {
  if (n1 < 1) {
    throw Error(Errc::bad_dimension, std::string(what) + ": n1 must be >= 1");
  }
  if (n1 > limit) {
    throw Error(Errc::dimension_too_large,
                std::string(what) + ": n1=" + std::to_string(n1) +
                    " exceeds " + std::to_string(limit));
  }
}

} // namespace

SignSequence thue_morse(int n1) {
  check_range(n1, max_sequence_n1, "thue_morse");
  const std::size_t length = std::size_t{1} << n1;
  SignSequence seq;
  seq.rule = "(-1)^popcount(m)";
  seq.values.resize(length);
  for (std::size_t m = 0; m < length; ++m) {
    seq.values[m] = (std::popcount(m) & 1) ? -1 : 1;
  }
  return seq;
}

ComplexVector tm_fourier_column(int n1) {
  check_range(n1, max_column_n1, "tm_fourier_column");
  const std::uint64_t d = std::uint64_t{1} << n1;
  const double scale = 1.0 / static_cast<double>(d);
  ComplexVector column(d);
  for (std::uint64_t k = 0; k < d; ++k) {
    Complex product = scale;
    for (int m = 0; m < n1; ++m) {
      const std::uint64_t turns = (d - ((k << m) & (d - 1))) & (d - 1);
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) /
                           static_cast<double>(d);
      product *= 1.0 - std::polar(1.0, angle);
    }
    column(k) = product;
  }
  return column;
}

std::vector<PeakIntensity> tm_peak_scaling(int n1_min, int n1_max) {
  check_range(n1_min, max_column_n1, "tm_peak_scaling");
  check_range(n1_max, max_column_n1, "tm_peak_scaling");
  std::vector<PeakIntensity> peaks;
  for (int n1 = n1_min; n1 <= n1_max; ++n1) {
    const ComplexVector column = tm_fourier_column(n1);
    const double dim = static_cast<double>(column.size());
    peaks.push_back({n1, dim * column.cwiseAbs2().maxCoeff()});
  }
  return peaks;
}

} // namespace shor_spectra

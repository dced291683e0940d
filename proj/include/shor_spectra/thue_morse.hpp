#pragma once

#include "shor_spectra/operators.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shor_spectra {

struct SignSequence {
  std::vector<int> values;
  std::string rule;
};

// t_m = (-1)^popcount(m), m = 0 .. 2^n1 - 1.
SignSequence thue_morse(int n1);

// Entry k = 2^-n1 prod_m (1 - e^{-2 pi i k 2^m / 2^n1}): the DFT of the
// Thue-Morse signs, and the last column of the theta = 0 block.
ComplexVector tm_fourier_column(int n1);

struct PeakIntensity {
  int n1 = 0;
  double max_intensity = 0.0;
};

// max_k 2^n1 |column_k|^2 for each n1 in [n1_min, n1_max].
std::vector<PeakIntensity> tm_peak_scaling(int n1_min, int n1_max);

} // namespace shor_spectra

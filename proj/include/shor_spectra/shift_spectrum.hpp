#pragma once

#include "shor_spectra/numtheory.hpp"
#include "shor_spectra/operators.hpp"

#include <cstdint>
#include <vector>

namespace shor_spectra {

/// Eigenvector of the shift permutation built from one orbit. For an orbit
/// of length rho seeded at i0, harmonic j has component
/// e^{-2 pi i j n / rho} / sqrt(rho) on x^n * i0 mod N and eigenvalue
/// e^{2 pi i j / rho}.
struct ShiftEigenpair {
  Turn angle;
  ComplexVector vector;
  std::uint64_t orbit_seed = 0;
  std::uint64_t harmonic = 0;

  double theta() const { return angle.radians(); }
};

// N orthonormal eigenpairs, orbits in seed order and harmonics 0..rho-1
// within each orbit. Vectors have dimension pad_dim, zero above N.
std::vector<ShiftEigenpair> shift_eigenbasis(const OrbitDecomposition &decomp,
                                             std::uint64_t pad_dim);

struct EigenangleClass {
  Turn angle;
  std::uint64_t multiplicity = 0;
  // Seeds of the orbits contributing to this angle.
  std::vector<std::uint64_t> seeds;

  double theta() const { return angle.radians(); }
};

// Sorted distinct eigenangles of S with multiplicities summing to N.
std::vector<EigenangleClass> distinct_eigenangles(const OrbitDecomposition &decomp);

} // namespace shor_spectra

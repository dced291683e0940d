#include "shor_spectra/shift_spectrum.hpp"

#include "shor_spectra/error.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace shor_spectra {

std::vector<ShiftEigenpair> shift_eigenbasis(const OrbitDecomposition &decomp,
                                             std::uint64_t pad_dim) {
  if (pad_dim < decomp.modulus) {
    throw Error(Errc::bad_dimension,
                "pad dimension " + std::to_string(pad_dim) +
                    " is smaller than the modulus " +
                    std::to_string(decomp.modulus));
  }
  std::vector<ShiftEigenpair> pairs;
  pairs.reserve(decomp.modulus);
  for (const Orbit &orbit : decomp.orbits) {
    const std::uint64_t rho = orbit.length();
    const double norm = 1.0 / std::sqrt(static_cast<double>(rho));
    for (std::uint64_t j = 0; j < rho; ++j) {
      ShiftEigenpair pair;
      pair.angle = Turn(static_cast<std::int64_t>(j),
                        static_cast<std::int64_t>(rho));
      pair.orbit_seed = orbit.seed;
      pair.harmonic = j;
      pair.vector = ComplexVector::Zero(pad_dim);
      for (std::uint64_t n = 0; n < rho; ++n) {
        // Reduce j*n mod rho before converting to an angle.
        const std::uint64_t turns = (rho - (j * n) % rho) % rho;
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>(turns) /
                             static_cast<double>(rho);
        pair.vector(orbit.elements[n]) = std::polar(norm, angle);
      }
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

std::vector<EigenangleClass> distinct_eigenangles(const OrbitDecomposition &decomp) {
  std::map<Turn, EigenangleClass> classes;
  for (const Orbit &orbit : decomp.orbits) {
    const std::uint64_t rho = orbit.length();
    for (std::uint64_t j = 0; j < rho; ++j) {
      const Turn angle(static_cast<std::int64_t>(j),
                       static_cast<std::int64_t>(rho));
      auto &entry = classes[angle];
      entry.angle = angle;
      ++entry.multiplicity;
      entry.seeds.push_back(orbit.seed);
    }
  }
  std::vector<EigenangleClass> out;
  out.reserve(classes.size());
  for (auto &[angle, entry] : classes) {
    out.push_back(std::move(entry));
  }
  return out;
}

} // namespace shor_spectra

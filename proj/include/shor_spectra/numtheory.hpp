#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace shor_spectra {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// (a * b) mod n without overflow for any 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

// x^j mod N by square-and-multiply.
std::uint64_t mod_exp(std::uint64_t x, std::uint64_t j, std::uint64_t modulus);

// Smallest r > 0 with x^r = 1 (mod N). Throws NotCoprime.
std::uint64_t mult_order(std::uint64_t x, std::uint64_t modulus);

/// One cycle of k -> x*k mod N. `elements[n] = x^n * seed mod N`, so the
/// elements are in powers-of-x order starting at the seed, not sorted.
struct Orbit {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> elements;

  std::uint64_t length() const { return elements.size(); }
};

/// Partition of {0, ..., N-1} into multiplication-by-x cycles, ordered by
/// increasing seed. The seed of each cycle is its smallest element.
struct OrbitDecomposition {
  std::uint64_t modulus = 0;
  std::uint64_t base = 0;
  std::uint64_t order = 0;
  std::vector<Orbit> orbits;
};

OrbitDecomposition orbit_decomposition(std::uint64_t x, std::uint64_t modulus);

/// An angle stored as the exact fraction num/den of a full turn, reduced and
/// normalized so 0 <= num < den. The eigenangles of permutation operators
/// are all of this form.
class Turn {
public:
  Turn() = default;
  Turn(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // 2*pi*num/den in [0, 2*pi).
  double radians() const;

  friend bool operator==(const Turn &, const Turn &) = default;
  friend std::strong_ordering operator<=>(const Turn &a, const Turn &b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace shor_spectra

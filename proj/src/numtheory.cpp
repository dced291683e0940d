#include "shor_spectra/numtheory.hpp"

#include "shor_spectra/error.hpp"

#include <numbers>
#include <numeric>
#include <string>

namespace shor_spectra {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) {
    throw Error(Errc::domain_error, "gcd(0, 0) is undefined");
  }
  return std::gcd(a, b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  const auto wide = static_cast<unsigned __int128>(a) * b;
  return static_cast<std::uint64_t>(wide % n);
}

std::uint64_t mod_exp(std::uint64_t x, std::uint64_t j, std::uint64_t modulus) {
  if (modulus < 2) {
    throw Error(Errc::domain_error, "mod_exp needs modulus >= 2");
  }
  std::uint64_t result = 1;
  std::uint64_t power = x % modulus;
  while (j > 0) {
    if (j & 1U) {
      result = mul_mod(result, power, modulus);
    }
    power = mul_mod(power, power, modulus);
    j >>= 1U;
  }
  return result;
}

namespace {

void require_coprime(std::uint64_t x, std::uint64_t modulus) {
  if (modulus < 2) {
    throw Error(Errc::domain_error,
                "modulus must be >= 2, got " + std::to_string(modulus));
  }
  if (gcd(x, modulus) != 1) {
    throw Error(Errc::not_coprime, std::to_string(x) + " and " +
                                       std::to_string(modulus) +
                                       " share a factor");
  }
}

} // namespace

std::uint64_t mult_order(std::uint64_t x, std::uint64_t modulus) {
  require_coprime(x, modulus);
  const std::uint64_t step = x % modulus;
  std::uint64_t power = step;
  std::uint64_t r = 1;
  while (power != 1) {
    power = mul_mod(power, step, modulus);
    ++r;
  }
  return r;
}

OrbitDecomposition orbit_decomposition(std::uint64_t x, std::uint64_t modulus) {
  OrbitDecomposition decomp;
  decomp.modulus = modulus;
  decomp.base = x;
  decomp.order = mult_order(x, modulus);

  const std::uint64_t step = x % modulus;
  std::vector<bool> visited(modulus, false);
  // Scanning k upward makes the first unvisited element of each cycle its
  // minimum, so seeds come out canonical and already sorted.
  for (std::uint64_t k = 0; k < modulus; ++k) {
    if (visited[k]) {
      continue;
    }
    Orbit orbit;
    orbit.seed = k;
    std::uint64_t element = k;
    do {
      visited[element] = true;
      orbit.elements.push_back(element);
      element = mul_mod(element, step, modulus);
    } while (element != k);
    decomp.orbits.push_back(std::move(orbit));
  }
  return decomp;
}

Turn::Turn(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw Error(Errc::domain_error, "turn denominator must be positive");
  }
  num %= den;
  if (num < 0) {
    num += den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double Turn::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

std::strong_ordering operator<=>(const Turn &a, const Turn &b) {
  const auto lhs = static_cast<__int128>(a.num_) * b.den_;
  const auto rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

} // namespace shor_spectra

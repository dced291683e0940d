#include "shor_spectra/operators.hpp"
#include "shor_spectra/shift_spectrum.hpp"

#include <doctest.h>

#include <numbers>

using namespace shor_spectra;

TEST_CASE("shift eigenbasis for N=29") {
  const auto decomp = orbit_decomposition(2, 29);
  const auto pairs = shift_eigenbasis(decomp, 32);
  REQUIRE(pairs.size() == 29);
  CHECK(pairs[0].orbit_seed == 0);
  CHECK(pairs[0].angle == Turn(0, 1));
  CHECK(pairs[0].vector == ComplexVector::Unit(32, 0));
  for (std::size_t j = 0; j < 28; ++j) {
    CHECK(pairs[j + 1].orbit_seed == 1);
    CHECK(pairs[j + 1].angle == Turn(static_cast<std::int64_t>(j), 28));
  }

  const auto classes = distinct_eigenangles(decomp);
  REQUIRE(classes.size() == 28);
  CHECK(classes[0].multiplicity == 2);
  CHECK(classes[0].seeds == std::vector<std::uint64_t>{0, 1});
  for (std::size_t i = 1; i < classes.size(); ++i) {
    CHECK(classes[i].multiplicity == 1);
  }
}

TEST_CASE("shift spectrum for N=31 is highly degenerate") {
  const auto classes = distinct_eigenangles(orbit_decomposition(2, 31));
  REQUIRE(classes.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(classes[k].angle == Turn(static_cast<std::int64_t>(k), 5));
    CHECK(classes[k].multiplicity == (k == 0 ? 7U : 6U));
  }
}

TEST_CASE("shift eigenbasis for N=3 by hand") {
  const auto pairs = shift_eigenbasis(orbit_decomposition(2, 3), 3);
  REQUIRE(pairs.size() == 3);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(pairs[1].angle == Turn(0, 1));
  CHECK(std::abs(pairs[1].vector(1) - r) < 1e-15);
  CHECK(std::abs(pairs[1].vector(2) - r) < 1e-15);
  CHECK(pairs[2].angle == Turn(1, 2));
  CHECK(std::abs(pairs[2].vector(1) - r) < 1e-15);
  CHECK(std::abs(pairs[2].vector(2) + r) < 1e-15);

  const auto classes = distinct_eigenangles(orbit_decomposition(2, 3));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].multiplicity == 2);
  CHECK(classes[1].theta() == doctest::Approx(std::numbers::pi));
  CHECK(classes[1].multiplicity == 1);
}

TEST_CASE("shift eigenbasis invariants") {
  for (std::uint64_t n : {3ULL, 5ULL, 7ULL, 15ULL, 21ULL, 29ULL, 31ULL, 63ULL, 91ULL}) {
    CAPTURE(n);
    const auto decomp = orbit_decomposition(2, n);
    const std::uint64_t pad = std::uint64_t{1} << min_second_register_qubits(n);
    const auto pairs = shift_eigenbasis(decomp, pad);
    REQUIRE(pairs.size() == n);
    const ComplexMatrix s = shift_matrix(2, n, pad).entries;

    ComplexMatrix basis(pad, static_cast<Eigen::Index>(n));
    ComplexMatrix rebuilt = ComplexMatrix::Zero(pad, pad);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto &p = pairs[i];
      const Complex lambda = std::polar(1.0, p.theta());
      CHECK((s * p.vector - lambda * p.vector).norm() < 1e-12);
      CHECK(p.vector.tail(pad - n).norm() == 0.0);

      const auto &orbit = *std::find_if(decomp.orbits.begin(), decomp.orbits.end(),
                                        [&](const Orbit &o) { return o.seed == p.orbit_seed; });
      const double flat = 1.0 / std::sqrt(static_cast<double>(orbit.length()));
      std::size_t nonzero = 0;
      for (Eigen::Index c = 0; c < p.vector.size(); ++c) {
        if (p.vector(c) != Complex(0.0)) {
          ++nonzero;
          CHECK(std::abs(std::abs(p.vector(c)) - flat) < 1e-15);
        }
      }
      CHECK(nonzero == orbit.length());
      basis.col(static_cast<Eigen::Index>(i)) = p.vector;
      rebuilt += lambda * p.vector * p.vector.adjoint();
    }
    const ComplexMatrix gram = basis.adjoint() * basis;
    CHECK(max_entry_distance(gram, ComplexMatrix::Identity(n, n)) < 1e-12);
    CHECK(max_entry_distance(rebuilt.topLeftCorner(n, n), s.topLeftCorner(n, n)) < 1e-10);

    std::uint64_t total = 0;
    for (const auto &c : distinct_eigenangles(decomp)) {
      total += c.multiplicity;
    }
    CHECK(total == n);
  }
}

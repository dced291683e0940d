#include "shor_spectra/operators.hpp"

#include "shor_spectra/error.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace shor_spectra {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Default dense guards, expressed as matrix dimensions.
constexpr std::size_t max_transform_dim = std::size_t{1} << 14;
constexpr std::size_t max_product_dim = std::size_t{1} << 12;
constexpr std::size_t max_dense_ux_dim = std::size_t{1} << 13;
constexpr std::size_t max_permutation_dim = std::size_t{1} << 20;
constexpr std::size_t max_full_dim = 4096;

// e^{2 pi i num / den} with num reduced modulo den first.
Complex unit_phase(std::uint64_t num, std::uint64_t den) {
  const double fraction =
      static_cast<double>(num % den) / static_cast<double>(den);
  return std::polar(1.0, two_pi * fraction);
}

void check_n1(int n1, std::size_t default_dim, std::string_view what) {
  if (n1 < 1 || n1 > 30) {
    throw Error(Errc::bad_dimension,
                std::string(what) + ": n1 must be in [1, 30]");
  }
  check_dense_dimension(std::size_t{1} << n1, default_dim, what);
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

std::string angle_label(const BlockSpec &spec) {
  if (spec.turn()) {
    return std::to_string(spec.turn()->num()) + "/" +
           std::to_string(spec.turn()->den()) + " turn";
  }
  return std::to_string(spec.theta());
}

} // namespace

double unitarity_defect(const ComplexMatrix &m) {
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.rows(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void RegisterShape::validate() const {
  if (n1 < 1 || n1 > 30 || n2 < 1 || n2 > 62) {
    throw Error(Errc::bad_dimension, "register widths out of range: n1=" +
                                         std::to_string(n1) +
                                         " n2=" + std::to_string(n2));
  }
  if (modulus < 3 || modulus % 2 == 0) {
    throw Error(Errc::bad_dimension,
                "modulus must be odd and >= 3, got " + std::to_string(modulus));
  }
  if (second_dim() < modulus) {
    throw Error(Errc::bad_dimension, "second register of " +
                                         std::to_string(n2) +
                                         " qubits cannot hold residues mod " +
                                         std::to_string(modulus));
  }
  if (gcd(base, modulus) != 1) {
    throw Error(Errc::not_coprime, std::to_string(base) + " and " +
                                       std::to_string(modulus) +
                                       " share a factor");
  }
}

int min_second_register_qubits(std::uint64_t modulus) {
  int n2 = 1;
  while ((std::uint64_t{1} << n2) < modulus) {
    ++n2;
  }
  return n2;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) {
    t += two_pi;
  }
  if (t >= two_pi - 1e-12) {
    t = 0.0;
  }
  return t;
}

BlockSpec::BlockSpec(double theta, int n1)
    : theta_(normalize_angle(theta)), n1_(n1) {
  if (!std::isfinite(theta)) {
    throw Error(Errc::domain_error, "theta must be finite");
  }
  if (n1 < 1 || n1 > 30) {
    throw Error(Errc::bad_dimension, "n1 must be in [1, 30]");
  }
}

BlockSpec::BlockSpec(Turn angle, int n1)
    : theta_(angle.radians()), turn_(angle), n1_(n1) {
  if (n1 < 1 || n1 > 30) {
    throw Error(Errc::bad_dimension, "n1 must be in [1, 30]");
  }
}

Complex BlockSpec::phase(std::uint64_t multiple) const {
  if (turn_) {
    const auto den = static_cast<std::uint64_t>(turn_->den());
    const auto num = static_cast<std::uint64_t>(turn_->num());
    return unit_phase(mul_mod(multiple % den, num, den), den);
  }
  return std::polar(1.0, std::fmod(static_cast<double>(multiple) * theta_,
                                   two_pi));
}

UnitaryMatrix fourier_matrix(int n1) {
  check_n1(n1, max_transform_dim, "fourier_matrix");
  const std::uint64_t d = std::uint64_t{1} << n1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (std::uint64_t j = 0; j < d; ++j) {
    for (std::uint64_t k = 0; k < d; ++k) {
      f(j, k) = scale * unit_phase(j * k, d);
    }
  }
  return {std::move(f), "F(n1=" + std::to_string(n1) + ")"};
}

UnitaryMatrix hadamard_matrix(int n1) {
  check_n1(n1, max_transform_dim, "hadamard_matrix");
  const std::uint64_t d = std::uint64_t{1} << n1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix h(d, d);
  for (std::uint64_t m = 0; m < d; ++m) {
    for (std::uint64_t l = 0; l < d; ++l) {
      h(m, l) = parity(m & l) ? -scale : scale;
    }
  }
  return {std::move(h), "H(n1=" + std::to_string(n1) + ")"};
}

UnitaryMatrix shift_matrix(std::uint64_t x, std::uint64_t modulus,
                           std::uint64_t dim) {
  if (modulus < 2 || gcd(x, modulus) != 1) {
    throw Error(Errc::not_coprime, std::to_string(x) + " is not a unit mod " +
                                       std::to_string(modulus));
  }
  if (dim < modulus) {
    throw Error(Errc::bad_dimension, "shift_matrix dimension " +
                                         std::to_string(dim) +
                                         " is smaller than the modulus");
  }
  check_dense_dimension(dim, max_transform_dim, "shift_matrix");
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const std::uint64_t target = k < modulus ? mul_mod(x, k, modulus) : k;
    s(target, k) = 1.0;
  }
  return {std::move(s), "S(x=" + std::to_string(x) +
                            ",N=" + std::to_string(modulus) +
                            ",dim=" + std::to_string(dim) + ")"};
}

UnitaryMatrix lambda_matrix(const BlockSpec &spec) {
  check_n1(spec.n1(), max_transform_dim, "lambda_matrix");
  const std::uint64_t d = spec.dim();
  ComplexMatrix lambda = ComplexMatrix::Zero(d, d);
  for (std::uint64_t m = 0; m < d; ++m) {
    lambda(m, m) = spec.phase(m);
  }
  return {std::move(lambda), "Lambda(theta=" + angle_label(spec) +
                                 ",n1=" + std::to_string(spec.n1()) + ")"};
}

UnitaryMatrix block_operator_composed(const BlockSpec &spec) {
  check_n1(spec.n1(), max_product_dim, "block_operator_composed");
  const ComplexMatrix f = fourier_matrix(spec.n1()).entries;
  const ComplexMatrix h = hadamard_matrix(spec.n1()).entries;
  const std::uint64_t d = spec.dim();
  ComplexVector diag(d);
  for (std::uint64_t m = 0; m < d; ++m) {
    diag(m) = spec.phase(m);
  }
  ComplexMatrix block = f.adjoint() * (diag.asDiagonal() * h);
  return {std::move(block), "block_composed(theta=" + angle_label(spec) +
                                ",n1=" + std::to_string(spec.n1()) + ")"};
}

UnitaryMatrix block_operator_direct(const BlockSpec &spec) {
  const int n1 = spec.n1();
  check_n1(n1, max_transform_dim, "block_operator_direct");
  const std::uint64_t d = spec.dim();
  const double scale = 1.0 / static_cast<double>(d);

  // factor(k, m) = e^{-2 pi i k 2^m / 2^n1} e^{i theta 2^m}
  std::vector<Complex> theta_phase(n1);
  for (int m = 0; m < n1; ++m) {
    theta_phase[m] = spec.phase(std::uint64_t{1} << m);
  }
  ComplexMatrix block(d, d);
  std::vector<Complex> factor(n1);
  for (std::uint64_t k = 0; k < d; ++k) {
    for (int m = 0; m < n1; ++m) {
      const std::uint64_t num = (d - ((k << m) & (d - 1))) & (d - 1);
      factor[m] = unit_phase(num, d) * theta_phase[m];
    }
    for (std::uint64_t l = 0; l < d; ++l) {
      Complex product = scale;
      for (int m = 0; m < n1; ++m) {
        product *= ((l >> m) & 1U) ? 1.0 - factor[m] : 1.0 + factor[m];
      }
      block(k, l) = product;
    }
  }
  return {std::move(block), "block_direct(theta=" + angle_label(spec) +
                                ",n1=" + std::to_string(n1) + ")"};
}

ModularExponentiation::ModularExponentiation(const RegisterShape &shape)
    : shape_(shape) {
  shape.validate();
  if (shape.n1 + shape.n2 > 62) {
    throw Error(Errc::dimension_too_large, "U_x index space exceeds 64 bits");
  }
  const std::uint64_t d1 = shape.first_dim();
  const std::uint64_t d2 = shape.second_dim();
  check_dense_dimension(d1 * d2, max_permutation_dim,
                        "modular_exponentiation_operator");
  image_.resize(d1 * d2);
  for (std::uint64_t j = 0; j < d1; ++j) {
    const std::uint64_t power = mod_exp(shape.base, j, shape.modulus);
    for (std::uint64_t k = 0; k < d2; ++k) {
      const std::uint64_t target =
          k < shape.modulus ? mul_mod(power, k, shape.modulus) : k;
      image_[j * d2 + k] = j * d2 + target;
    }
  }
}

UnitaryMatrix ModularExponentiation::to_dense() const {
  check_dense_dimension(dim(), max_dense_ux_dim, "U_x dense materialization");
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (std::uint64_t c = 0; c < dim(); ++c) {
    m(image_[c], c) = 1.0;
  }
  return {std::move(m), "U_x(n1=" + std::to_string(shape_.n1) +
                            ",n2=" + std::to_string(shape_.n2) +
                            ",N=" + std::to_string(shape_.modulus) +
                            ",x=" + std::to_string(shape_.base) + ")"};
}

ModularExponentiation modular_exponentiation_operator(const RegisterShape &shape) {
  return ModularExponentiation(shape);
}

namespace {

// (F^-1 (x) Id) U_x (T (x) Id) on the restricted space, where T is the
// first-register input transform given by its entries.
template <typename InputTransform>
ComplexMatrix restricted_sandwich(const RegisterShape &shape,
                                  InputTransform &&input) {
  const std::uint64_t d = shape.first_dim();
  const std::uint64_t n = shape.modulus;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix u = ComplexMatrix::Zero(d * n, d * n);
  // U[(j,k),(j',k')] = sum_m Finv[j][m] T[m][j'] [k == x^m k' mod N]
  for (std::uint64_t m = 0; m < d; ++m) {
    const std::uint64_t power = mod_exp(shape.base, m, n);
    for (std::uint64_t jp = 0; jp < d; ++jp) {
      const Complex t = input(m, jp);
      for (std::uint64_t j = 0; j < d; ++j) {
        const Complex coeff = scale * unit_phase(d - (j * m) % d, d) * t;
        for (std::uint64_t kp = 0; kp < n; ++kp) {
          const std::uint64_t k = mul_mod(power, kp, n);
          u(j * n + k, jp * n + kp) += coeff;
        }
      }
    }
  }
  return u;
}

std::string shape_label(const RegisterShape &shape) {
  return "n1=" + std::to_string(shape.n1) + ",N=" +
         std::to_string(shape.modulus) + ",x=" + std::to_string(shape.base);
}

} // namespace

UnitaryMatrix full_operator_U(const RegisterShape &shape) {
  shape.validate();
  const std::uint64_t d = shape.first_dim();
  check_dense_dimension(d * shape.modulus, max_full_dim, "full_operator_U");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix u = restricted_sandwich(
      shape, [scale](std::uint64_t m, std::uint64_t jp) {
        return Complex(parity(m & jp) ? -scale : scale);
      });
  return {std::move(u), "U(" + shape_label(shape) + ")"};
}

UnitaryMatrix full_operator_Utilde(const RegisterShape &shape) {
  shape.validate();
  const std::uint64_t d = shape.first_dim();
  check_dense_dimension(d * shape.modulus, max_full_dim, "full_operator_Utilde");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix u = restricted_sandwich(
      shape, [scale, d](std::uint64_t m, std::uint64_t jp) {
        return scale * unit_phase(m * jp, d);
      });
  return {std::move(u), "Utilde(" + shape_label(shape) + ")"};
}

double shift_commutator_norm(const UnitaryMatrix &u, const RegisterShape &shape) {
  const std::uint64_t d = shape.first_dim();
  const std::uint64_t n = shape.modulus;
  if (static_cast<std::uint64_t>(u.dim()) != d * n) {
    throw Error(Errc::bad_dimension, "operator does not match register shape");
  }
  // (Id (x) S) sends index j*N + k to j*N + x*k mod N.
  std::vector<std::uint64_t> forward(d * n);
  std::vector<std::uint64_t> inverse(d * n);
  for (std::uint64_t j = 0; j < d; ++j) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::uint64_t from = j * n + k;
      const std::uint64_t to = j * n + mul_mod(shape.base, k, n);
      forward[from] = to;
      inverse[to] = from;
    }
  }
  double worst = 0.0;
  for (std::uint64_t c = 0; c < d * n; ++c) {
    for (std::uint64_t r = 0; r < d * n; ++r) {
      const Complex us = u.entries(r, forward[c]);
      const Complex su = u.entries(inverse[r], c);
      worst = std::max(worst, std::abs(us - su));
    }
  }
  return worst;
}

std::uint64_t UtildeSpectrum::nontrivial_size() const {
  std::uint64_t total = 0;
  for (const auto &entry : nontrivial) {
    total += entry.multiplicity;
  }
  return total;
}

std::vector<Complex> UtildeSpectrum::expand_nontrivial() const {
  std::vector<Complex> values;
  values.reserve(nontrivial_size());
  for (const auto &entry : nontrivial) {
    const Complex z = std::polar(1.0, entry.angle.radians());
    values.insert(values.end(), entry.multiplicity, z);
  }
  return values;
}

UtildeSpectrum utilde_eigenvalues(const RegisterShape &shape) {
  shape.validate();
  const std::uint64_t d = shape.first_dim();
  const std::uint64_t n = shape.modulus;

  // S^j multiplies by p = x^j mod N; p cycles with period r, so the cycle
  // structure of each distinct p is computed once.
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> cycles_by_power;
  std::map<Turn, std::uint64_t> counts;
  for (std::uint64_t j = 0; j < d; ++j) {
    const std::uint64_t power = mod_exp(shape.base, j, n);
    auto [it, inserted] = cycles_by_power.try_emplace(power);
    if (inserted) {
      for (const Orbit &orbit : orbit_decomposition(power, n).orbits) {
        ++it->second[orbit.length()];
      }
    }
    for (const auto &[length, count] : it->second) {
      for (std::uint64_t q = 0; q < length; ++q) {
        counts[Turn(static_cast<std::int64_t>(q),
                    static_cast<std::int64_t>(length))] += count;
      }
    }
  }

  UtildeSpectrum spectrum;
  for (const auto &[angle, multiplicity] : counts) {
    spectrum.nontrivial.push_back({angle, multiplicity});
  }
  spectrum.trivial_multiplicity = d * (shape.second_dim() - n);
  return spectrum;
}

} // namespace shor_spectra

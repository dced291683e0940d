#pragma once

#include "shor_spectra/numtheory.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shor_spectra {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Dense unitary with a provenance label. Entry (k, l) is row k, column l.
struct UnitaryMatrix {
  ComplexMatrix entries;
  std::string label;

  Eigen::Index dim() const { return entries.rows(); }
};

// max |(M^dagger M - Id)_{kl}|
double unitarity_defect(const ComplexMatrix &m);

// max |a_{kl} - b_{kl}|
double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Sizes of the two registers of the order-finding circuit and the
/// arithmetic it performs. The second register holds residues 0..N-1, so
/// 2^n2 >= N.
struct RegisterShape {
  int n1 = 1;
  int n2 = 1;
  std::uint64_t modulus = 3;
  std::uint64_t base = 2;

  // Throws BadDimension / NotCoprime on an inconsistent shape.
  void validate() const;

  std::uint64_t first_dim() const { return std::uint64_t{1} << n1; }
  std::uint64_t second_dim() const { return std::uint64_t{1} << n2; }
};

// Smallest n2 with 2^n2 >= modulus.
int min_second_register_qubits(std::uint64_t modulus);

/// One symmetry sector: the S eigenangle theta (normalized to [0, 2*pi))
/// and the first-register width.
class BlockSpec {
public:
  BlockSpec(double theta, int n1);
  // Keeps the exact fraction so phases e^{i m theta} reduce exactly.
  BlockSpec(Turn angle, int n1);

  double theta() const { return theta_; }
  const std::optional<Turn> &turn() const { return turn_; }
  int n1() const { return n1_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n1_; }

  // e^{i * multiple * theta}
  Complex phase(std::uint64_t multiple) const;

private:
  double theta_;
  std::optional<Turn> turn_;
  int n1_;
};

// Maps an angle to [0, 2*pi); values within 1e-12 of 2*pi become 0.
double normalize_angle(double theta);

UnitaryMatrix fourier_matrix(int n1);
UnitaryMatrix hadamard_matrix(int n1);
UnitaryMatrix shift_matrix(std::uint64_t x, std::uint64_t modulus,
                           std::uint64_t dim);
UnitaryMatrix lambda_matrix(const BlockSpec &spec);

// F^dagger * Lambda * H by explicit matrix products.
UnitaryMatrix block_operator_composed(const BlockSpec &spec);

// The same matrix from the closed-form product over the binary digits of l.
UnitaryMatrix block_operator_direct(const BlockSpec &spec);

/// U_x as an index permutation on the full 2^n1 * 2^n2 space. The basis
/// state |j>|k> has index j * 2^n2 + k.
class ModularExponentiation {
public:
  explicit ModularExponentiation(const RegisterShape &shape);

  const RegisterShape &shape() const { return shape_; }
  std::uint64_t dim() const { return image_.size(); }

  // Index of U_x |index>.
  std::uint64_t apply(std::uint64_t index) const { return image_[index]; }
  const std::vector<std::uint64_t> &image() const { return image_; }

  UnitaryMatrix to_dense() const;

private:
  RegisterShape shape_;
  std::vector<std::uint64_t> image_;
};

ModularExponentiation modular_exponentiation_operator(const RegisterShape &shape);

// (F^-1 (x) Id) U_x (H (x) Id) restricted to second-register indices < N.
// Index of |j>|k> is j * N + k.
UnitaryMatrix full_operator_U(const RegisterShape &shape);

// (F^-1 (x) Id) U_x (F (x) Id), same restriction and indexing as U.
UnitaryMatrix full_operator_Utilde(const RegisterShape &shape);

// max |[U, Id (x) S]| for a matrix in the restricted j * N + k indexing.
double shift_commutator_norm(const UnitaryMatrix &u, const RegisterShape &shape);

struct RootOfUnityCount {
  Turn angle;
  std::uint64_t multiplicity = 0;
};

/// Eigenvalues of U_x (equivalently of F^-1 U_x F) read off the cycle
/// structure of each S^j block, without diagonalizing.
struct UtildeSpectrum {
  // Sorted by angle; restricted to the 2^n1 * N nontrivial sector.
  std::vector<RootOfUnityCount> nontrivial;
  // Eigenvalue 1 from the identity sector k >= N.
  std::uint64_t trivial_multiplicity = 0;

  std::uint64_t nontrivial_size() const;
  std::vector<Complex> expand_nontrivial() const;
};

UtildeSpectrum utilde_eigenvalues(const RegisterShape &shape);

} // namespace shor_spectra

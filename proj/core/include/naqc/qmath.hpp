#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "naqc/errors.hpp"

namespace naqc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerances shared by the state types. Comparisons are absolute.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Max-norm of m - m^dagger. NaN entries propagate (the result fails any
/// <= tol comparison).
double hermiticity_error(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian if the
/// symmetry error exceeds tol, NoConvergence if the iteration fails.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol = kHermitianTol);

/// Eigenvalues only, sorted ascending. Deterministic across runs.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kHermitianTol);

/// exp(i*h) for Hermitian h, via the spectral decomposition.
ComplexMatrix unitary_exp_i(const ComplexMatrix& h);

/// A d x d Hermitian, positive-semidefinite, unit-trace matrix.
/// The checked constructor enforces all three invariants (within the
/// tolerances above) plus finiteness; unchecked() is for internal callers
/// whose construction guarantees validity.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix unchecked(ComplexMatrix mat) {
    return DensityMatrix(std::move(mat), Unchecked{});
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix mat, Unchecked) : mat_(std::move(mat)) {}
  ComplexMatrix mat_;
};

/// A density matrix on a dimA x dimB product space, tensor ordering A (x) B:
/// row index = a * dimB + b.
class BipartiteState {
 public:
  BipartiteState(int dim_a, int dim_b, ComplexMatrix mat);

  static BipartiteState unchecked(int dim_a, int dim_b, ComplexMatrix mat) {
    return BipartiteState(dim_a, dim_b, std::move(mat), Unchecked{});
  }

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const ComplexMatrix& mat() const { return mat_; }

  DensityMatrix as_density() const { return DensityMatrix::unchecked(mat_); }

 private:
  struct Unchecked {};
  BipartiteState(int dim_a, int dim_b, ComplexMatrix mat, Unchecked)
      : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {}
  int dim_a_;
  int dim_b_;
  ComplexMatrix mat_;
};

enum class Subsystem { A, B };

/// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep);

/// Kronecker product with the same A (x) B index ordering as BipartiteState.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Von Neumann entropy in bits. Eigenvalues are clamped to [0, 1] before the
/// log; values below the PSD floor raise InvariantViolation.
double von_neumann_entropy(const DensityMatrix& rho);

/// tr(rho^2), in [1/d, 1].
double purity(const DensityMatrix& rho);

/// Shannon entropy in bits of a probability vector. Entries may carry
/// round-off down to -1e-12; the sum must be 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

/// Binary Shannon entropy H(x) for x in [0, 1].
double binary_entropy(double x);

}  // namespace naqc

#include "naqc/qmath.hpp"

#include <algorithm>
#include <cmath>

namespace naqc {

namespace {

constexpr double kLog2e = 1.4426950408889634;  // 1/ln(2)

double xlog2x(double x) {
  return x > 0.0 ? x * std::log(x) * kLog2e : 0.0;
}

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_eigensystem: matrix is not square");
  }
  const double herm_err = hermiticity_error(m);
  if (!(herm_err <= tol)) {
    throw NotHermitian("hermitian_eigensystem: symmetry error " + std::to_string(herm_err));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("hermitian_eigensystem: iteration did not converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  const EigenSystem sys = hermitian_eigensystem(m, tol);
  return std::vector<double>(sys.values.data(), sys.values.data() + sys.values.size());
}

ComplexMatrix unitary_exp_i(const ComplexMatrix& h) {
  const EigenSystem sys = hermitian_eigensystem(h);
  const Eigen::Index n = h.rows();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, sys.values(k));
  }
  return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw DimensionMismatch("DensityMatrix: matrix is not square");
  }
  if (!all_finite(mat_)) {
    throw InvariantViolation("DensityMatrix: non-finite entries");
  }
  const double herm_err = hermiticity_error(mat_);
  if (!(herm_err <= kHermitianTol)) {
    throw NotHermitian("DensityMatrix: symmetry error " + std::to_string(herm_err));
  }
  const double trace_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (!(trace_err <= kTraceTol)) {
    throw InvariantViolation("DensityMatrix: trace deviates from 1 by " + std::to_string(trace_err));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("DensityMatrix: eigenvalue check did not converge");
  }
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw InvariantViolation("DensityMatrix: negative eigenvalue " +
                             std::to_string(solver.eigenvalues().minCoeff()));
  }
}

BipartiteState::BipartiteState(int dim_a, int dim_b, ComplexMatrix mat)
    : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {
  if (dim_a_ < 2 || dim_b_ < 2) {
    throw DimensionMismatch("BipartiteState: subsystem dimensions must be >= 2");
  }
  if (mat_.rows() != static_cast<Eigen::Index>(dim_a_) * dim_b_ || mat_.rows() != mat_.cols()) {
    throw DimensionMismatch("BipartiteState: matrix size does not match dimA*dimB");
  }
  DensityMatrix check(mat_);  // enforces the density-matrix invariants
  (void)check;
}

DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  const ComplexMatrix& rho = s.mat();
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int m = 0; m < da; ++m) {
      for (int n = 0; n < da; ++n) {
        Complex acc(0.0, 0.0);
        for (int b = 0; b < db; ++b) {
          acc += rho(m * db + b, n * db + b);
        }
        out(m, n) = acc;
      }
    }
    return DensityMatrix::unchecked(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int b = 0; b < db; ++b) {
    for (int c = 0; c < db; ++c) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m < da; ++m) {
        acc += rho(m * db + b, m * db + c);
      }
      out(b, c) = acc;
    }
  }
  return DensityMatrix::unchecked(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const std::vector<double> eigs = hermitian_eigenvalues(rho.mat());
  double s = 0.0;
  for (double lambda : eigs) {
    if (lambda < kEigenvalueFloor) {
      throw InvariantViolation("von_neumann_entropy: eigenvalue " + std::to_string(lambda));
    }
    const double clamped = std::clamp(lambda, 0.0, 1.0);
    s -= xlog2x(clamped);
  }
  return s;
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) equals the squared Frobenius norm for Hermitian rho.
  return rho.mat().squaredNorm();
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < -1e-12 || !std::isfinite(v)) {
      throw NotADistribution("shannon_entropy: negative probability " + std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw NotADistribution("shannon_entropy: probabilities sum to " + std::to_string(sum));
  }
  double h = 0.0;
  for (double v : p) {
    h -= xlog2x(std::max(v, 0.0));
  }
  return h;
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12 || !std::isfinite(x)) {
    throw NotADistribution("binary_entropy: argument " + std::to_string(x));
  }
  const double p = std::clamp(x, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

}  // namespace naqc

#include "naqc/coherence.hpp"

#include <cmath>

namespace naqc {

namespace {

double clamp_small_negative(double v) {
  if (v < 0.0) {
    if (v < -1e-10) {
      throw InvariantViolation("coherence: value " + std::to_string(v));
    }
    return 0.0;
  }
  return v;
}

std::vector<double> rotated_diagonal(const DensityMatrix& rho, const Basis& basis) {
  std::vector<double> diag(basis.vectors.size());
  for (std::size_t a = 0; a < basis.vectors.size(); ++a) {
    const ComplexVector& v = basis.vectors[a];
    diag[a] = (v.adjoint() * rho.mat() * v)(0).real();
  }
  return diag;
}

}  // namespace

double coherence(const DensityMatrix& rho, const Basis& basis, CoherenceMeasure measure) {
  if (rho.dim() != basis.dim) {
    throw DimensionMismatch("coherence: state and basis dimensions differ");
  }
  if (measure == CoherenceMeasure::L1) {
    const ComplexMatrix v = basis.as_matrix();
    const ComplexMatrix rotated = v.adjoint() * rho.mat() * v;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rotated.rows(); ++i) {
      for (Eigen::Index j = 0; j < rotated.cols(); ++j) {
        if (i != j) {
          sum += std::abs(rotated(i, j));
        }
      }
    }
    return sum;
  }
  std::vector<double> diag = rotated_diagonal(rho, basis);
  for (double& p : diag) {
    p = std::max(p, 0.0);
  }
  const double diag_entropy = shannon_entropy(diag);
  return clamp_small_negative(diag_entropy - von_neumann_entropy(rho));
}

double mub_coherence_sum(const DensityMatrix& rho, const MUBSet& mubs, CoherenceMeasure measure) {
  if (rho.dim() != mubs.dim) {
    throw DimensionMismatch("mub_coherence_sum: state and MUB dimensions differ");
  }
  if (measure == CoherenceMeasure::RelativeEntropy) {
    // The rotated spectrum is basis independent, so S(rho) is shared.
    const double state_entropy = von_neumann_entropy(rho);
    double sum = 0.0;
    for (const Basis& basis : mubs.bases) {
      std::vector<double> diag = rotated_diagonal(rho, basis);
      for (double& p : diag) {
        p = std::max(p, 0.0);
      }
      sum += clamp_small_negative(shannon_entropy(diag) - state_entropy);
    }
    return sum;
  }
  double sum = 0.0;
  for (const Basis& basis : mubs.bases) {
    sum += coherence(rho, basis, measure);
  }
  return sum;
}

double purity_in_basis(const DensityMatrix& rho, const Basis& basis) {
  if (rho.dim() != basis.dim) {
    throw DimensionMismatch("purity_in_basis: state and basis dimensions differ");
  }
  double sum = 0.0;
  for (double p : rotated_diagonal(rho, basis)) {
    sum += p * p;
  }
  return sum;
}

Bound bound_value(CoherenceMeasure measure, int d) {
  if (!is_prime(d)) {
    throw UnsupportedDimension("bound_value: d = " + std::to_string(d) + " is not prime");
  }
  if (measure == CoherenceMeasure::L1) {
    const double value = (d - 1) * std::sqrt(static_cast<double>(d) * (d + 1));
    return Bound{measure, d, value};
  }
  if (d == 2) {
    // The generic formula is a 0/0 form at d = 2; the sharpened qubit
    // bound is the operative one.
    const double value = 3.0 * binary_entropy(0.5 + std::sqrt(3.0) / 6.0);
    return Bound{measure, d, value};
  }
  const double dd = d;
  const double value =
      (dd + 1.0) * std::log2(dd) - (dd - 1.0) * (dd - 1.0) * std::log2(dd - 1.0) / (dd * (dd - 2.0));
  return Bound{measure, d, value};
}

double relative_entropy_bound_d2_limit() {
  return 3.0 - std::log2(std::exp(1.0)) / 2.0;
}

const char* measure_name(CoherenceMeasure measure) {
  return measure == CoherenceMeasure::L1 ? "l1" : "re";
}

}  // namespace naqc

#include "naqc/states.hpp"

#include <cmath>

namespace naqc {

namespace {

ComplexVector max_entangled_vector(int d) {
  ComplexVector phi = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int n = 0; n < d; ++n) {
    phi(n * d + n) = Complex(amp, 0.0);
  }
  return phi;
}

}  // namespace

const ComplexMatrix& pauli(int axis) {
  static const ComplexMatrix sx = [] {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    return m;
  }();
  static const ComplexMatrix sy = [] {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
  }();
  static const ComplexMatrix sz = [] {
    ComplexMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return m;
  }();
  switch (axis) {
    case 1:
      return sx;
    case 2:
      return sy;
    case 3:
      return sz;
    default:
      throw InvalidArgument("pauli: axis must be 1, 2 or 3");
  }
}

BipartiteState isotropic(int d, double x) {
  if (d < 2) {
    throw UnsupportedDimension("isotropic: d must be >= 2");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("isotropic: x must lie in [0, 1]");
  }
  const int dim = d * d;
  const double mixed_coeff = (1.0 - x) / (dim - 1);
  const double pure_coeff = (dim * x - 1.0) / (dim - 1);
  const ComplexVector phi = max_entangled_vector(d);
  ComplexMatrix mat = mixed_coeff * ComplexMatrix::Identity(dim, dim);
  mat += pure_coeff * (phi * phi.adjoint());
  return BipartiteState::unchecked(d, d, std::move(mat));
}

BipartiteState rho1(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("rho1: x must lie in [0, 1]");
  }
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector phi_plus = ComplexVector::Zero(4);
  phi_plus(0) = Complex(s, 0.0);
  phi_plus(3) = Complex(s, 0.0);
  ComplexVector psi_minus = ComplexVector::Zero(4);
  psi_minus(1) = Complex(s, 0.0);
  psi_minus(2) = Complex(-s, 0.0);
  ComplexMatrix mat = x * (phi_plus * phi_plus.adjoint());
  mat += (1.0 - x) * (psi_minus * psi_minus.adjoint());
  return BipartiteState::unchecked(2, 2, std::move(mat));
}

BipartiteState max_entangled(int d) {
  if (d < 2) {
    throw UnsupportedDimension("max_entangled: d must be >= 2");
  }
  const ComplexVector phi = max_entangled_vector(d);
  return BipartiteState::unchecked(d, d, phi * phi.adjoint());
}

DensityMatrix random_density(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = ((rho + rho.adjoint()) * 0.5).eval();
  return DensityMatrix::unchecked(std::move(rho));
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  if (d < 2) {
    throw UnsupportedDimension("random_density: d must be >= 2");
  }
  Rng rng(seed);
  return random_density(d, rng);
}

SeparableSample random_separable(int dim_a, int dim_b, int num_terms, std::uint64_t seed) {
  if (num_terms < 1) {
    throw InvalidArgument("random_separable: num_terms must be >= 1");
  }
  if (dim_a < 2 || dim_b < 2) {
    throw UnsupportedDimension("random_separable: dimensions must be >= 2");
  }
  Rng rng(seed);
  std::vector<double> weights(num_terms);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform();
    total += w;
  }
  SeparableSpec spec;
  spec.terms.reserve(num_terms);
  for (int k = 0; k < num_terms; ++k) {
    DensityMatrix rho_a = random_density(dim_a, rng);
    DensityMatrix rho_b = random_density(dim_b, rng);
    spec.terms.push_back({weights[k] / total, std::move(rho_a), std::move(rho_b)});
  }
  BipartiteState state = assemble_separable(spec);
  return SeparableSample{std::move(spec), std::move(state)};
}

BipartiteState assemble_separable(const SeparableSpec& spec) {
  if (spec.terms.empty()) {
    throw InvalidArgument("assemble_separable: empty spec");
  }
  const int da = spec.terms.front().rho_a.dim();
  const int db = spec.terms.front().rho_b.dim();
  ComplexMatrix mat = ComplexMatrix::Zero(da * db, da * db);
  for (const auto& term : spec.terms) {
    if (term.rho_a.dim() != da || term.rho_b.dim() != db) {
      throw DimensionMismatch("assemble_separable: inconsistent term dimensions");
    }
    mat += term.weight * kron(term.rho_a.mat(), term.rho_b.mat());
  }
  return BipartiteState::unchecked(da, db, std::move(mat));
}

BlochDecomposition bloch_decompose(const BipartiteState& s) {
  if (s.dim_a() != 2 || s.dim_b() != 2) {
    throw DimensionMismatch("bloch_decompose: requires a two-qubit state");
  }
  BlochDecomposition b;
  const ComplexMatrix& rho = s.mat();
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  for (int i = 1; i <= 3; ++i) {
    b.r(i - 1) = (rho * kron(pauli(i), id2)).trace().real();
    b.s(i - 1) = (rho * kron(id2, pauli(i))).trace().real();
    for (int j = 1; j <= 3; ++j) {
      b.t(i - 1, j - 1) = (rho * kron(pauli(i), pauli(j))).trace().real();
    }
  }
  return b;
}

BipartiteState bloch_assemble(const BlochDecomposition& b) {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix mat = ComplexMatrix::Identity(4, 4);
  for (int i = 1; i <= 3; ++i) {
    mat += b.r(i - 1) * kron(pauli(i), id2);
    mat += b.s(i - 1) * kron(id2, pauli(i));
    for (int j = 1; j <= 3; ++j) {
      mat += b.t(i - 1, j - 1) * kron(pauli(i), pauli(j));
    }
  }
  mat *= 0.25;
  return BipartiteState(2, 2, std::move(mat));
}

}  // namespace naqc

#include "naqc/mub.hpp"

#include <cmath>
#include <numbers>

namespace naqc {

namespace {

/// Rescale so the first amplitude above threshold is real and positive.
void fix_global_phase(ComplexVector& v) {
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    const double mag = std::abs(v(n));
    if (mag > 1e-12) {
      v *= std::conj(v(n)) / mag;
      return;
    }
  }
}

Basis computational_basis(int d) {
  Basis b{d, {}};
  b.vectors.reserve(d);
  for (int m = 0; m < d; ++m) {
    ComplexVector v = ComplexVector::Zero(d);
    v(m) = Complex(1.0, 0.0);
    b.vectors.push_back(std::move(v));
  }
  return b;
}

Basis fourier_basis(int d) {
  Basis b{d, {}};
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  const double unit = 2.0 * std::numbers::pi / d;
  b.vectors.reserve(d);
  for (int m = 0; m < d; ++m) {
    ComplexVector v(d);
    for (int n = 0; n < d; ++n) {
      v(n) = std::polar(norm, unit * ((m * n) % d));
    }
    fix_global_phase(v);
    b.vectors.push_back(std::move(v));
  }
  return b;
}

/// Quadratic-phase basis l in 1..d-1 for odd prime d: amplitudes
/// exp(i 2pi/d * l (m+n)^2)/sqrt(d).
Basis quadratic_basis(int d, int l) {
  Basis b{d, {}};
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  const double unit = 2.0 * std::numbers::pi / d;
  b.vectors.reserve(d);
  for (int m = 0; m < d; ++m) {
    ComplexVector v(d);
    for (int n = 0; n < d; ++n) {
      const long long q = static_cast<long long>(m + n) * (m + n) % d;
      v(n) = std::polar(norm, unit * (l * q % d));
    }
    fix_global_phase(v);
    b.vectors.push_back(std::move(v));
  }
  return b;
}

ComplexVector qubit_vector(Complex a0, Complex a1) {
  ComplexVector v(2);
  v << a0, a1;
  return v;
}

/// Pauli eigenbases for d = 2 (the generic prime construction degenerates
/// there): sigma_z, sigma_x, sigma_y, +1 eigenvector first.
MUBSet qubit_mubs() {
  const double s = 1.0 / std::sqrt(2.0);
  MUBSet set{2, {}};
  set.bases.push_back(computational_basis(2));
  Basis x{2, {qubit_vector({s, 0.0}, {s, 0.0}), qubit_vector({s, 0.0}, {-s, 0.0})}};
  Basis y{2, {qubit_vector({s, 0.0}, {0.0, s}), qubit_vector({s, 0.0}, {0.0, -s})}};
  set.bases.push_back(std::move(x));
  set.bases.push_back(std::move(y));
  return set;
}

}  // namespace

bool is_prime(int d) {
  if (d < 2) {
    return false;
  }
  for (int f = 2; static_cast<long long>(f) * f <= d; ++f) {
    if (d % f == 0) {
      return false;
    }
  }
  return true;
}

ComplexMatrix Basis::as_matrix() const {
  ComplexMatrix m(dim, dim);
  for (int c = 0; c < dim; ++c) {
    m.col(c) = vectors[static_cast<std::size_t>(c)];
  }
  return m;
}

MUBSet generate_mubs(int d) {
  if (!is_prime(d)) {
    throw UnsupportedDimension("generate_mubs: d = " + std::to_string(d) +
                               " is not a prime >= 2");
  }
  if (d == 2) {
    return qubit_mubs();
  }
  MUBSet set{d, {}};
  set.bases.reserve(d + 1);
  set.bases.push_back(computational_basis(d));
  for (int l = 1; l < d; ++l) {
    set.bases.push_back(quadratic_basis(d, l));
  }
  set.bases.push_back(fourier_basis(d));
  return set;
}

MubValidation validate_mubs(const MUBSet& set, double tol) {
  MubValidation report;
  report.tol = tol;
  const int d = set.dim;
  for (const Basis& basis : set.bases) {
    for (int m = 0; m < d; ++m) {
      for (int n = m; n < d; ++n) {
        const Complex ip = basis.vectors[m].dot(basis.vectors[n]);
        const double target = (m == n) ? 1.0 : 0.0;
        report.max_orthonormality_error =
            std::max(report.max_orthonormality_error, std::abs(ip - target));
      }
    }
  }
  const double expected = 1.0 / d;
  for (std::size_t l = 0; l < set.bases.size(); ++l) {
    for (std::size_t lp = l + 1; lp < set.bases.size(); ++lp) {
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          const Complex ip = set.bases[l].vectors[a].dot(set.bases[lp].vectors[b]);
          report.max_unbiasedness_error =
              std::max(report.max_unbiasedness_error, std::abs(std::norm(ip) - expected));
        }
      }
    }
  }
  report.pass = report.max_orthonormality_error <= tol && report.max_unbiasedness_error <= tol;
  return report;
}

}  // namespace naqc

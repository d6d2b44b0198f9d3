#pragma once

#include <vector>

#include "naqc/qmath.hpp"

namespace naqc {

/// Trial-division primality for d >= 0.
bool is_prime(int d);

/// One orthonormal reference basis of dimension d. Vectors are stored with
/// the first nonzero amplitude real and >= 0.
struct Basis {
  int dim = 0;
  std::vector<ComplexVector> vectors;

  /// d x d matrix whose columns are the basis vectors.
  ComplexMatrix as_matrix() const;
};

/// The complete set of d+1 mutually unbiased bases for prime d.
/// Basis 0 is the computational basis; for odd primes basis d is the
/// Fourier basis and bases 1..d-1 carry quadratic phases. For d = 2 the
/// set is the sigma_z, sigma_x, sigma_y eigenbases in that order, each
/// with the +1 eigenvector first.
struct MUBSet {
  int dim = 0;
  std::vector<Basis> bases;
};

/// Builds the d+1 bases. Throws UnsupportedDimension unless d is prime
/// and >= 2. Deterministic: identical d yields bit-identical amplitudes.
MUBSet generate_mubs(int d);

struct MubValidation {
  double max_orthonormality_error = 0.0;
  double max_unbiasedness_error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Reports the worst orthonormality and unbiasedness deviations over the
/// whole set; passes iff both are <= tol.
MubValidation validate_mubs(const MUBSet& set, double tol);

}  // namespace naqc

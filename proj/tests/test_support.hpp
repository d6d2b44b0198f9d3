#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "naqc/assignment.hpp"
#include "naqc/naqc.hpp"
#include "naqc/rng.hpp"
#include "naqc/states.hpp"

namespace naqc::testing {

/// Haar-ish random unitary from the spectral exponential of a random
/// Hermitian matrix; deterministic per rng state.
inline ComplexMatrix random_unitary(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  const ComplexMatrix h = (g + g.adjoint()) * 0.5;
  return unitary_exp_i(h);
}

/// Random bipartite density on a dA*dB product space (generically
/// entangled).
inline BipartiteState random_bipartite(int dim_a, int dim_b, Rng& rng) {
  const DensityMatrix rho = random_density(dim_a * dim_b, rng);
  return BipartiteState::unchecked(dim_a, dim_b, rho.mat());
}

/// Independent oracle for the optimized framework: enumerate every
/// permutation, find the exact maximum total, then return the
/// lexicographically smallest permutation within the same tie tolerance
/// the solver uses.
inline AssignmentResult brute_force_assignment_max(const Eigen::MatrixXd& scores,
                                                   bool exclude_fixed_points = false) {
  const int n = static_cast<int>(scores.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = i;
  }
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> sorted = perm;
  do {
    if (exclude_fixed_points) {
      bool has_fixed = false;
      for (int i = 0; i < n; ++i) {
        if (sorted[i] == i) {
          has_fixed = true;
          break;
        }
      }
      if (has_fixed) {
        continue;
      }
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      total += scores(i, sorted[i]);
    }
    if (total > best) {
      best = total;
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));

  const double tol = 1e-9 * (1.0 + std::abs(best));
  std::vector<int> winner;
  do {
    if (exclude_fixed_points) {
      bool has_fixed = false;
      for (int i = 0; i < n; ++i) {
        if (perm[i] == i) {
          has_fixed = true;
          break;
        }
      }
      if (has_fixed) {
        continue;
      }
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      total += scores(i, perm[i]);
    }
    if (total >= best - tol) {
      winner = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    value += scores(i, winner[i]);
  }
  return AssignmentResult{value, winner};
}

}  // namespace naqc::testing

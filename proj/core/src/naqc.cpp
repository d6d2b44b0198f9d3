#include "naqc/naqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "naqc/assignment.hpp"

namespace naqc {

namespace {

void require_square_prime(const BipartiteState& s, const MUBSet& mubs) {
  if (s.dim_a() != s.dim_b()) {
    throw DimensionMismatch("naqc: state must be d x d");
  }
  if (s.dim_a() != mubs.dim) {
    throw DimensionMismatch("naqc: state and MUB dimensions differ");
  }
}

/// <phi| rho_AB |phi> contracted over A only: a dimB x dimB block.
ComplexMatrix project_alice(const BipartiteState& s, const ComplexVector& phi) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int m = 0; m < da; ++m) {
    for (int n = 0; n < da; ++n) {
      const Complex w = std::conj(phi(m)) * phi(n);
      if (w == Complex(0.0, 0.0)) {
        continue;
      }
      out.noalias() += w * s.mat().block(m * db, n * db, db, db);
    }
  }
  return out;
}

double fixed_permutation_value(const CostMatrix& cost, const Permutation& perm) {
  double value = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    value += cost.scores(static_cast<Eigen::Index>(i), perm[i]);
  }
  return value;
}

NAQCReport make_report(CoherenceMeasure measure, Framework framework, double value, int d,
                       std::optional<Permutation> perm) {
  const double bound = bound_value(measure, d).value;
  NAQCReport report;
  report.measure = measure;
  report.framework = framework;
  report.value = value;
  report.bound = bound;
  report.achieved = value > bound;
  report.best_permutation = std::move(perm);
  return report;
}

int basis_to_pauli_axis(int basis) {
  // Qubit MUB order is (z, x, y); Bloch components are (x, y, z).
  switch (basis) {
    case 0:
      return 2;
    case 1:
      return 0;
    default:
      return 1;
  }
}

}  // namespace

bool is_permutation(const Permutation& perm, int size) {
  if (static_cast<int>(perm.size()) != size) {
    return false;
  }
  std::vector<bool> seen(size, false);
  for (int v : perm) {
    if (v < 0 || v >= size || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

ConditionalEnsemble conditional_ensemble(const BipartiteState& s, const MUBSet& mubs,
                                         int alice_basis) {
  require_square_prime(s, mubs);
  if (alice_basis < 0 || alice_basis > mubs.dim) {
    throw InvalidArgument("conditional_ensemble: basis index out of range");
  }
  const Basis& basis = mubs.bases[static_cast<std::size_t>(alice_basis)];
  ConditionalEnsemble ensemble;
  ensemble.alice_basis = alice_basis;
  ensemble.entries.reserve(mubs.dim);
  for (int a = 0; a < mubs.dim; ++a) {
    ComplexMatrix block = project_alice(s, basis.vectors[static_cast<std::size_t>(a)]);
    const double p = block.trace().real();
    ConditionalEnsemble::Entry entry;
    entry.prob = p;
    if (p >= kZeroProbability) {
      block /= p;
      block = ((block + block.adjoint()) * 0.5).eval();
      entry.state = DensityMatrix::unchecked(std::move(block));
    }
    ensemble.entries.push_back(std::move(entry));
  }
  return ensemble;
}

CostMatrix cost_matrix(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure) {
  require_square_prime(s, mubs);
  const int n = mubs.dim + 1;
  CostMatrix cost;
  cost.dim = mubs.dim;
  cost.scores = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const ConditionalEnsemble ensemble = conditional_ensemble(s, mubs, i);
    for (int j = 0; j < n; ++j) {
      double cell = 0.0;
      for (const auto& entry : ensemble.entries) {
        if (entry.state) {
          cell += entry.prob *
                  coherence(*entry.state, mubs.bases[static_cast<std::size_t>(j)], measure);
        }
      }
      cost.scores(i, j) = cell;
    }
  }
  return cost;
}

NAQCReport naqc_averaged_from_cost(const CostMatrix& cost, CoherenceMeasure measure) {
  double off_diagonal = 0.0;
  const Eigen::Index n = cost.scores.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) {
        off_diagonal += cost.scores(i, j);
      }
    }
  }
  return make_report(measure, Framework::Averaged, off_diagonal / cost.dim, cost.dim,
                     std::nullopt);
}

NAQCReport naqc_averaged(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure) {
  return naqc_averaged_from_cost(cost_matrix(s, mubs, measure), measure);
}

NAQCReport naqc_fixed_permutation_from_cost(const CostMatrix& cost, const Permutation& perm,
                                            CoherenceMeasure measure) {
  const int n = cost.dim + 1;
  if (!is_permutation(perm, n)) {
    throw NotAPermutation("naqc: permutation is not a bijection on the basis indices");
  }
  return make_report(measure, Framework::FixedPermutation, fixed_permutation_value(cost, perm),
                     cost.dim, perm);
}

NAQCReport naqc_fixed_permutation(const BipartiteState& s, const MUBSet& mubs,
                                  const Permutation& perm, CoherenceMeasure measure) {
  return naqc_fixed_permutation_from_cost(cost_matrix(s, mubs, measure), perm, measure);
}

NAQCReport naqc_optimized_from_cost(const CostMatrix& cost, CoherenceMeasure measure,
                                    bool exclude_fixed_points) {
  const int n = cost.dim + 1;
  Eigen::MatrixXd scores = cost.scores;
  if (exclude_fixed_points) {
    // Mask the diagonal with a scale-aware penalty; any derangement beats
    // any assignment through a masked cell.
    const double penalty = 1024.0 * (1.0 + scores.cwiseAbs().maxCoeff()) * n;
    scores.diagonal().setConstant(-penalty);
  }
  AssignmentResult best = assignment_max(scores);
  if (exclude_fixed_points) {
    for (int i = 0; i < n; ++i) {
      if (best.assignment[static_cast<std::size_t>(i)] == i) {
        throw NoConvergence("naqc: no derangement found");
      }
    }
    best.value = fixed_permutation_value(cost, best.assignment);
  }
  return make_report(measure, Framework::Optimized, best.value, cost.dim,
                     std::move(best.assignment));
}

NAQCReport naqc_optimized(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure,
                          bool exclude_fixed_points) {
  return naqc_optimized_from_cost(cost_matrix(s, mubs, measure), measure, exclude_fixed_points);
}

TwoQubitClosedForm two_qubit_closed_form(const BipartiteState& s, const Permutation& perm,
                                         CoherenceMeasure measure) {
  if (s.dim_a() != 2 || s.dim_b() != 2) {
    throw DimensionMismatch("two_qubit_closed_form: requires a two-qubit state");
  }
  if (!is_permutation(perm, 3)) {
    throw NotAPermutation("two_qubit_closed_form: permutation must act on 3 bases");
  }
  const BlochDecomposition bloch = bloch_decompose(s);
  TwoQubitClosedForm result;
  for (int i = 0; i < 3; ++i) {
    const int wi = basis_to_pauli_axis(i);
    const int wj = basis_to_pauli_axis(perm[static_cast<std::size_t>(i)]);
    for (int a = 0; a < 2; ++a) {
      const double sign = (a == 0) ? 1.0 : -1.0;
      const double denom = 1.0 + sign * bloch.r(wi);
      if (denom < kZeroProbability) {
        continue;  // Alice never sees this outcome
      }
      const double prob = denom / 2.0;
      double perp_sq = 0.0;
      double full_sq = 0.0;
      for (int axis = 0; axis < 3; ++axis) {
        const double component = bloch.s(axis) + sign * bloch.t(wi, axis);
        full_sq += component * component;
        if (axis != wj) {
          perp_sq += component * component;
        }
      }
      const double aligned = bloch.s(wj) + sign * bloch.t(wi, wj);
      const double beta = 0.5 + aligned / (2.0 * denom);
      const double lambda = 0.5 + std::sqrt(full_sq) / (2.0 * denom);
      result.terms.beta(i, a) = beta;
      result.terms.lambda(i, a) = lambda;
      if (measure == CoherenceMeasure::L1) {
        result.value += prob * std::sqrt(perp_sq) / denom;
      } else {
        result.value += prob * (binary_entropy(beta) - binary_entropy(lambda));
      }
    }
  }
  return result;
}

LocalUnitaryResult local_unitary_maximize(const BipartiteState& s, const MUBSet& mubs,
                                          CoherenceMeasure measure, int restarts,
                                          std::uint64_t seed, int max_sweeps,
                                          double improvement_tol) {
  require_square_prime(s, mubs);
  if (restarts < 1) {
    throw InvalidArgument("local_unitary_maximize: restarts must be >= 1");
  }
  const int d = s.dim_a();

  // su(d) generator basis: symmetric and antisymmetric pair matrices plus
  // the traceless diagonals.
  std::vector<ComplexMatrix> generators;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = Complex(1.0, 0.0);
      sym(k, j) = Complex(1.0, 0.0);
      generators.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -1.0);
      anti(k, j) = Complex(0.0, 1.0);
      generators.push_back(std::move(anti));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < l; ++j) {
      diag(j, j) = Complex(1.0, 0.0);
    }
    diag(l, l) = Complex(-static_cast<double>(l), 0.0);
    generators.push_back(std::move(diag));
  }
  const std::size_t per_side = generators.size();
  const std::size_t total_angles = 2 * per_side;

  const auto build_unitary = [&](const double* angles) {
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < per_side; ++k) {
      if (angles[k] != 0.0) {
        h += angles[k] * generators[k];
      }
    }
    return unitary_exp_i(h);
  };

  const auto evaluate = [&](const std::vector<double>& angles) {
    const ComplexMatrix u_a = build_unitary(angles.data());
    const ComplexMatrix u_b = build_unitary(angles.data() + per_side);
    const ComplexMatrix u = kron(u_a, u_b);
    BipartiteState rotated = BipartiteState::unchecked(d, d, u * s.mat() * u.adjoint());
    return assignment_max_value(cost_matrix(rotated, mubs, measure).scores);
  };

  Rng rng(seed);
  std::vector<double> best_angles(total_angles, 0.0);
  double best_value = evaluate(best_angles);

  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<double> angles(total_angles, 0.0);
    if (restart > 0) {
      for (double& a : angles) {
        a = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
      }
    }
    double value = evaluate(angles);
    double step = 0.5;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      double sweep_gain = 0.0;
      for (std::size_t k = 0; k < total_angles; ++k) {
        const double original = angles[k];
        double local_best = value;
        double local_angle = original;
        for (const double trial : {original + step, original - step}) {
          angles[k] = trial;
          const double trial_value = evaluate(angles);
          if (trial_value > local_best) {
            local_best = trial_value;
            local_angle = trial;
          }
        }
        angles[k] = local_angle;
        sweep_gain += local_best - value;
        value = local_best;
      }
      if (sweep_gain < improvement_tol) {
        step *= 0.5;
        if (step < 1e-4) {
          break;
        }
      }
    }
    if (value > best_value) {
      best_value = value;
      best_angles = angles;
    }
  }

  const ComplexMatrix u_a = build_unitary(best_angles.data());
  const ComplexMatrix u_b = build_unitary(best_angles.data() + per_side);
  const ComplexMatrix u = kron(u_a, u_b);
  BipartiteState rotated = BipartiteState::unchecked(d, d, u * s.mat() * u.adjoint());
  NAQCReport report = naqc_optimized(rotated, mubs, measure);
  return LocalUnitaryResult{std::move(report), UnitaryPair{u_a, u_b}};
}

const char* framework_name(Framework framework) {
  switch (framework) {
    case Framework::Averaged:
      return "averaged";
    case Framework::Optimized:
      return "optimized";
    default:
      return "perm";
  }
}

}  // namespace naqc

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "naqc/coherence.hpp"
#include "naqc/mub.hpp"
#include "naqc/states.hpp"

namespace naqc {

/// Bob's post-measurement ensemble for one of Alice's basis choices.
/// Outcomes with probability below kZeroProbability carry no state and
/// contribute nothing to sums.
struct ConditionalEnsemble {
  struct Entry {
    double prob = 0.0;
    std::optional<DensityMatrix> state;
  };
  int alice_basis = 0;  // basis index 0..d
  std::vector<Entry> entries;
};

inline constexpr double kZeroProbability = 1e-12;

/// Projects Alice's side onto basis vector a of the chosen basis and
/// renormalizes: entries hold p(a) and Bob's conditional state.
ConditionalEnsemble conditional_ensemble(const BipartiteState& s, const MUBSet& mubs,
                                         int alice_basis);

/// scores(i, j) = sum_a p(a | basis i) * coherence of Bob's conditional
/// state in basis j, for all basis pairs including the diagonal.
struct CostMatrix {
  int dim = 0;  // d
  Eigen::MatrixXd scores;
};

CostMatrix cost_matrix(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure);

/// A bijection on the d+1 basis indices {0..d}; map[i] is Bob's reference
/// basis when Alice measures basis i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& perm, int size);

enum class Framework { Averaged, Optimized, FixedPermutation };

struct NAQCReport {
  CoherenceMeasure measure{};
  Framework framework{};
  double value = 0.0;
  double bound = 0.0;
  bool achieved = false;  // value > bound
  std::optional<Permutation> best_permutation;
};

/// Mean over the d off-diagonal reference choices: (1/d) sum_{i != j}
/// scores(i, j), compared against the state-independent bound.
NAQCReport naqc_averaged(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure);
NAQCReport naqc_averaged_from_cost(const CostMatrix& cost, CoherenceMeasure measure);

/// sum_i scores(i, perm[i]) for one preagreed basis pairing.
NAQCReport naqc_fixed_permutation(const BipartiteState& s, const MUBSet& mubs,
                                  const Permutation& perm, CoherenceMeasure measure);
NAQCReport naqc_fixed_permutation_from_cost(const CostMatrix& cost, const Permutation& perm,
                                            CoherenceMeasure measure);

/// Exact maximum of the fixed-permutation value over all (d+1)!
/// permutations, solved as a maximum-weight assignment; ties resolve to
/// the lexicographically smallest permutation. exclude_fixed_points
/// restricts the search to derangements.
NAQCReport naqc_optimized(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure,
                          bool exclude_fixed_points = false);
NAQCReport naqc_optimized_from_cost(const CostMatrix& cost, CoherenceMeasure measure,
                                    bool exclude_fixed_points = false);

/// Per-(basis, outcome) terms of the two-qubit closed form. Outcomes
/// dropped for vanishing probability hold the neutral value 1/2.
struct ClosedFormTerms {
  Eigen::Matrix<double, 3, 2> beta = Eigen::Matrix<double, 3, 2>::Constant(0.5);
  Eigen::Matrix<double, 3, 2> lambda = Eigen::Matrix<double, 3, 2>::Constant(0.5);
};

struct TwoQubitClosedForm {
  double value = 0.0;
  ClosedFormTerms terms;
};

/// Fixed-permutation value evaluated directly from the Bloch decomposition
/// (no matrices, no eigensolves); agrees with the cost-matrix pipeline to
/// 1e-9. Basis indices map to Pauli axes as 0 -> z, 1 -> x, 2 -> y.
TwoQubitClosedForm two_qubit_closed_form(const BipartiteState& s, const Permutation& perm,
                                         CoherenceMeasure measure);

struct UnitaryPair {
  ComplexMatrix u_a;
  ComplexMatrix u_b;
};

struct LocalUnitaryResult {
  NAQCReport report;
  UnitaryPair unitaries;
};

/// Derivative-free maximization of the optimized value over local
/// unitaries U_A (x) U_B: seeded random restarts plus per-angle pattern
/// descent on su(d) generator coefficients. The first restart starts at
/// the identity, so the result never falls below the unrotated value.
/// Deterministic per seed.
LocalUnitaryResult local_unitary_maximize(const BipartiteState& s, const MUBSet& mubs,
                                          CoherenceMeasure measure, int restarts,
                                          std::uint64_t seed, int max_sweeps = 200,
                                          double improvement_tol = 1e-7);

const char* framework_name(Framework framework);

}  // namespace naqc

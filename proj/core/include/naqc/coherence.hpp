#pragma once

#include "naqc/mub.hpp"
#include "naqc/qmath.hpp"

namespace naqc {

enum class CoherenceMeasure { L1, RelativeEntropy };

/// Coherence of rho in the given reference basis: the l1 norm sums the
/// moduli of the off-diagonal elements after rotating into the basis; the
/// relative entropy is S(diag) - S(rho). Tiny negatives from round-off are
/// clamped to zero.
double coherence(const DensityMatrix& rho, const Basis& basis, CoherenceMeasure measure);

/// Sum of coherence(rho, basis, measure) over all d+1 bases of the set.
double mub_coherence_sum(const DensityMatrix& rho, const MUBSet& mubs, CoherenceMeasure measure);

/// Sum of squared diagonal elements of rho in the basis; lies in [1/d, 1].
double purity_in_basis(const DensityMatrix& rho, const Basis& basis);

/// State-independent ceiling on the MUB coherence sum.
struct Bound {
  CoherenceMeasure measure;
  int dim;
  double value;
};

/// L1: (d-1) sqrt(d(d+1)). Relative entropy: the closed form for d >= 3,
/// and the sharpened qubit value 3 H(1/2 + sqrt(3)/6) for d = 2 (the
/// generic formula is singular there). Throws UnsupportedDimension for
/// non-prime d.
Bound bound_value(CoherenceMeasure measure, int d);

/// Diagnostic only: the qubit limit 3 - log2(e)/2 of the generic
/// relative-entropy formula, which the sharpened bound supersedes.
double relative_entropy_bound_d2_limit();

const char* measure_name(CoherenceMeasure measure);

}  // namespace naqc

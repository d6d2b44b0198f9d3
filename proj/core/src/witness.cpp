#include "naqc/witness.hpp"

#include <algorithm>
#include <cmath>

namespace naqc {

namespace {

constexpr double kLog2e = 1.4426950408889634;

double xlog2x(double x) {
  return x > 0.0 ? x * std::log(x) * kLog2e : 0.0;
}

double entropy_of(const std::vector<double>& values) {
  double h = 0.0;
  for (double v : values) {
    h -= xlog2x(std::clamp(v, 0.0, 1.0));
  }
  return h;
}

/// Unnormalized conditional blocks <chi_k| rho |chi_k> on Bob for a
/// measurement of the given basis on Alice.
std::vector<ComplexMatrix> alice_blocks(const BipartiteState& s, const Basis& basis) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(basis.vectors.size());
  for (const ComplexVector& chi : basis.vectors) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (int m = 0; m < da; ++m) {
      for (int n = 0; n < da; ++n) {
        const Complex w = std::conj(chi(m)) * chi(n);
        if (w == Complex(0.0, 0.0)) {
          continue;
        }
        out.noalias() += w * s.mat().block(m * db, n * db, db, db);
      }
    }
    out = ((out + out.adjoint()) * 0.5).eval();
    blocks.push_back(std::move(out));
  }
  return blocks;
}

/// S of the classical-quantum state assembled from the blocks: its
/// spectrum is the union of the block spectra.
double post_measurement_entropy(const std::vector<ComplexMatrix>& blocks) {
  std::vector<double> spectrum;
  for (const ComplexMatrix& block : blocks) {
    for (double lambda : hermitian_eigenvalues(block)) {
      spectrum.push_back(lambda);
    }
  }
  return entropy_of(spectrum);
}

struct SameBasisStats {
  double conditional_entropy = 0.0;  // H(A outcome | B outcome)
  double mismatch_prob = 0.0;        // Pr[outcomes differ]
};

SameBasisStats same_basis_statistics(const std::vector<ComplexMatrix>& blocks,
                                     const Basis& basis) {
  const int d = basis.dim;
  std::vector<double> joint;
  joint.reserve(d * d);
  std::vector<double> marginal_b(d, 0.0);
  double mismatch = 0.0;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const ComplexVector& chi = basis.vectors[static_cast<std::size_t>(l)];
      const double p = std::max((chi.adjoint() * blocks[static_cast<std::size_t>(k)] * chi)(0).real(), 0.0);
      joint.push_back(p);
      marginal_b[static_cast<std::size_t>(l)] += p;
      if (k != l) {
        mismatch += p;
      }
    }
  }
  SameBasisStats stats;
  stats.conditional_entropy = entropy_of(joint) - entropy_of(marginal_b);
  stats.mismatch_prob = std::clamp(mismatch, 0.0, 1.0);
  return stats;
}

}  // namespace

WitnessReport eur_witness(const BipartiteState& s, const MUBSet& mubs, int r_basis, int s_basis) {
  if (s.dim_a() != s.dim_b() || s.dim_a() != mubs.dim) {
    throw DimensionMismatch("eur_witness: state and MUB dimensions differ");
  }
  const int d = mubs.dim;
  if (r_basis < 0 || r_basis > d || s_basis < 0 || s_basis > d) {
    throw InvalidArgument("eur_witness: basis index out of range");
  }
  if (r_basis == s_basis) {
    throw InvalidArgument("eur_witness: the two bases must differ");
  }
  const Basis& basis_r = mubs.bases[static_cast<std::size_t>(r_basis)];
  const Basis& basis_s = mubs.bases[static_cast<std::size_t>(s_basis)];

  double c = 0.0;
  for (const ComplexVector& psi : basis_r.vectors) {
    for (const ComplexVector& phi : basis_s.vectors) {
      c = std::max(c, std::norm(psi.dot(phi)));
    }
  }

  const DensityMatrix rho_b = partial_trace(s, Subsystem::B);
  const double entropy_b = von_neumann_entropy(rho_b);

  const std::vector<ComplexMatrix> blocks_r = alice_blocks(s, basis_r);
  const std::vector<ComplexMatrix> blocks_s = alice_blocks(s, basis_s);

  WitnessReport report;
  report.log_inv_c = -std::log2(c);
  report.e_t = (post_measurement_entropy(blocks_r) - entropy_b) +
               (post_measurement_entropy(blocks_s) - entropy_b);

  const SameBasisStats stats_r = same_basis_statistics(blocks_r, basis_r);
  const SameBasisStats stats_s = same_basis_statistics(blocks_s, basis_s);
  report.e_m = stats_r.conditional_entropy + stats_s.conditional_entropy;
  report.p_r = stats_r.mismatch_prob;
  report.p_s = stats_s.mismatch_prob;
  report.e_f = binary_entropy(report.p_r) + binary_entropy(report.p_s) +
               (report.p_r + report.p_s) * std::log2(static_cast<double>(d - 1));

  report.h_a_given_b = von_neumann_entropy(s.as_density()) - entropy_b;

  report.verdict_t = report.e_t < report.log_inv_c;
  report.verdict_m = report.e_m < report.log_inv_c;
  report.verdict_f = report.e_f < report.log_inv_c;
  return report;
}

WitnessReport naqc_witness(const BipartiteState& s, const MUBSet& mubs, CoherenceMeasure measure) {
  WitnessReport report = eur_witness(s, mubs);
  const NAQCReport naqc = naqc_optimized(s, mubs, measure);
  report.naqc_measure = measure;
  report.naqc_value = naqc.value;
  report.naqc_bound = naqc.bound;
  report.naqc_verdict = naqc.achieved;
  return report;
}

double closed_form_value(Family family, double x, ClosedFormQuantity quantity) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("closed_form_value: x must lie in [0, 1]");
  }
  if (family == Family::Rho1) {
    switch (quantity) {
      case ClosedFormQuantity::EurEstimate:
        return 2.0 * binary_entropy(x);
      case ClosedFormQuantity::L1Tilde:
        return 1.0 + std::abs(4.0 * x - 2.0);
      case ClosedFormQuantity::RETilde:
        return 3.0 - 2.0 * binary_entropy(x);
    }
  }
  const double eta = (1.0 + 2.0 * x) / 3.0;
  switch (quantity) {
    case ClosedFormQuantity::EurEstimate:
      return 2.0 * binary_entropy(eta);
    case ClosedFormQuantity::L1Tilde:
      return std::abs(4.0 * x - 1.0);
    case ClosedFormQuantity::RETilde:
      return 3.0 - 3.0 * binary_entropy(eta);
  }
  throw InvalidArgument("closed_form_value: unknown quantity");
}

}  // namespace naqc

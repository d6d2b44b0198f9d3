#pragma once

#include <optional>

#include "naqc/naqc.hpp"

namespace naqc {

/// Entanglement-witness report. The three uncertainty estimates certify
/// entanglement when they drop below -log2(c), with c the worst-case
/// overlap between the two measurement bases; the NAQC verdict fires when
/// the optimized value exceeds its bound.
struct WitnessReport {
  double e_t = 0.0;  // tomographic estimate
  double e_m = 0.0;  // measurement estimate
  double e_f = 0.0;  // Fano estimate
  double log_inv_c = 0.0;
  double p_r = 0.0;  // Pr[outcomes differ], first basis
  double p_s = 0.0;  // Pr[outcomes differ], second basis
  double h_a_given_b = 0.0;  // diagnostic conditional entropy S(AB) - S(B)
  bool verdict_t = false;
  bool verdict_m = false;
  bool verdict_f = false;
  std::optional<CoherenceMeasure> naqc_measure;
  std::optional<double> naqc_value;
  std::optional<double> naqc_bound;
  std::optional<bool> naqc_verdict;
};

/// Uncertainty-based witnesses for measurements in two of the MUBs on
/// Alice's side (r_basis defaults to the computational basis, s_basis to
/// the next one). Bob measures in the same bases for the measurement and
/// Fano estimates.
WitnessReport eur_witness(const BipartiteState& s, const MUBSet& mubs, int r_basis = 0,
                          int s_basis = 1);

/// eur_witness plus the NAQC entanglement verdict from naqc_optimized.
WitnessReport naqc_witness(const BipartiteState& s, const MUBSet& mubs,
                           CoherenceMeasure measure);

enum class Family { Isotropic2, Rho1 };

enum class ClosedFormQuantity { EurEstimate, L1Tilde, RETilde };

/// Closed-form curves for the two benchmark families: the common
/// uncertainty estimate and the optimized values for both measures.
double closed_form_value(Family family, double x, ClosedFormQuantity quantity);

}  // namespace naqc

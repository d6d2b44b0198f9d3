#pragma once

#include <functional>
#include <string>
#include <vector>

#include "naqc/witness.hpp"

namespace naqc {

enum class StateFamily { Isotropic, Rho1 };

/// Family member at parameter x; Rho1 requires d = 2.
BipartiteState family_state(StateFamily family, int d, double x);

StateFamily parse_family(const std::string& name);
const char* family_name(StateFamily family);

/// One grid point of a family sweep: both framework values for the chosen
/// measure, the bound, and the uncertainty estimates at the default basis
/// pair.
struct SweepRow {
  double x = 0.0;
  double c_na = 0.0;
  double c_na_tilde = 0.0;
  double bound = 0.0;
  double e_t = 0.0;
  double e_m = 0.0;
  double e_f = 0.0;
  double log_inv_c = 0.0;
};

/// Evaluates the grid x_min..x_max (inclusive, steps points). Rows are
/// computed in parallel on up to `threads` workers and returned in x
/// order; each row's arithmetic is self-contained, so the output is
/// independent of the thread count.
std::vector<SweepRow> sweep_family(StateFamily family, int d, CoherenceMeasure measure, int steps,
                                   double x_min, double x_max, int threads = 1);

/// Grid scan followed by bisection on every sign-change bracket of g.
/// Returns the crossing abscissas sorted ascending, each located to
/// within x_tol.
std::vector<double> find_crossings(const std::function<double(double)>& g, double x_min,
                                   double x_max, int grid_points, double x_tol);

/// Criterion value minus its threshold, as scanned by the threshold
/// finder: positive means the criterion fires (NAQC) or the estimate
/// exceeds the uncertainty floor (EUR).
enum class ThresholdCurve { NaqcValue, EstimateT, EstimateM, EstimateF };

struct ThresholdQuery {
  StateFamily family = StateFamily::Rho1;
  int d = 2;
  ThresholdCurve curve = ThresholdCurve::NaqcValue;
  CoherenceMeasure measure = CoherenceMeasure::L1;  // NaqcValue only
  Framework framework = Framework::Optimized;       // NaqcValue only
  double x_tol = 1e-6;
  int grid_points = 200;
};

struct ThresholdResult {
  ThresholdQuery query;
  std::vector<double> crossings;
};

ThresholdResult find_thresholds(const ThresholdQuery& query);

}  // namespace naqc

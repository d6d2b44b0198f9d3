#include "naqc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace naqc {

BipartiteState family_state(StateFamily family, int d, double x) {
  if (family == StateFamily::Rho1) {
    if (d != 2) {
      throw UnsupportedDimension("family_state: rho1 is a two-qubit family");
    }
    return rho1(x);
  }
  return isotropic(d, x);
}

StateFamily parse_family(const std::string& name) {
  if (name == "isotropic") {
    return StateFamily::Isotropic;
  }
  if (name == "rho1") {
    return StateFamily::Rho1;
  }
  throw InvalidArgument("unknown family: " + name);
}

const char* family_name(StateFamily family) {
  return family == StateFamily::Isotropic ? "isotropic" : "rho1";
}

std::vector<SweepRow> sweep_family(StateFamily family, int d, CoherenceMeasure measure, int steps,
                                   double x_min, double x_max, int threads) {
  if (steps < 2) {
    throw InvalidArgument("sweep: steps must be >= 2");
  }
  if (!(x_max > x_min)) {
    throw InvalidArgument("sweep: x_max must exceed x_min");
  }
  const MUBSet mubs = generate_mubs(d);
  family_state(family, d, x_min);  // family/d compatibility check before any worker starts
  std::vector<SweepRow> rows(steps);

  const auto compute_row = [&](int idx) {
    const double x = x_min + (x_max - x_min) * idx / (steps - 1);
    const BipartiteState state = family_state(family, d, x);
    const CostMatrix cost = cost_matrix(state, mubs, measure);
    SweepRow row;
    row.x = x;
    row.c_na = naqc_averaged_from_cost(cost, measure).value;
    const NAQCReport optimized = naqc_optimized_from_cost(cost, measure);
    row.c_na_tilde = optimized.value;
    row.bound = optimized.bound;
    const WitnessReport witness = eur_witness(state, mubs);
    row.e_t = witness.e_t;
    row.e_m = witness.e_m;
    row.e_f = witness.e_f;
    row.log_inv_c = witness.log_inv_c;
    rows[static_cast<std::size_t>(idx)] = row;
  };

  const int workers = std::max(1, std::min(threads, steps));
  if (workers == 1) {
    for (int i = 0; i < steps; ++i) {
      compute_row(i);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < steps; i += workers) {
          compute_row(i);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  return rows;
}

std::vector<double> find_crossings(const std::function<double(double)>& g, double x_min,
                                   double x_max, int grid_points, double x_tol) {
  if (grid_points < 2) {
    throw InvalidArgument("find_crossings: grid_points must be >= 2");
  }
  if (!(x_max > x_min) || !(x_tol > 0.0)) {
    throw InvalidArgument("find_crossings: bad interval or tolerance");
  }
  std::vector<double> xs(grid_points), gs(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = x_min + (x_max - x_min) * i / (grid_points - 1);
    gs[i] = g(xs[i]);
  }
  std::vector<double> crossings;
  for (int i = 0; i + 1 < grid_points; ++i) {
    if (gs[i] == 0.0) {
      crossings.push_back(xs[i]);
      continue;
    }
    if (gs[i] * gs[i + 1] >= 0.0) {
      continue;
    }
    double lo = xs[i];
    double hi = xs[i + 1];
    double g_lo = gs[i];
    while (hi - lo > x_tol) {
      const double mid = 0.5 * (lo + hi);
      const double g_mid = g(mid);
      if (g_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((g_lo < 0.0) == (g_mid < 0.0)) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    crossings.push_back(0.5 * (lo + hi));
  }
  if (grid_points > 0 && gs.back() == 0.0) {
    crossings.push_back(xs.back());
  }
  std::sort(crossings.begin(), crossings.end());
  return crossings;
}

ThresholdResult find_thresholds(const ThresholdQuery& query) {
  const MUBSet mubs = generate_mubs(query.d);
  std::function<double(double)> g;
  if (query.curve == ThresholdCurve::NaqcValue) {
    g = [&](double x) {
      const BipartiteState state = family_state(query.family, query.d, x);
      const CostMatrix cost = cost_matrix(state, mubs, query.measure);
      const NAQCReport report = query.framework == Framework::Averaged
                                    ? naqc_averaged_from_cost(cost, query.measure)
                                    : naqc_optimized_from_cost(cost, query.measure);
      return report.value - report.bound;
    };
  } else {
    g = [&](double x) {
      const BipartiteState state = family_state(query.family, query.d, x);
      const WitnessReport report = eur_witness(state, mubs);
      double estimate = report.e_t;
      if (query.curve == ThresholdCurve::EstimateM) {
        estimate = report.e_m;
      } else if (query.curve == ThresholdCurve::EstimateF) {
        estimate = report.e_f;
      }
      return estimate - report.log_inv_c;
    };
  }
  ThresholdResult result;
  result.query = query;
  result.crossings = find_crossings(g, 0.0, 1.0, query.grid_points, query.x_tol);
  return result;
}

}  // namespace naqc

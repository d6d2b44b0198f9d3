#include "naqc/assignment.hpp"

#include <cmath>
#include <limits>

#include "naqc/errors.hpp"

namespace naqc {

namespace {

// Hungarian method with row/column potentials and shortest augmenting
// paths; minimizes total cost over perfect assignments in O(n^3).
std::vector<int> hungarian_min(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> min_reduced(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < min_reduced[j]) {
          min_reduced[j] = cur;
          way[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] != 0) {
      row_to_col[match[j] - 1] = j - 1;
    }
  }
  return row_to_col;
}

double assignment_sum(const Eigen::MatrixXd& scores, const std::vector<int>& row_to_col) {
  double total = 0.0;
  for (std::size_t i = 0; i < row_to_col.size(); ++i) {
    total += scores(static_cast<Eigen::Index>(i), row_to_col[i]);
  }
  return total;
}

// Max value over assignments of the submatrix spanned by the given rows
// and columns (used by the tie-break refinement).
double submatrix_max_value(const Eigen::MatrixXd& scores, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  if (rows.empty()) {
    return 0.0;
  }
  Eigen::MatrixXd sub(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      sub(a, b) = scores(rows[a], cols[b]);
    }
  }
  return assignment_max_value(sub);
}

}  // namespace

double assignment_max_value(const Eigen::MatrixXd& scores) {
  if (scores.rows() != scores.cols() || scores.rows() < 1) {
    throw DimensionMismatch("assignment: score matrix must be square and nonempty");
  }
  const std::vector<int> row_to_col = hungarian_min(-scores);
  return assignment_sum(scores, row_to_col);
}

AssignmentResult assignment_max(const Eigen::MatrixXd& scores) {
  const int n = static_cast<int>(scores.rows());
  const double best = assignment_max_value(scores);
  const double tol = 1e-9 * (1.0 + std::abs(best));

  // Fix rows in order, always taking the smallest column that still admits
  // an optimal completion; the result is the lexicographically smallest
  // optimum up to the tie tolerance.
  std::vector<int> chosen(n, -1);
  std::vector<bool> col_used(n, false);
  double fixed = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> remaining_rows;
    for (int r = i + 1; r < n; ++r) {
      remaining_rows.push_back(r);
    }
    for (int j = 0; j < n; ++j) {
      if (col_used[j]) {
        continue;
      }
      std::vector<int> remaining_cols;
      for (int c = 0; c < n; ++c) {
        if (!col_used[c] && c != j) {
          remaining_cols.push_back(c);
        }
      }
      const double completion = submatrix_max_value(scores, remaining_rows, remaining_cols);
      if (fixed + scores(i, j) + completion >= best - tol) {
        chosen[i] = j;
        col_used[j] = true;
        fixed += scores(i, j);
        break;
      }
    }
    if (chosen[i] < 0) {
      throw NoConvergence("assignment: tie-break refinement failed");
    }
  }
  return AssignmentResult{assignment_sum(scores, chosen), std::move(chosen)};
}

}  // namespace naqc

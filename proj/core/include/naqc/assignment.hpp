#pragma once

#include <Eigen/Dense>
#include <vector>

namespace naqc {

/// Maximum-weight perfect assignment: choose one column per row, each
/// column used once, maximizing the sum of picked scores.
struct AssignmentResult {
  double value = 0.0;
  std::vector<int> assignment;  // assignment[row] = column
};

/// Optimal value only (Hungarian method on the negated scores, O(n^3)).
double assignment_max_value(const Eigen::MatrixXd& scores);

/// Optimal value plus the lexicographically smallest optimal assignment.
/// Ties within 1e-9 * (1 + |optimum|) count as equal when breaking them.
AssignmentResult assignment_max(const Eigen::MatrixXd& scores);

}  // namespace naqc

#pragma once

#include <string>
#include <vector>

#include "naqc/qmath.hpp"

namespace naqc {

/// On-disk density-matrix format:
///   {"dims": [dA, dB] or [d], "matrix": [[[re, im], ...], ...]}
/// with the matrix row-major and doubles written to 17 significant digits.
struct StateFile {
  std::vector<int> dims;
  ComplexMatrix matrix;

  bool bipartite() const { return dims.size() == 2; }
  DensityMatrix as_density() const;
  BipartiteState as_bipartite() const;
};

/// Parses and shape-checks a state file. Throws InvalidArgument on
/// malformed JSON or inconsistent dimensions; density-matrix invariants
/// are enforced by as_density()/as_bipartite().
StateFile read_state_file(const std::string& path);

void write_state_file(const std::string& path, const StateFile& sf);

StateFile to_state_file(const DensityMatrix& rho);
StateFile to_state_file(const BipartiteState& s);

}  // namespace naqc

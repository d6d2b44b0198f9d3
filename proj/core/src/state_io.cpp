#include "naqc/state_io.hpp"

#include <fstream>
#include <json.hpp>

#include "naqc/jsonio.hpp"

namespace naqc {

DensityMatrix StateFile::as_density() const {
  if (dims.size() != 1) {
    throw InvalidArgument("state file: expected a single-system state");
  }
  return DensityMatrix(matrix);
}

BipartiteState StateFile::as_bipartite() const {
  if (dims.size() != 2) {
    throw InvalidArgument("state file: expected a bipartite state");
  }
  return BipartiteState(dims[0], dims[1], matrix);
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open state file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("state file parse error: " + std::string(e.what()));
  }
  StateFile sf;
  try {
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.empty() || dims.size() > 2) {
      throw InvalidArgument("state file: dims must hold one or two entries");
    }
    long long total = 1;
    for (const auto& d : dims) {
      const int v = d.get<int>();
      if (v < 1) {
        throw InvalidArgument("state file: dims entries must be positive");
      }
      sf.dims.push_back(v);
      total *= v;
    }
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<long long>(rows.size()) != total) {
      throw InvalidArgument("state file: matrix row count does not match dims");
    }
    sf.matrix.resize(total, total);
    for (long long r = 0; r < total; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || static_cast<long long>(row.size()) != total) {
        throw InvalidArgument("state file: matrix is not square");
      }
      for (long long c = 0; c < total; ++c) {
        const auto& cell = row.at(c);
        if (!cell.is_array() || cell.size() != 2) {
          throw InvalidArgument("state file: entries must be [re, im] pairs");
        }
        sf.matrix(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("state file schema error: " + std::string(e.what()));
  }
  if (!all_finite(sf.matrix)) {
    throw InvalidArgument("state file: non-finite entries");
  }
  return sf;
}

void write_state_file(const std::string& path, const StateFile& sf) {
  JsonWriter w;
  w.begin_object();
  w.key("dims").value_array(sf.dims);
  w.key("matrix").begin_array();
  for (Eigen::Index r = 0; r < sf.matrix.rows(); ++r) {
    w.begin_array();
    for (Eigen::Index c = 0; c < sf.matrix.cols(); ++c) {
      w.begin_array();
      w.value(sf.matrix(r, c).real());
      w.value(sf.matrix(r, c).imag());
      w.end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidArgument("cannot write state file: " + path);
  }
  out << w.str() << '\n';
}

StateFile to_state_file(const DensityMatrix& rho) {
  return StateFile{{rho.dim()}, rho.mat()};
}

StateFile to_state_file(const BipartiteState& s) {
  return StateFile{{s.dim_a(), s.dim_b()}, s.mat()};
}

}  // namespace naqc

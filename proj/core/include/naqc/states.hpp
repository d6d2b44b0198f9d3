#pragma once

#include <cstdint>
#include <vector>

#include "naqc/qmath.hpp"
#include "naqc/rng.hpp"

namespace naqc {

/// Pauli matrix for axis 1 (x), 2 (y) or 3 (z).
const ComplexMatrix& pauli(int axis);

/// Isotropic family on d x d: a convex path from the fully mixed state
/// (x = 1/d^2) through every fidelity x = <Phi|rho|Phi> with the maximally
/// entangled |Phi> = sum_n |nn>/sqrt(d). Requires x in [0, 1].
BipartiteState isotropic(int d, double x);

/// Two-qubit mixture x |Phi+><Phi+| + (1-x) |Psi-><Psi-|.
BipartiteState rho1(double x);

/// Projector onto |Phi> = sum_n |nn>/sqrt(d).
BipartiteState max_entangled(int d);

/// Ginibre sample G G^dagger / tr(G G^dagger) with G a d x d matrix of
/// independent standard complex Gaussians, drawn row-major (re then im).
/// Deterministic per (d, seed).
DensityMatrix random_density(int d, std::uint64_t seed);
DensityMatrix random_density(int d, Rng& rng);

/// Convex mixture of product states.
struct SeparableSpec {
  struct Term {
    double weight;
    DensityMatrix rho_a;
    DensityMatrix rho_b;
  };
  std::vector<Term> terms;
};

struct SeparableSample {
  SeparableSpec spec;
  BipartiteState state;
};

/// Weights from normalized uniform variates, factors from random_density,
/// all drawn from one stream. Deterministic per (dims, num_terms, seed).
SeparableSample random_separable(int dim_a, int dim_b, int num_terms, std::uint64_t seed);

/// Assembles sum_k q_k rho_A^k (x) rho_B^k.
BipartiteState assemble_separable(const SeparableSpec& spec);

/// Two-qubit local vectors and correlation tensor, Pauli axes (x, y, z):
/// r_i = tr rho (sigma_i (x) I), s_i = tr rho (I (x) sigma_i),
/// t_ij = tr rho (sigma_i (x) sigma_j).
struct BlochDecomposition {
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// Throws DimensionMismatch unless dimA = dimB = 2.
BlochDecomposition bloch_decompose(const BipartiteState& s);

/// Inverse of bloch_decompose; the round trip is exact to 1e-12.
BipartiteState bloch_assemble(const BlochDecomposition& b);

}  // namespace naqc

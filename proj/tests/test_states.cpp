#include "naqc/states.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "naqc/state_io.hpp"
#include "test_support.hpp"

using namespace naqc;

namespace {

ComplexVector phi_vector(int d) {
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (int n = 0; n < d; ++n) {
    phi(n * d + n) = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return phi;
}

double fidelity_with_phi(const BipartiteState& s) {
  const ComplexVector phi = phi_vector(s.dim_a());
  return (phi.adjoint() * s.mat() * phi)(0).real();
}

}  // namespace

TEST(Isotropic, PureAndMixedLimits) {
  const BipartiteState pure = isotropic(2, 1.0);
  const ComplexVector phi = phi_vector(2);
  EXPECT_LT((pure.mat() - phi * phi.adjoint()).cwiseAbs().maxCoeff(), 1e-15);

  const BipartiteState mixed = isotropic(3, 1.0 / 9.0);
  EXPECT_LT((mixed.mat() - ComplexMatrix::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Isotropic, FidelityEqualsParameter) {
  for (int d : {2, 3, 5}) {
    for (double x : {0.0, 0.17, 0.5, 0.93, 1.0}) {
      EXPECT_NEAR(fidelity_with_phi(isotropic(d, x)), x, 1e-12);
    }
  }
  EXPECT_THROW(isotropic(2, -0.01), InvalidArgument);
  EXPECT_THROW(isotropic(2, 1.01), InvalidArgument);
}

TEST(Isotropic, AffineInParameter) {
  const double x1 = 0.2, x2 = 0.9;
  const ComplexMatrix mid = isotropic(3, (x1 + x2) / 2).mat();
  const ComplexMatrix avg = (isotropic(3, x1).mat() + isotropic(3, x2).mat()) * 0.5;
  EXPECT_LT((mid - avg).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FamilyGrids, StatesStayValid) {
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    EXPECT_NO_THROW(BipartiteState(2, 2, rho1(x).mat()));
    EXPECT_NO_THROW(BipartiteState(3, 3, isotropic(3, x).mat()));
  }
}

TEST(Rho1, EndpointsAndBloch) {
  const BipartiteState at_one = rho1(1.0);
  ComplexVector phi_plus = ComplexVector::Zero(4);
  phi_plus(0) = phi_plus(3) = 1.0 / std::sqrt(2.0);
  EXPECT_LT((at_one.mat() - phi_plus * phi_plus.adjoint()).cwiseAbs().maxCoeff(), 1e-15);

  const BipartiteState at_zero = rho1(0.0);
  ComplexVector psi_minus = ComplexVector::Zero(4);
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  EXPECT_LT((at_zero.mat() - psi_minus * psi_minus.adjoint()).cwiseAbs().maxCoeff(), 1e-15);

  for (double x : {0.0, 0.3, 0.5, 0.8, 1.0}) {
    const BlochDecomposition b = bloch_decompose(rho1(x));
    EXPECT_LT(b.r.cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(b.s.cwiseAbs().maxCoeff(), 1e-14);
    Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
    expected(0, 0) = 2.0 * x - 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = 2.0 * x - 1.0;
    EXPECT_LT((b.t - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(MaxEntangled, MarginalsAndPurity) {
  for (int d : {2, 3}) {
    const BipartiteState state = max_entangled(d);
    EXPECT_NEAR(purity(state.as_density()), 1.0, 1e-12);
    EXPECT_NEAR(fidelity_with_phi(state), 1.0, 1e-14);
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / d;
    EXPECT_LT((partial_trace(state, Subsystem::A).mat() - mixed).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((partial_trace(state, Subsystem::B).mat() - mixed).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(RandomDensity, InvariantsAndDeterminism) {
  for (int d : {2, 3, 5}) {
    const DensityMatrix a = random_density(d, 99);
    const DensityMatrix b = random_density(d, 99);
    EXPECT_TRUE((a.mat().array() == b.mat().array()).all());
    EXPECT_NO_THROW(DensityMatrix(a.mat()));
    const DensityMatrix c = random_density(d, 100);
    EXPECT_GT((a.mat() - c.mat()).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(RandomDensity, MeanPuritySanityBand) {
  Rng rng(7);
  double mean = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    mean += purity(random_density(2, rng));
  }
  mean /= samples;
  EXPECT_GT(mean, 0.5);
  EXPECT_LT(mean, 1.0);
}

TEST(RandomSeparable, SpecMatchesAssembledState) {
  const SeparableSample one_term = random_separable(2, 2, 1, 5);
  EXPECT_EQ(one_term.spec.terms.size(), 1u);
  EXPECT_LT((one_term.state.mat() -
             kron(one_term.spec.terms[0].rho_a.mat(), one_term.spec.terms[0].rho_b.mat()))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);

  const SeparableSample sample = random_separable(2, 3, 4, 5);
  ComplexMatrix manual = ComplexMatrix::Zero(6, 6);
  double weight_sum = 0.0;
  for (const auto& term : sample.spec.terms) {
    manual += term.weight * kron(term.rho_a.mat(), term.rho_b.mat());
    weight_sum += term.weight;
  }
  EXPECT_NEAR(weight_sum, 1.0, 1e-12);
  EXPECT_LT((sample.state.mat() - manual).cwiseAbs().maxCoeff(), 1e-12);

  const SeparableSample again = random_separable(2, 3, 4, 5);
  EXPECT_TRUE((sample.state.mat().array() == again.state.mat().array()).all());
}

TEST(Bloch, KnownDecompositions) {
  const BipartiteState mixed(2, 2, ComplexMatrix::Identity(4, 4) / 4.0);
  const BlochDecomposition zero = bloch_decompose(mixed);
  EXPECT_LT(zero.r.cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(zero.s.cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(zero.t.cwiseAbs().maxCoeff(), 1e-15);

  const BlochDecomposition bell = bloch_decompose(rho1(1.0));
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = 1.0;
  EXPECT_LT((bell.t - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Bloch, RoundTripAndDimensionCheck) {
  Rng rng(23);
  for (int rep = 0; rep < 25; ++rep) {
    const BipartiteState state = naqc::testing::random_bipartite(2, 2, rng);
    const BipartiteState rebuilt = bloch_assemble(bloch_decompose(state));
    EXPECT_LT((rebuilt.mat() - state.mat()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(bloch_decompose(naqc::testing::random_bipartite(3, 3, rng)), DimensionMismatch);
}

TEST(StateIo, RoundTripIsExact) {
  const std::string path = ::testing::TempDir() + "state_roundtrip.json";
  const BipartiteState state = rho1(0.37);
  write_state_file(path, to_state_file(state));
  const StateFile loaded = read_state_file(path);
  ASSERT_EQ(loaded.dims, (std::vector<int>{2, 2}));
  EXPECT_TRUE((loaded.matrix.array() == state.mat().array()).all());
  std::remove(path.c_str());
}

TEST(StateIo, RejectsMalformedFiles) {
  const std::string path = ::testing::TempDir() + "state_bad.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("{\"dims\": [2, 2], \"matrix\": [[1, 2], [3, 4]]}", f);
    std::fclose(f);
  }
  EXPECT_THROW(read_state_file(path), InvalidArgument);
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("not json", f);
    std::fclose(f);
  }
  EXPECT_THROW(read_state_file(path), InvalidArgument);
  EXPECT_THROW(read_state_file(::testing::TempDir() + "does_not_exist.json"), InvalidArgument);
  std::remove(path.c_str());
}

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlift/errors.hpp"
#include "qlift/hgp.hpp"

using namespace qlift;
using namespace qlift::fixtures;

namespace {

CodeParams cyclic_factor_lift(std::size_t ell, std::size_t m) {
  BitMatrix h1 = repetition_check_matrix(ell);
  BitMatrix h2 = repetition_check_matrix(2);
  ZLiftedCode zl = hpc_naive_zlift(h1, h2);
  LiftPresentation p = cone_presentation(zl.base);
  VoltageAssignment v1 = cyclic_voltages(h1, m);
  VoltageAssignment v2{m, std::vector<Permutation>(tanner_graph(h2).edges.size(), identity_permutation(m))};
  VoltageAssignment v = product_voltages(p, h1, h2, v1, v2, ProductMode::factor1);
  return parameters_with_distance(lift_code(zl.base, zl, p, v).code());
}

}  // namespace

TEST(Hgp, RepetitionCheckMatrix) {
  EXPECT_EQ(repetition_check_matrix(2), (BitMatrix{{1, 1}, {1, 1}}));
  BitMatrix r3 = repetition_check_matrix(3);
  EXPECT_EQ(r3, (BitMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  Graph g = tanner_graph(r3).graph();
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_EQ(first_betti_number(g), 1u);
  try {
    repetition_check_matrix(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(Hgp, ToricParameters) {
  EXPECT_EQ(parameters_with_distance(rep_hpc(2, 2)), (CodeParams{8, 2, 2}));
  EXPECT_EQ(parameters_with_distance(rep_hpc(3, 3)), (CodeParams{18, 2, 3}));
}

TEST(Hgp, BlockShapes) {
  BitMatrix h1{{1, 1, 0}, {0, 1, 1}};
  BitMatrix h2{{1, 0, 1, 1}};
  CssCode c = hypergraph_product(h1, h2);
  EXPECT_EQ(c.n(), 3u * 4u + 2u * 1u);
  EXPECT_EQ(c.hx().rows(), 2u * 4u);
  EXPECT_EQ(c.hz().rows(), 3u * 1u);
}

TEST(Hgp, EmptySecondFactor) {
  BitMatrix h1 = repetition_check_matrix(3);
  CssCode c = hypergraph_product(h1, BitMatrix(0, 2));
  EXPECT_EQ(c.hz().rows(), 0u);
  EXPECT_EQ(c.hx(), kron(h1, BitMatrix::identity(2)));
}

TEST(Hgp, NaiveZLift) {
  ZLiftedCode zl = hpc_naive_zlift(repetition_check_matrix(2), repetition_check_matrix(2));
  EXPECT_TRUE(is_zero(multiply(zl.hx, IntMatrix(zl.hz.transpose()))));
  EXPECT_TRUE(zl.support_preserving);
  EXPECT_TRUE(hpc_naive_zlift(repetition_check_matrix(3), repetition_check_matrix(2)).support_preserving);
  ZLiftedCode zero = hpc_naive_zlift(repetition_check_matrix(2), BitMatrix(2, 3));
  EXPECT_EQ(zero.base.hx().cols(), 2u * 3u + 2u * 2u);
  for (Eigen::Index r = 0; r < zero.hz.rows(); ++r)
    for (Eigen::Index c = 6; c < zero.hz.cols(); ++c) EXPECT_EQ(zero.hz(r, c), -1 * (zero.base.hz().get(r, c) ? 1 : 0));
}

TEST(Hgp, ProductVoltagesTrivialLift) {
  BitMatrix rep = repetition_check_matrix(2);
  ZLiftedCode zl = hpc_naive_zlift(rep, rep);
  LiftPresentation p = cone_presentation(zl.base);
  VoltageAssignment id{3, std::vector<Permutation>(4, identity_permutation(3))};
  VoltageAssignment v = product_voltages(p, rep, rep, id, id, ProductMode::diagonal);
  EXPECT_EQ(v, identity_voltages(p, 3));
  EXPECT_EQ(parameters_with_distance(lift_code(zl.base, zl, p, v).code()), (CodeParams{24, 6, 2}));
}

TEST(Hgp, DiagonalShiftIsConnected) {
  BitMatrix rep = repetition_check_matrix(2);
  ZLiftedCode zl = hpc_naive_zlift(rep, rep);
  LiftPresentation p = cone_presentation(zl.base);
  for (std::size_t m : {2u, 3u, 4u}) {
    VoltageAssignment shift = cyclic_voltages(rep, m);
    VoltageAssignment v = product_voltages(p, rep, rep, shift, shift, ProductMode::diagonal);
    EXPECT_EQ(cover_components(v, p).size(), 1u);
    LiftedCode lifted = lift_code(zl.base, zl, p, v);
    EXPECT_EQ(lifted.code().n(), 8u * m);
  }
}

TEST(Hgp, LiftConstructCommutation) {
  EXPECT_EQ(cyclic_factor_lift(2, 2), parameters_with_distance(rep_hpc(4, 2)));
  EXPECT_EQ(cyclic_factor_lift(2, 3), parameters_with_distance(rep_hpc(6, 2)));
  EXPECT_EQ(cyclic_factor_lift(3, 2), parameters_with_distance(rep_hpc(6, 2)));
  EXPECT_EQ(cyclic_factor_lift(2, 3), (CodeParams{24, 2, 2}));
}

TEST(Hgp, ConnectedDoubleCoversOfToricCode) {
  LiftPresentation p = cone_presentation(rep_hpc(2, 2));
  EXPECT_EQ(enumerate_covers(p, 2, true).size(), 3u);
}

TEST(HgpProperty, RandomProductsAreOrthogonal) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    BitMatrix h1 = random_bits(rng, uniform(rng, 0, 6), uniform(rng, 1, 8));
    BitMatrix h2 = random_bits(rng, uniform(rng, 0, 6), uniform(rng, 1, 8));
    CssCode c = hypergraph_product(h1, h2);
    ASSERT_EQ(c.n(), h1.cols() * h2.cols() + h1.rows() * h2.rows());
    ASSERT_EQ(c.hx().rows(), h1.rows() * h2.cols());
    ASSERT_EQ(c.hz().rows(), h1.cols() * h2.rows());
    ASSERT_NO_THROW(validate_zlift(c, hpc_naive_zlift(h1, h2).hx, hpc_naive_zlift(h1, h2).hz));
  }
}

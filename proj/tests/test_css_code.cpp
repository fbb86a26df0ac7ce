#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlift/css_code.hpp"
#include "qlift/errors.hpp"
#include "qlift/hgp.hpp"

using namespace qlift;
using namespace qlift::fixtures;

TEST(CssCode, ValidExamples) {
  EXPECT_NO_THROW(square_code());
  EXPECT_NO_THROW(fano_code());
}

TEST(CssCode, OrthogonalityViolationNamesPair) {
  try {
    CssCode(BitMatrix{{1, 0}}, BitMatrix{{1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::orthogonality);
    EXPECT_NE(std::string(e.what()).find("X-check 0"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("Z-check 0"), std::string::npos);
  }
}

TEST(CssCode, ShapeMismatch) {
  try {
    CssCode(BitMatrix{{1, 1}}, BitMatrix{{1, 1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension);
  }
}

TEST(CssCode, Parameters) {
  EXPECT_EQ(parameters(fano_code()), (CodeParams{7, 0, std::nullopt}));
  EXPECT_EQ(parameters(rep_hpc(3, 3)), (CodeParams{18, 2, std::nullopt}));
  EXPECT_EQ(parameters(square_code()), (CodeParams{2, 0, std::nullopt}));
  EXPECT_EQ(parameters(square_code()).to_string(), "[[2,0]]");
}

TEST(CssCode, Distance) {
  EXPECT_EQ(distance(rep_hpc(2, 2)), 2u);
  EXPECT_EQ(distance(rep_hpc(3, 3)), 3u);
  EXPECT_EQ(distance(fano_code()), std::nullopt);
  EXPECT_EQ(parameters_with_distance(rep_hpc(2, 2)).to_string(), "[[8,2,2]]");
}

TEST(CssCode, DistanceBudget) {
  try {
    distance(rep_hpc(3, 3), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget);
  }
}

TEST(CssCode, EmptyChecks) {
  CssCode c(BitMatrix(0, 3), BitMatrix(0, 3));
  EXPECT_EQ(parameters_with_distance(c), (CodeParams{3, 3, 1}));
  CssCode classical(repetition_check_matrix(3), BitMatrix(0, 3));
  EXPECT_EQ(parameters_with_distance(classical), (CodeParams{3, 1, 1}));
}

TEST(CssCodeProperty, HomologyMatchesRankFormula) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    CssCode c = hypergraph_product(random_bits(rng, uniform(rng, 1, 4), uniform(rng, 1, 5)),
                                   random_bits(rng, uniform(rng, 1, 4), uniform(rng, 1, 5)));
    ASSERT_EQ(parameters(c).k, homology_dimension(c));
    ASSERT_TRUE(multiply_transpose(c.hx(), c.hz()).is_zero());
  }
}

TEST(CssCodeProperty, DirectSumScalesParameters) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    CssCode c = hypergraph_product(random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 3)),
                                   random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 3)));
    std::size_t t = uniform(rng, 1, 3);
    CodeParams base = parameters_with_distance(c);
    CodeParams sum = parameters_with_distance(direct_sum(c, t));
    ASSERT_EQ(sum.n, t * base.n);
    ASSERT_EQ(sum.k, t * base.k);
    ASSERT_EQ(sum.d, base.d);
  }
}

namespace {

BitMatrix permute(const BitMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(rows[r], cols[c], m.get(r, c));
  return out;
}

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(CssCodeProperty, DistanceInvariantUnderPermutation) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    CssCode c = hypergraph_product(random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 4)),
                                   random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 4)));
    auto cols = shuffled(c.n(), rng);
    CssCode p(permute(c.hx(), shuffled(c.hx().rows(), rng), cols), permute(c.hz(), shuffled(c.hz().rows(), rng), cols));
    ASSERT_EQ(parameters_with_distance(c), parameters_with_distance(p));
  }
}

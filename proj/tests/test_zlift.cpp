#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlift/errors.hpp"
#include "qlift/hgp.hpp"
#include "qlift/zlift.hpp"

using namespace qlift;
using namespace qlift::fixtures;

TEST(ZLift, PaperLiftValidates) {
  ZLiftedCode zl = square_odd_zlift();
  EXPECT_TRUE(zl.support_preserving);
  EXPECT_EQ(to_bits(zl.hx), zl.base.hx());
  EXPECT_EQ(to_bits(zl.hz), zl.base.hz());
}

TEST(ZLift, NaiveAllOnesLiftFailsOverZ) {
  try {
    validate_zlift(square_code(), int_matrix(2, 2, {1, 1, 1, 1}), int_matrix(1, 2, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    EXPECT_NE(std::string(e.what()).find("integer product is 2"), std::string::npos);
  }
}

TEST(ZLift, ReductionMismatchAndShape) {
  try {
    validate_zlift(square_code(), int_matrix(2, 2, {2, 1, 1, 1}), int_matrix(1, 2, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
  try {
    validate_zlift(square_code(), int_matrix(1, 2, {1, -1}), int_matrix(1, 2, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension);
  }
}

TEST(ZLift, SupportPreservingFlag) {
  ZLiftedCode zl = validate_zlift(square_code(), int_matrix(2, 2, {1, -1, 1, -1}), int_matrix(1, 2, {3, 3}));
  EXPECT_TRUE(zl.support_preserving);
  ZLiftedCode even = validate_zlift(square_code(), int_matrix(2, 2, {1, -1, 1, -1}), int_matrix(1, 2, {1, 1}));
  EXPECT_TRUE(even.support_preserving);
  CssCode c(BitMatrix{{1, 1, 0}}, BitMatrix{{0, 0, 1}});
  ZLiftedCode padded = validate_zlift(c, int_matrix(1, 3, {1, 1, 0}), int_matrix(1, 3, {2, -2, 1}));
  EXPECT_FALSE(padded.support_preserving);
}

TEST(ZLift, WitnessForSquareCode) {
  auto w = support_preserving_witness(square_code(), 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->hx, int_matrix(2, 2, {1, -1, 1, -1}));
  EXPECT_EQ(w->hz, int_matrix(1, 2, {1, 1}));
  EXPECT_TRUE(w->support_preserving);
}

TEST(ZLift, WitnessBoundValidation) {
  try {
    support_preserving_witness(square_code(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(ZLift, WitnessWithoutZChecks) {
  CssCode c(repetition_check_matrix(3), BitMatrix(0, 3));
  auto w = support_preserving_witness(c);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_bits(w->hx), c.hx());
}

TEST(ZLift, WitnessForToricCode) {
  auto w = support_preserving_witness(rep_hpc(2, 2), 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->support_preserving);
  EXPECT_TRUE(is_zero(multiply(w->hx, IntMatrix(w->hz.transpose()))));
}

TEST(ZLift, FanoRefutedAtFour) {
  RefutationVerdict v = refute_support_preserving(fano_code(), 8);
  EXPECT_TRUE(v.refuted);
  EXPECT_EQ(v.exponent, 2);
  EXPECT_EQ(v.to_string(), "refuted at 2^2");
  EXPECT_FALSE(v.survivor.has_value());
}

TEST(ZLift, FanoMonotonicity) {
  EXPECT_TRUE(modular_solution(fano_code(), 1).has_value());
  for (int k = 2; k <= 5; ++k) EXPECT_FALSE(modular_solution(fano_code(), k).has_value()) << "k=" << k;
}

TEST(ZLift, FanoHasNoBoundedWitness) {
  EXPECT_FALSE(support_preserving_witness(fano_code(), 3).has_value());
}

TEST(ZLift, SquareCodeNotRefuted) {
  RefutationVerdict v = refute_support_preserving(square_code(), 8);
  EXPECT_FALSE(v.refuted);
  EXPECT_EQ(v.exponent, 8);
  ASSERT_TRUE(v.survivor.has_value());
  EXPECT_EQ(v.to_string(), "witness mod 2^8 survives");
  IntMatrix prod = multiply(v.survivor->hx, IntMatrix(v.survivor->hz.transpose()));
  EXPECT_TRUE(is_zero(mod_reduce(prod, 8)));
}

TEST(ZLift, SearchBudget) {
  try {
    support_preserving_witness(rep_hpc(3, 3), 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget);
  }
}

TEST(ZLiftProperty, WitnessAndRefutationAgree) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    CssCode c = hypergraph_product(random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 3)),
                                   random_bits(rng, uniform(rng, 1, 3), uniform(rng, 1, 3)));
    auto w = support_preserving_witness(c, 3);
    ASSERT_TRUE(w.has_value());
    ZLiftedCode checked = validate_zlift(c, w->hx, w->hz);
    ASSERT_TRUE(checked.support_preserving);
    RefutationVerdict v = refute_support_preserving(c, 4);
    ASSERT_FALSE(v.refuted);
  }
}

TEST(ZLiftProperty, ProductLiftReducesToBase) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    BitMatrix h1 = random_bits(rng, uniform(rng, 1, 4), uniform(rng, 1, 5));
    BitMatrix h2 = random_bits(rng, uniform(rng, 1, 4), uniform(rng, 1, 5));
    ZLiftedCode zl = hpc_naive_zlift(h1, h2);
    ASSERT_EQ(zl.base, hypergraph_product(h1, h2));
    ASSERT_EQ(to_bits(zl.hx), zl.base.hx());
    ASSERT_EQ(to_bits(zl.hz), zl.base.hz());
    ASSERT_TRUE(zl.support_preserving);
  }
}

#include <gtest/gtest.h>

#include "frobsplit/goursat.hpp"
#include "test_util.hpp"

using namespace frobsplit;
using frobsplit::testing::code_of;

namespace {

GroupDescriptor SL2(std::uint64_t ell) { return make_descriptor(Family::kC, 1, ell, Level::kDerived); }

}  // namespace

TEST(Goursat, RandomSurjectiveGeneratorsGiveFullProduct) {
  const std::vector<GroupDescriptor> f = {SL2(5), SL2(7)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto gens = random_surjective_generators(f, 2, seed);
    const GoursatResult r = goursat_verify(f, gens);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.verdict, GoursatVerdict::kFull);
    EXPECT_EQ(r.closure_order, 120u * 336u);
    EXPECT_EQ(r.product_order, 40320);
    EXPECT_EQ(r.projection_orders, (std::vector<std::uint64_t>{120, 336}));
  }
}

TEST(Goursat, DiagonalIsOutOfHypothesis) {
  const auto gens = diagonal_generators(SL2(5), 2, 2, 1);
  const GoursatResult r = goursat_verify({SL2(5), SL2(5)}, gens);
  EXPECT_EQ(r.surjective, (std::vector<bool>{true, true}));
  EXPECT_FALSE(r.full);
  EXPECT_EQ(r.closure_order, 120u);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_EQ(r.verdict, GoursatVerdict::kOutOfHypothesis);
  EXPECT_EQ(goursat_verdict_name(r.verdict), "out-of-hypothesis");
}

TEST(Goursat, SingleFactorIsTriviallyFull) {
  const auto gens = random_surjective_generators({SL2(7)}, 2, 9);
  const GoursatResult r = goursat_verify({SL2(7)}, gens);
  EXPECT_EQ(r.verdict, GoursatVerdict::kFull);
  EXPECT_EQ(r.closure_order, 336u);
}

TEST(Goursat, ProperProjectionIsNotSurjective) {
  const GroupDescriptor d = SL2(5);
  const Matrix id = Matrix::identity(d.base(), 2);
  const auto gens = random_surjective_generators({SL2(7)}, 2, 3);
  std::vector<ElementTuple> tuples;
  for (const auto& t : gens) tuples.push_back({id, t.front()});
  const GoursatResult r = goursat_verify({SL2(5), SL2(7)}, tuples);
  EXPECT_EQ(r.verdict, GoursatVerdict::kNotSurjective);
  EXPECT_EQ(r.projection_orders[0], 1u);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Goursat, ExceptionalPrimeFlagged) {
  // SL_2(F_3) is solvable; its product with SL_2(F_5) is outside the hypotheses.
  const std::vector<GroupDescriptor> f = {SL2(3), SL2(5)};
  const GoursatResult r = goursat_verify(f, random_surjective_generators(f, 2, 4));
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_NE(r.verdict, GoursatVerdict::kCounterexample);
}

TEST(Goursat, Errors) {
  const GroupDescriptor d = SL2(5);
  const ExtField& F = d.base();
  EXPECT_EQ(code_of([&] { goursat_verify({d}, {{Matrix::identity(F, 2), Matrix::identity(F, 2)}}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { goursat_verify({d}, {{Matrix::scalar(F, 2, 2)}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { goursat_verify({make_descriptor(Family::kC, 2, 5, Level::kDerived)}, {}); }),
            ErrorCode::kBudgetExceeded);
  const auto gens = random_surjective_generators({SL2(5), SL2(7)}, 2, 0);
  EXPECT_EQ(code_of([&] { goursat_verify({SL2(5), SL2(7)}, gens, 1000); }), ErrorCode::kBudgetExceeded);
}

TEST(Goursat, GeneratorsAreDeterministicPerSeed) {
  const std::vector<GroupDescriptor> f = {SL2(5), SL2(7)};
  EXPECT_EQ(random_surjective_generators(f, 3, 11), random_surjective_generators(f, 3, 11));
}

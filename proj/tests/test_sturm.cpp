#include <gtest/gtest.h>

#include "frobsplit/sturm.hpp"

using namespace frobsplit;

namespace {

QuadraticSurd rat(long a) { return {mpq_class(a), mpq_class(0), mpz_class(0)}; }

}  // namespace

TEST(QuadraticSurd, SignOfSurds) {
  EXPECT_EQ(sign({mpq_class(0), mpq_class(2), mpz_class(3)}), 1);
  EXPECT_EQ(sign({mpq_class(-4), mpq_class(2), mpz_class(3)}), -1);  // 2sqrt3 < 4
  EXPECT_EQ(sign({mpq_class(-4), mpq_class(2), mpz_class(4)}), 0);
  EXPECT_EQ(sign({mpq_class(4), mpq_class(-2), mpz_class(5)}), -1);  // 2sqrt5 > 4
}

TEST(Sturm, CountsDistinctRoots) {
  // (x-1)(x-2)(x+3)
  const RatPoly f = IntPoly{6, -7, 0, 1}.to_rational();
  const SturmSequence s(f);
  EXPECT_EQ(s.real_roots(), 3);
  EXPECT_EQ(s.roots_in_closed(rat(0), rat(2)), 2);
  EXPECT_EQ(s.roots_in_closed(rat(-2), rat(0)), 0);
  EXPECT_EQ(s.roots_in_closed(rat(-3), rat(-3)), 1);
}

TEST(Sturm, NoRealRoots) {
  EXPECT_EQ(SturmSequence(IntPoly{1, 0, 1}.to_rational()).real_roots(), 0);
}

TEST(Sturm, SurdEndpoints) {
  // x^2 - 12 has roots +-2sqrt3, exactly the endpoints.
  const QuadraticSurd lo{mpq_class(0), mpq_class(-2), mpz_class(3)};
  const QuadraticSurd hi{mpq_class(0), mpq_class(2), mpz_class(3)};
  EXPECT_EQ(count_real_roots(IntPoly{-12, 0, 1}, lo, hi), 2);
  // x - 4 lies outside [-2sqrt3, 2sqrt3].
  EXPECT_EQ(count_real_roots(IntPoly{-4, 1}, lo, hi), 0);
}

TEST(Sturm, MultiplicityCounted) {
  const QuadraticSurd lo = rat(-10), hi = rat(10);
  EXPECT_EQ(count_real_roots(IntPoly{0, 0, 1}, lo, hi), 2);
  EXPECT_EQ(count_real_roots(IntPoly{1, 1}.pow(3) * IntPoly{-2, 1}, lo, hi), 4);
}

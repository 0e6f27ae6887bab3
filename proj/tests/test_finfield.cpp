#include <gtest/gtest.h>

#include <map>

#include "frobsplit/finfield.hpp"
#include "test_util.hpp"

using namespace frobsplit;

using frobsplit::testing::code_of;

TEST(MakeField, PrimeFieldHasModulusT) {
  const ExtField& f = make_field(3, 1);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{0, 1}));
}

TEST(MakeField, F9ModulusIsTSquaredPlusOne) {
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(MakeField, F16ModulusIsIrreducibleByBruteForce) {
  const ExtField& f = make_field(2, 4);
  const auto& m = f.modulus();
  ASSERT_EQ(m.size(), 5u);
  // No roots in F2 and not divisible by t^2+t+1, the only irreducible quadratic.
  auto eval2 = [&](std::uint64_t x) {
    std::uint64_t s = 0, p = 1;
    for (auto c : m) {
      s ^= c & p;
      p &= x;
    }
    return s;
  };
  EXPECT_EQ(eval2(0), 1u);
  EXPECT_EQ(eval2(1), 1u);
  // Reduce m mod t^2+t+1 by long division over F2.
  std::vector<std::uint64_t> r = m;
  for (int d = 4; d >= 2; --d) {
    if (r[d]) {
      r[d] ^= 1;
      r[d - 1] ^= 1;
      r[d - 2] ^= 1;
    }
  }
  EXPECT_TRUE(r[0] || r[1]);
}

TEST(MakeField, InterningReturnsSameObject) {
  EXPECT_EQ(&make_field(5, 3), &make_field(5, 3));
  EXPECT_EQ(make_field(7, 2).modulus(), make_field(7, 2).modulus());
}

TEST(MakeField, Errors) {
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_field(2, 63); }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([] { make_field(3, 0); }), ErrorCode::kInvalidArgument);
}

TEST(FieldArith, UTimesUIsMinusOneInF9) {
  const ExtField& f = make_field(3, 2);
  const FFElement u = f.generator();
  EXPECT_EQ((u * u).value(), 2u);
  EXPECT_EQ((u * u).to_string(), "[2,0]");
}

TEST(FieldArith, InverseLawAndLagrangeExhaustive) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {3, 4}, {5, 2}, {2, 6}, {7, 2}, {3, 3}}) {
    const ExtField& f = make_field(p, k);
    for (std::uint64_t v = 1; v < f.size(); ++v) {
      const FFElement x = f.element(v);
      ASSERT_TRUE((x * x.inverse()).is_one());
      ASSERT_TRUE(x.pow(f.size() - 1).is_one());
    }
  }
}

TEST(FieldArith, FieldLawsOnSamples) {
  const ExtField& f = make_field(5, 3);
  for (std::uint64_t a = 0; a < f.size(); a += 7) {
    for (std::uint64_t b = 0; b < f.size(); b += 11) {
      const std::uint64_t c = (a * 31 + b) % f.size();
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      if (b != 0) {
        EXPECT_EQ(f.mul(f.div(a, b), b), a);
      }
    }
  }
}

TEST(FieldArith, DivisionByZeroAndMismatch) {
  const ExtField& f = make_field(3, 2);
  const ExtField& g = make_field(5, 1);
  EXPECT_EQ(code_of([&] { field_arith(f.one(), f.zero(), ArithOp::kDiv); }), ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([&] { field_arith(f.one(), g.one(), ArithOp::kAdd); }), ErrorCode::kFieldMismatch);
}

TEST(FrobeniusOrbit, Examples) {
  const ExtField& f = make_field(3, 2);
  EXPECT_EQ(frobenius_orbit(f.element(2)).size(), 1u);
  const auto orb = frobenius_orbit(f.generator());
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[1].value(), f.mul(2, f.generator().value()));
  for (std::uint64_t p : {2, 3}) {
    const ExtField& e = make_field(p, 4);
    EXPECT_EQ(frobenius_orbit(e.element(e.primitive_element())).size(), 4u);
  }
}

TEST(MinimalPolynomial, Examples) {
  const ExtField& f = make_field(3, 2);
  EXPECT_EQ(minimal_polynomial(f.zero()), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(minimal_polynomial(f.generator()), (std::vector<std::uint64_t>{1, 0, 1}));
  const ExtField& f8 = make_field(2, 3);
  const auto mp = minimal_polynomial(f8.element(f8.primitive_element()));
  const bool cubic = mp == std::vector<std::uint64_t>{1, 1, 0, 1} || mp == std::vector<std::uint64_t>{1, 0, 1, 1};
  EXPECT_TRUE(cubic);
}

TEST(MinimalPolynomial, RootAndDegreeMatchOrbit) {
  const ExtField& f = make_field(3, 4);
  for (std::uint64_t v = 0; v < f.size(); ++v) {
    const FFElement x = f.element(v);
    const auto mp = minimal_polynomial(x);
    std::uint64_t s = 0, pw = 1;
    for (auto c : mp) {
      s = f.add(s, f.mul(c, pw));
      pw = f.mul(pw, v);
    }
    ASSERT_EQ(s, 0u);
    ASSERT_EQ(mp.size() - 1, frobenius_orbit(x).size());
    ASSERT_EQ(static_cast<int>(mp.size()) - 1, subfield_degree(x));
  }
}

TEST(SubfieldDegree, CountsPerDivisorExhaustive) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{3, 4}, {2, 6}, {5, 2}, {2, 4}}) {
    const ExtField& f = make_field(p, k);
    std::map<int, std::uint64_t> by_degree;
    for (std::uint64_t v = 0; v < f.size(); ++v) {
      const int d = subfield_degree(f.element(v));
      ASSERT_EQ(k % d, 0);
      ++by_degree[d];
    }
    for (int d = 1; d <= k; ++d) {
      if (k % d != 0) continue;
      std::uint64_t n = 0;
      for (auto [e, c] : by_degree) {
        if (d % e == 0) n += c;
      }
      std::uint64_t pd = 1;
      for (int i = 0; i < d; ++i) pd *= p;
      EXPECT_EQ(n, pd) << "p=" << p << " k=" << k << " d=" << d;
    }
  }
}

TEST(SubfieldDegree, EightUnitsOfF81InF9) {
  const ExtField& f = make_field(3, 4);
  int n = 0;
  for (std::uint64_t v = 1; v < f.size(); ++v) n += subfield_degree(f.element(v)) <= 2;
  EXPECT_EQ(n, 8);
}

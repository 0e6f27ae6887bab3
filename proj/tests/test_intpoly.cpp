#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "frobsplit/intpoly.hpp"
#include "frobsplit/modpoly.hpp"
#include "test_util.hpp"

using namespace frobsplit;
using frobsplit::testing::code_of;

namespace {

IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<mpz_class> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = coef(rng);
  c[degree] = 1;
  return IntPoly(c);
}

ModPoly mp(std::uint64_t p, std::vector<std::uint64_t> c) { return ModPoly(make_field(p, 1), std::move(c)); }

// Factorization by trial division with monic polynomials of increasing
// degree; the first divisor found at each step is irreducible.
std::vector<ModPoly> brute_factor(ModPoly f) {
  const ExtField& k = f.field();
  std::vector<ModPoly> out;
  f = f.monic();
  int d = 1;
  while (f.degree() > 0) {
    if (2 * d > f.degree()) {
      out.push_back(f);
      break;
    }
    bool found = false;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= k.size();
    for (std::uint64_t v = 0; v < count && !found; ++v) {
      std::vector<std::uint64_t> c(d + 1);
      std::uint64_t x = v;
      for (int i = 0; i < d; ++i) {
        c[i] = x % k.size();
        x /= k.size();
      }
      c[d] = 1;
      const ModPoly g(k, c);
      auto [q, r] = f.divmod(g);
      if (r.is_zero()) {
        out.push_back(g);
        f = q;
        found = true;
      }
    }
    if (!found) ++d;
  }
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) { return a.canonical_less(b); });
  return out;
}

std::vector<ModPoly> expand(const ModFactorization& fz) {
  std::vector<ModPoly> out;
  for (const auto& f : fz.factors) {
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.factor);
  }
  return out;
}

}  // namespace

TEST(IntPoly, ParseAndPrint) {
  const IntPoly f = IntPoly::parse("9,0,6,0,1");
  EXPECT_EQ(f, (IntPoly{9, 0, 6, 0, 1}));
  EXPECT_EQ(f.to_string(), "9,0,6,0,1");
  EXPECT_EQ(f.pretty(), "t^4+6t^2+9");
  EXPECT_EQ(IntPoly::parse("1,2,0,0").degree(), 1);
  EXPECT_EQ(code_of([] { IntPoly::parse("1,x"); }), ErrorCode::kParse);
}

TEST(ReduceMod, Examples) {
  const auto a = reduce_mod(IntPoly{9, 6, 1}, 3);
  EXPECT_EQ(a.poly, mp(3, {0, 0, 1}));
  EXPECT_FALSE(a.degree_dropped);
  EXPECT_EQ(reduce_mod(IntPoly{9, 0, 6, 0, 1}, 5).poly, mp(5, {4, 0, 1, 0, 1}));
  const auto c = reduce_mod(IntPoly{1, 0, 3}, 3);
  EXPECT_EQ(c.poly, mp(3, {1}));
  EXPECT_TRUE(c.degree_dropped);
  EXPECT_EQ(reduce_mod(IntPoly{-1, 1}, 7).poly, mp(7, {6, 1}));
}

TEST(ReduceMod, IsARingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = random_monic(rng, 1 + i % 5, 1000);
    const IntPoly g = random_monic(rng, 1 + i % 4, 1000);
    for (std::uint64_t ell : {2, 3, 13, 101}) {
      ASSERT_EQ(reduce_mod(f * g, ell).poly, reduce_mod(f, ell).poly * reduce_mod(g, ell).poly);
      ASSERT_EQ(reduce_mod(f + g, ell).poly, reduce_mod(f, ell).poly + reduce_mod(g, ell).poly);
    }
  }
}

TEST(FactorMod, Examples) {
  const auto a = factor_mod(mp(3, {1, 0, 1}));
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].factor, mp(3, {1, 0, 1}));
  EXPECT_EQ(a.factors[0].multiplicity, 1);

  const auto b = factor_mod(mp(5, {4, 0, 1}));
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].factor, mp(5, {1, 1}));
  EXPECT_EQ(b.factors[1].factor, mp(5, {4, 1}));

  // t^4+6t^2+9 over F_7 against the trial-division oracle.
  const ModPoly f = reduce_mod(IntPoly{9, 0, 6, 0, 1}, 7).poly;
  EXPECT_EQ(expand(factor_mod(f)), brute_factor(f));
}

TEST(FactorMod, MatchesTrialDivisionOnRandomInputs) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 60; ++i) {
      const int deg = 1 + i % 6;
      std::vector<std::uint64_t> c(deg + 1);
      for (auto& x : c) x = rng() % p;
      c[deg] = 1 + rng() % (p - 1);
      const ModPoly f = mp(p, c);
      const auto fz = factor_mod(f);
      ASSERT_EQ(fz.product(), f);
      ASSERT_EQ(expand(fz), brute_factor(f)) << f.to_string();
      for (const auto& x : fz.factors) ASSERT_TRUE(is_irreducible_mod(x.factor));
    }
  }
}

TEST(FactorMod, OverExtensionField) {
  const ExtField& f9 = make_field(3, 2);
  const ModPoly f(f9, {1, 0, 1});  // t^2 + 1 splits over F_9
  const auto fz = factor_mod(f);
  EXPECT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.product(), f);
  EXPECT_EQ(roots(f).size(), 2u);
}

TEST(FactorMod, SeedDoesNotChangeResult) {
  const ModPoly f = reduce_mod(IntPoly{1, 2, 3, 4, 5, 6, 7, 8, 1}, 11).poly;
  const auto a = factor_mod(f, 1);
  const auto b = factor_mod(f, 999);
  EXPECT_EQ(expand(a), expand(b));
}

TEST(IsIrreducibleMod, Examples) {
  EXPECT_TRUE(is_irreducible_mod(mp(3, {1, 0, 1})));
  EXPECT_FALSE(is_irreducible_mod(mp(5, {1, 0, 1})));
  EXPECT_TRUE(is_irreducible_mod(mp(2, {1, 1, 0, 0, 1})));
  EXPECT_FALSE(is_squarefree(mp(3, {1, 2, 1})));
}

TEST(FactorOverZ, Examples) {
  const auto a = factor_over_Z(IntPoly{9, 0, 6, 0, 1});
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].factor, (IntPoly{3, 0, 1}));
  EXPECT_EQ(a.factors[0].multiplicity, 2);

  const auto b = factor_over_Z(IntPoly{3, -1, 1});
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].factor, (IntPoly{3, -1, 1}));
}

TEST(FactorOverZ, QuarticAgainstBoundedSearch) {
  // Any monic factor of degree <= 2 of t^4-2t^2+9 has constant term dividing 9
  // and |linear coefficient| bounded by the root bound.
  const IntPoly f{9, 0, -2, 0, 1};
  int divisors = 0;
  for (long c : {-9, -3, -1, 1, 3, 9}) {
    if (exact_divide(f, IntPoly{c, 1})) ++divisors;
    for (long b = -20; b <= 20; ++b) {
      if (exact_divide(f, IntPoly{c, b, 1})) ++divisors;
    }
  }
  const auto fz = factor_over_Z(f);
  EXPECT_EQ(divisors, 0);
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].factor, f);
}

TEST(FactorOverZ, ProductsReconstructInput) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = random_monic(rng, 1 + i % 3, 20) * random_monic(rng, 1 + i % 4, 20);
    if (i % 5 == 0) f = f * random_monic(rng, 2, 5).pow(2);
    if (i % 7 == 0) f = f.scaled(-6);
    const auto fz = factor_over_Z(f);
    ASSERT_EQ(fz.product(), f) << f.to_string();
    for (const auto& x : fz.factors) ASSERT_GT(x.factor.degree(), 0);
  }
}

TEST(FactorOverZ, SwinnertonDyerStyleRecombination) {
  // (t^2-2)(t^2-3) has many modular factors but the product t^4-10t^2+1 is
  // irreducible over Z.
  const auto fz = factor_over_Z(IntPoly{1, 0, -10, 0, 1});
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].factor.degree(), 4);
}

TEST(FactorOverZ, IndependentOfAuxiliaryPrime) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const IntPoly f = random_monic(rng, 2, 30) * random_monic(rng, 3, 30);
    const auto base = factor_over_Z(f);
    for (std::uint64_t first : {5, 17, 101}) {
      FactorOptions opts;
      opts.first_prime = first;
      opts.candidate_primes = 2;
      opts.seed = first * 7;
      const auto other = factor_over_Z(f, opts);
      ASSERT_EQ(other.factors.size(), base.factors.size());
      for (std::size_t j = 0; j < base.factors.size(); ++j) {
        ASSERT_EQ(other.factors[j].factor, base.factors[j].factor);
        ASSERT_EQ(other.factors[j].multiplicity, base.factors[j].multiplicity);
      }
    }
  }
}

TEST(FactorOverZ, IrreducibleModEllImpliesSingleFactor) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 30; ++i) {
    const IntPoly f = random_monic(rng, 2 + i % 4, 50);
    for (std::uint64_t ell : {3, 5, 7, 11, 13}) {
      if (is_irreducible_mod(reduce_mod(f, ell).poly)) {
        const auto fz = factor_over_Z(f);
        ASSERT_EQ(fz.factors.size(), 1u);
        ASSERT_EQ(fz.factors[0].multiplicity, 1);
        ++checked;
        break;
      }
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(DthRoot, Examples) {
  EXPECT_EQ(dth_root(IntPoly{9, 0, 6, 0, 1}, 2), (IntPoly{3, 0, 1}));
  EXPECT_FALSE(dth_root(IntPoly{1, 0, 1}, 2).has_value());
  EXPECT_EQ(dth_root((IntPoly{3, -1, 1}).pow(3), 3), (IntPoly{3, -1, 1}));
  EXPECT_EQ(code_of([] { dth_root(IntPoly{1, 1}, 2); }), ErrorCode::kDegreeNotDivisible);
  EXPECT_EQ(code_of([] { dth_root(IntPoly{1, 0, 2}, 2); }), ErrorCode::kNotMonic);
}

TEST(DthRoot, RoundTripOnRandomCases) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const IntPoly g = random_monic(rng, 1 + i % 6, 50);
    const int d = 2 + i % 3;
    ASSERT_EQ(dth_root(g.pow(d), d), g) << g.to_string() << " d=" << d;
  }
}

TEST(DthRoot, NearMissHasNoRoot) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    const IntPoly g = random_monic(rng, 1 + i % 4, 20);
    ASSERT_FALSE(dth_root(g.pow(2) + IntPoly{1}, 2).has_value());
  }
}

TEST(MaxPowerStructure, Examples) {
  const auto a = max_power_structure(IntPoly{3, -1, 1});
  EXPECT_EQ(a.d, 1);
  EXPECT_EQ(a.root, (IntPoly{3, -1, 1}));
  const auto b = max_power_structure(IntPoly{9, 0, 6, 0, 1});
  EXPECT_EQ(b.d, 2);
  EXPECT_EQ(b.root, (IntPoly{3, 0, 1}));
  const auto c = max_power_structure((IntPoly{5, 0, 1}).pow(4));
  EXPECT_EQ(c.d, 4);
  EXPECT_EQ(c.root, (IntPoly{5, 0, 1}));
}

TEST(MaxPowerStructure, RootPowerReconstructs) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const IntPoly g = random_monic(rng, 1 + i % 3, 9);
    const int d = 1 + i % 4;
    const auto s = max_power_structure(g.pow(d));
    ASSERT_EQ(s.root.pow(s.d), g.pow(d));
    ASSERT_EQ(s.d % d, 0);
  }
}

TEST(SquarefreeDecomposition, Reconstructs) {
  const IntPoly f = (IntPoly{1, 1}) * (IntPoly{-2, 0, 1}).pow(2) * (IntPoly{3, 1}).pow(3);
  const auto parts = squarefree_decomposition(f);
  IntPoly prod{1};
  for (const auto& p : parts) prod = prod * p.factor.pow(p.multiplicity);
  EXPECT_EQ(prod, f);
}

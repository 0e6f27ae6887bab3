#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frobsplit/weil.hpp"
#include "test_util.hpp"

using namespace frobsplit;
using frobsplit::testing::code_of;

namespace {

// Symmetric a_i == q^(g-i) a_(2g-i) for 0 <= i <= g.
bool symmetric(const IntPoly& f, std::uint64_t q) {
  const int g = f.degree() / 2;
  for (int i = 0; i <= g; ++i) {
    mpz_class qp;
    mpz_ui_pow_ui(qp.get_mpz_t(), q, g - i);
    if (f.coeff(i) != qp * f.coeff(2 * g - i)) return false;
  }
  return true;
}

// Random t^2 - a t + q with |a| < 2 sqrt(q) and p not dividing a.
IntPoly random_ordinary_quadratic(std::mt19937_64& rng, std::uint64_t q) {
  const long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
  std::uniform_int_distribution<long> dist(-bound, bound);
  while (true) {
    const long a = dist(rng);
    if (a * a < 4 * static_cast<long>(q) && a % static_cast<long>(q) != 0) {
      return IntPoly{static_cast<long>(q), -a, 1};
    }
  }
}

RatPoly random_rat_monic(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> dist(-30, 30);
  std::vector<mpq_class> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = dist(rng);
  if (c[0] == 0) c[0] = 1;
  c[degree] = 1;
  return RatPoly(c);
}

}  // namespace

TEST(PrimePower, Examples) {
  EXPECT_EQ(prime_power(9)->p, 3u);
  EXPECT_EQ(prime_power(9)->a, 2);
  EXPECT_EQ(prime_power(7)->a, 1);
  EXPECT_FALSE(prime_power(12).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
}

TEST(WeilValidate, Examples) {
  EXPECT_TRUE(weil_validate(IntPoly{3, -1, 1}, 3).ok());
  const auto bad = weil_validate(IntPoly{3, -5, 1}, 3);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.error, ErrorCode::kRootBoundViolation);
  EXPECT_TRUE(weil_validate(IntPoly{9, 0, 6, 0, 1}, 3).ok());
}

TEST(WeilValidate, Rejections) {
  EXPECT_EQ(weil_validate(IntPoly{3, -1, 2}, 3).error, ErrorCode::kNotMonic);
  EXPECT_EQ(weil_validate(IntPoly{3, -1, 0, 1}, 3).error, ErrorCode::kOddDegree);
  const auto sym = weil_validate(IntPoly{9, 1, 6, 0, 1}, 3);
  EXPECT_EQ(sym.error, ErrorCode::kSymmetryViolation);
  EXPECT_EQ(sym.symmetry_index, 1);
  EXPECT_EQ(weil_validate(IntPoly{6, -1, 1}, 6).error, ErrorCode::kNotPrimePower);
  EXPECT_EQ(code_of([] { make_weil(IntPoly{3, -5, 1}, 3); }), ErrorCode::kRootBoundViolation);
}

TEST(WeilValidate, BoundaryRootsAccepted) {
  // t^2 - 2 sqrt(q) t + q needs q square: q = 4, a = 4 gives (t-2)^2.
  EXPECT_TRUE(weil_validate(IntPoly{4, -4, 1}, 4).ok());
  EXPECT_FALSE(weil_validate(IntPoly{4, -5, 1}, 4).ok());
  // t^2 - q has the real roots +-sqrt(q) but fails the symmetry a_0 = q a_2;
  // its square passes.
  EXPECT_EQ(weil_validate(IntPoly{-3, 0, 1}, 3).error, ErrorCode::kSymmetryViolation);
  EXPECT_TRUE(weil_validate(IntPoly{9, 0, -6, 0, 1}, 3).ok());
}

TEST(WeilValidate, AcceptedInputsAreSymmetric) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-12, 12);
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    const long a1 = dist(rng), a2 = dist(rng);
    const std::uint64_t q = (i % 2) ? 5 : 4;
    const long ql = static_cast<long>(q);
    const IntPoly f{ql * ql, ql * a1, a2, a1, 1};
    const auto v = weil_validate(f, q);
    if (v.ok()) {
      ++accepted;
      ASSERT_TRUE(symmetric(v.poly->f, q));
      ASSERT_EQ(symmetry_violation(v.poly->f, q), -1);
    }
  }
  EXPECT_GT(accepted, 20);
}

TEST(RealWeilTransform, Examples) {
  EXPECT_EQ(real_weil_transform(IntPoly{3, -1, 1}, 3), (IntPoly{-1, 1}));
  EXPECT_EQ(real_weil_transform(IntPoly{9, 0, 6, 0, 1}, 3), (IntPoly{0, 0, 1}));
  for (std::uint64_t q : {2, 3, 25}) {
    EXPECT_EQ(real_weil_transform(IntPoly{static_cast<long>(q), 0, 1}, q), (IntPoly{0, 1}));
  }
  EXPECT_EQ(code_of([] { real_weil_transform(IntPoly{9, 1, 6, 0, 1}, 3); }),
            ErrorCode::kSymmetryViolation);
}

TEST(RealWeilTransform, InvertsTheSubstitution) {
  // t^g h(t + q/t) == f, checked by expanding with x = t + q/t.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t q = 5;
    const IntPoly f = random_ordinary_quadratic(rng, q) * random_ordinary_quadratic(rng, q);
    const IntPoly h = real_weil_transform(f, q);
    ASSERT_EQ(h.degree(), 2);
    // t^2 h(t + 5/t) = t^2 (x^2 + h1 x + h0) = (t^2+5)^2 + h1 t (t^2+5) + h0 t^2
    const IntPoly s{5, 0, 1};
    const IntPoly back = s * s + (s * IntPoly{0, 1}).scaled(h.coeff(1)) + IntPoly{0, 0, 1}.scaled(h.coeff(0));
    ASSERT_EQ(back, f);
  }
}

TEST(OrdinaryTest, Examples) {
  EXPECT_TRUE(ordinary_test(make_weil(IntPoly{3, -1, 1}, 3)));
  EXPECT_FALSE(ordinary_test(make_weil(IntPoly{9, 0, 6, 0, 1}, 3)));
  EXPECT_FALSE(ordinary_test(make_weil(IntPoly{3, 0, 1}, 3)));
}

TEST(DualPolynomial, Examples) {
  EXPECT_EQ(dual_polynomial(IntPoly{3, -2, 1}, 3), (IntPoly{3, -2, 1}).to_rational());
  EXPECT_EQ(dual_polynomial(IntPoly{-1, 1}, 3), (IntPoly{-3, 1}).to_rational());
  EXPECT_EQ(code_of([] { dual_polynomial(IntPoly{0, 1}, 3); }), ErrorCode::kZeroConstantTerm);
}

TEST(DualPolynomial, SelfDualQuadraticsAreFixed) {
  for (long a = -4; a <= 4; ++a) {
    const IntPoly g{5, -a, 1};
    EXPECT_EQ(dual_polynomial(g, 5), g.to_rational());
  }
}

TEST(DualPolynomial, InvolutionOnRandomCubics) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 100; ++i) {
    const RatPoly g = random_rat_monic(rng, 3);
    ASSERT_EQ(dual_polynomial(dual_polynomial(g, 7), 7), g);
  }
}

TEST(DualPolynomial, ModEllAgreesWithReduction) {
  // t^2+t+3 is self-dual for q = 3; t-1 has dual t-3.
  const auto dm = dual_polynomial_mod(reduce_mod(IntPoly{3, 1, 1}, 5).poly, 3);
  ASSERT_TRUE(dm.has_value());
  EXPECT_EQ(*dm, reduce_mod(IntPoly{3, 1, 1}, 5).poly);
  EXPECT_EQ(dual_polynomial_mod(reduce_mod(IntPoly{-1, 1}, 5).poly, 3), reduce_mod(IntPoly{-3, 1}, 5).poly);
  EXPECT_FALSE(dual_polynomial_mod(reduce_mod(IntPoly{5, 1}, 5).poly, 3).has_value());
}

TEST(Analyze, SquareOverPrimeField) {
  const SplitReport rep = analyze(make_weil(IntPoly{9, 0, 6, 0, 1}, 3), {5, 7});
  EXPECT_EQ(rep.d, 2);
  EXPECT_EQ(rep.root, (IntPoly{3, 0, 1}));
  ASSERT_EQ(rep.factors.size(), 1u);
  EXPECT_EQ(rep.factors[0].factor, (IntPoly{3, 0, 1}));
  EXPECT_EQ(rep.factors[0].a, 1);
  EXPECT_EQ(rep.factors[0].e, 2);
  EXPECT_EQ(rep.factors[0].dY, 1);
  EXPECT_EQ(rep.factors[0].rule, "prime-field");
  EXPECT_EQ(rep.decomposition, "X ~ Y^2");
  EXPECT_EQ(rep.simple, false);
}

TEST(Analyze, OrdinaryIrreducibleIsSimple) {
  const SplitReport rep = analyze(make_weil(IntPoly{3, -1, 1}, 3), {5, 7});
  EXPECT_EQ(rep.d, 1);
  ASSERT_EQ(rep.factors.size(), 1u);
  EXPECT_EQ(rep.factors[0].dY, 1);
  EXPECT_EQ(rep.factors[0].e, 1);
  EXPECT_EQ(rep.simple, true);
  EXPECT_EQ(rep.decomposition, "X ~ Y");
  ASSERT_EQ(rep.certificates.size(), 2u);
  EXPECT_EQ(rep.certificates[0].certificate->kind, CertificateKind::kUnknown);
  EXPECT_EQ(rep.certificates[1].certificate->kind, CertificateKind::kCertified);
}

TEST(Analyze, DualPairSplit) {
  const IntPoly f = IntPoly{3, -1, 1} * IntPoly{3, 1, 1};
  const SplitReport rep = analyze(make_weil(f, 3), {});
  EXPECT_EQ(rep.d, 1);
  ASSERT_EQ(rep.factors.size(), 2u);
  EXPECT_EQ(rep.simple, false);
  // Both quadratics are self-dual as Weil factors (roots alpha, q/alpha).
  for (const auto& fc : rep.factors) EXPECT_TRUE(fc.self_dual);
  EXPECT_EQ(rep.decomposition, "X ~ Y1 x Y2");
}

TEST(Analyze, NonPrimeFieldLeavesConstraintsOpen) {
  // t^4 + 18 t^2 + 81 = (t^2 + 9)^2 over q = 9: supersingular, not prime field.
  const SplitReport rep = analyze(make_weil(IntPoly{81, 0, 18, 0, 1}, 9), {});
  EXPECT_EQ(rep.d, 2);
  ASSERT_EQ(rep.factors.size(), 1u);
  EXPECT_FALSE(rep.factors[0].e.has_value());
  EXPECT_EQ(rep.factors[0].candidates, (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
  EXPECT_FALSE(rep.simple.has_value());
}

TEST(Analyze, RecoversRootAndPowerOfRandomOrdinaryQuadratics) {
  std::mt19937_64 rng(50);
  const std::uint64_t qs[] = {3, 5, 7, 11, 13};
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t q = qs[i % 5];
    const IntPoly g = random_ordinary_quadratic(rng, q);
    for (int d : {2, 3}) {
      const SplitReport rep = analyze(make_weil(g.pow(d), q), {});
      ASSERT_EQ(rep.d, d);
      ASSERT_EQ(rep.root, g);
      ASSERT_EQ(rep.factors.size(), 1u);
      ASSERT_EQ(rep.factors[0].e, d);
    }
  }
}

TEST(SimplicityCertificate, Examples) {
  const WeilPoly w = make_weil(IntPoly{3, -1, 1}, 3);
  EXPECT_EQ(simplicity_certificate(w, 5).kind, CertificateKind::kUnknown);
  EXPECT_EQ(simplicity_certificate(w, 7).kind, CertificateKind::kCertified);
  for (std::uint64_t ell : {2, 5, 7, 11, 13}) {
    EXPECT_EQ(simplicity_certificate(make_weil(IntPoly{9, 0, 6, 0, 1}, 3), ell).kind,
              CertificateKind::kUnknown);
  }
  EXPECT_EQ(simplicity_certificate(make_weil(IntPoly{3, 0, 1}, 3), 5).kind, CertificateKind::kCertified);
  EXPECT_EQ(code_of([&] { simplicity_certificate(w, 3); }), ErrorCode::kBadAuxPrime);
}

TEST(SimplicityCertificate, PowerCertificateForSquares) {
  const WeilPoly w = make_weil(IntPoly{9, 0, 6, 0, 1}, 3);
  EXPECT_EQ(power_certificate(w, 5).kind, CertificateKind::kCertifiedSelfProduct);
  EXPECT_EQ(power_certificate(make_weil(IntPoly{3, -1, 1}, 3), 7).kind, CertificateKind::kUnknown);
}

TEST(SimplicityCertificate, NeverCertifiesPowersAndAgreesWithFactorOverZ) {
  std::mt19937_64 rng(12);
  const std::uint64_t qs[] = {2, 3, 5, 7};
  int issued = 0;
  for (int i = 0; i < 80; ++i) {
    const std::uint64_t q = qs[i % 4];
    IntPoly f = random_ordinary_quadratic(rng, q);
    if (i % 3 == 0) f = f * random_ordinary_quadratic(rng, q);
    if (i % 4 == 1) f = f.pow(2);
    const WeilPoly w = make_weil(f, q);
    const int d = max_power_structure(f).d;
    for (std::uint64_t ell : {3, 5, 7, 11, 13, 17}) {
      if (q % ell == 0) continue;
      for (auto ctx : {CertificateContext::kIrreducible, CertificateContext::kUnitaryEven}) {
        const Certificate c = simplicity_certificate(w, ell, ctx);
        if (c.kind != CertificateKind::kCertified) continue;
        ++issued;
        ASSERT_EQ(d, 1) << f.to_string();
        const auto fz = factor_over_Z(f);
        if (ctx == CertificateContext::kIrreducible) {
          ASSERT_EQ(fz.factors.size(), 1u) << f.to_string();
        }
      }
    }
  }
  EXPECT_GT(issued, 0);
}

TEST(SimplicityCertificate, UnitaryEvenDualPair) {
  // t^2-t+3 = (t+1)(t+3) mod 5, roots 4 and 2 with 3/4 = 2: a dual pair.
  const WeilPoly w = make_weil(IntPoly{3, -1, 1}, 3);
  const Certificate c = simplicity_certificate(w, 5, CertificateContext::kUnitaryEven);
  EXPECT_EQ(c.kind, CertificateKind::kCertified);
  EXPECT_NE(c.reason.find("dual pair"), std::string::npos);
  EXPECT_EQ(simplicity_certificate(w, 5, CertificateContext::kIrreducible).kind, CertificateKind::kUnknown);
  // A repeated root mod 7 (discriminant -7) is no pattern at all.
  const WeilPoly v = make_weil(IntPoly{2, 1, 1}, 2);
  EXPECT_EQ(simplicity_certificate(v, 7, CertificateContext::kUnitaryEven).kind, CertificateKind::kUnknown);
}

TEST(Analyze, RealWeilSquareOverPrimeField) {
  const SplitReport rep = analyze(make_weil(IntPoly{9, 0, -6, 0, 1}, 3), {});
  EXPECT_EQ(rep.d, 2);
  ASSERT_EQ(rep.factors.size(), 1u);
  EXPECT_EQ(rep.factors[0].rule, "real-prime-field");
  EXPECT_EQ(rep.factors[0].e, 1);
  EXPECT_EQ(rep.factors[0].dY, 2);
  EXPECT_EQ(rep.simple, true);
}

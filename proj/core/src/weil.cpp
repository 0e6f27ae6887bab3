#include "frobsplit/weil.hpp"

#include <sstream>

#include "frobsplit/finfield.hpp"
#include "frobsplit/sturm.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

std::optional<PrimePower> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto divs = prime_divisors(q);
  if (divs.size() != 1) return std::nullopt;
  PrimePower pp{divs.front(), 0};
  while (q > 1) {
    q /= pp.p;
    ++pp.a;
  }
  return pp;
}

int symmetry_violation(const IntPoly& f, u64 q) {
  const int g = f.degree() / 2;
  const mpz_class Q(static_cast<unsigned long>(q));
  for (int i = 0; i <= g; ++i) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), Q.get_mpz_t(), g - i);
    if (f.coeff(i) != scale * f.coeff(2 * g - i)) return i;
  }
  return -1;
}

IntPoly real_weil_transform(const IntPoly& f, u64 q) {
  if (f.degree() % 2 != 0) fail(ErrorCode::kOddDegree, "odd degree " + f.to_string());
  const int idx = symmetry_violation(f, q);
  if (idx >= 0) {
    fail(ErrorCode::kSymmetryViolation,
         "coefficient " + std::to_string(idx) + " breaks the functional equation");
  }
  const int g = f.degree() / 2;
  const IntPoly x = IntPoly::monomial(1);
  const IntPoly qconst = IntPoly::monomial(0, mpz_class(static_cast<unsigned long>(q)));
  // t^k + (q/t)^k as a polynomial in x = t + q/t.
  IntPoly prev{2}, cur = x;
  IntPoly h = IntPoly::monomial(0, f.coeff(g));
  for (int k = 1; k <= g; ++k) {
    h = h + cur.scaled(f.coeff(g + k));
    IntPoly next = x * cur - qconst * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return h;
}

WeilValidation weil_validate(const IntPoly& f, u64 q) {
  WeilValidation out;
  auto reject = [&](ErrorCode code, std::string msg) {
    out.error = code;
    out.diagnostic = std::move(msg);
    return out;
  };
  const auto pp = prime_power(q);
  if (!pp) return reject(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (f.is_zero() || !f.is_monic()) return reject(ErrorCode::kNotMonic, "polynomial is not monic");
  if (f.degree() % 2 != 0) {
    return reject(ErrorCode::kOddDegree, "degree " + std::to_string(f.degree()) + " is odd");
  }
  if (f.degree() == 0) return reject(ErrorCode::kInvalidArgument, "constant polynomial");
  const int idx = symmetry_violation(f, q);
  if (idx >= 0) {
    out.symmetry_index = idx;
    return reject(ErrorCode::kSymmetryViolation,
                  "a_" + std::to_string(idx) + " != q^" + std::to_string(f.degree() / 2 - idx) +
                      " * a_" + std::to_string(f.degree() - idx));
  }
  const IntPoly h = real_weil_transform(f, q);
  const mpz_class Q(static_cast<unsigned long>(q));
  const QuadraticSurd lo{0, -2, Q}, hi{0, 2, Q};
  const int inside = count_real_roots(h, lo, hi);
  if (inside != h.degree()) {
    return reject(ErrorCode::kRootBoundViolation,
                  "real Weil polynomial " + h.pretty('x') + " has " + std::to_string(inside) +
                      " of " + std::to_string(h.degree()) +
                      " roots in [-2sqrt(q), 2sqrt(q)]");
  }
  out.poly = WeilPoly{f, q, pp->p, pp->a};
  return out;
}

WeilPoly make_weil(const IntPoly& f, u64 q) {
  WeilValidation v = weil_validate(f, q);
  if (!v.ok()) fail(*v.error, v.diagnostic);
  return *v.poly;
}

bool ordinary_test(const WeilPoly& w) {
  const mpz_class mid = w.f.coeff(w.g());
  return mpz_fdiv_ui(mid.get_mpz_t(), w.p) != 0;
}

RatPoly dual_polynomial(const RatPoly& g, u64 q) {
  if (g.is_zero() || g.lead() != 1) fail(ErrorCode::kNotMonic, "dual needs a monic input");
  if (g.coeff(0) == 0) fail(ErrorCode::kZeroConstantTerm, "dual of a polynomial with root 0");
  const int n = g.degree();
  std::vector<mpq_class> out(n + 1);
  mpq_class qi = 1;
  const mpq_class c0 = g.coeff(0);
  for (int i = 0; i <= n; ++i) {
    out[n - i] = g.coeff(i) * qi / c0;
    qi *= mpq_class(static_cast<unsigned long>(q));
  }
  return RatPoly(std::move(out));
}

RatPoly dual_polynomial(const IntPoly& g, u64 q) {
  return dual_polynomial(g.to_rational(), q);
}

std::optional<ModPoly> dual_polynomial_mod(const ModPoly& g, u64 q) {
  const ExtField& F = g.field();
  if (g.coeff(0) == 0) return std::nullopt;
  const int n = g.degree();
  const u64 qq = F.from_int(static_cast<std::int64_t>(q % F.p()));
  std::vector<u64> out(n + 1);
  u64 qi = 1;
  for (int i = 0; i <= n; ++i) {
    out[n - i] = F.mul(g.coeff(i), qi);
    qi = F.mul(qi, qq);
  }
  return ModPoly(F, std::move(out)).monic();
}

std::string_view certificate_context_name(CertificateContext c) {
  return c == CertificateContext::kUnitaryEven ? "unitary-even" : "irreducible";
}

std::string_view certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kCertified: return "Certified";
    case CertificateKind::kCertifiedSelfProduct: return "CertifiedSelfProduct";
    case CertificateKind::kUnknown: return "Unknown";
  }
  return "?";
}

namespace {

void check_aux(const WeilPoly& w, u64 ell) {
  if (!is_prime(ell)) fail(ErrorCode::kCompositeModulus, std::to_string(ell) + " is not prime");
  if (w.p == ell) {
    fail(ErrorCode::kBadAuxPrime, std::to_string(ell) + " divides q = " + std::to_string(w.q));
  }
}

std::string describe(const ModFactorization& fac) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, m] : fac.factors) {
    if (!first) os << " | ";
    os << g.to_string();
    if (m > 1) os << " ^" << m;
    first = false;
  }
  return os.str();
}

// Shared test for f and for the d-th root g.  Sound because every factor of
// a Weil polynomial over Q is self-dual: if f were reducible, each rational
// factor would reduce to a self-dual product, which g1 alone is not.
bool irreducible_by_reduction(const IntPoly& f, u64 q, u64 ell, CertificateContext ctx,
                              std::string& reason, std::string& reduction) {
  const ModPoly fm = reduce_mod(f, ell).poly;
  const ModFactorization fac = factor_mod(fm);
  reduction = describe(fac);
  if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) {
    reason = "irreducible mod " + std::to_string(ell);
    return true;
  }
  if (ctx == CertificateContext::kUnitaryEven && fac.factors.size() == 2 &&
      fac.factors[0].multiplicity == 1 &&
      fac.factors[1].multiplicity == 1 &&
      fac.factors[0].factor.degree() == fac.factors[1].factor.degree()) {
    const auto dual = dual_polynomial_mod(fac.factors[0].factor, q);
    if (dual && *dual == fac.factors[1].factor) {
      reason = "dual pair of irreducibles mod " + std::to_string(ell);
      return true;
    }
  }
  reason = "no certificate pattern mod " + std::to_string(ell);
  return false;
}

}  // namespace

Certificate simplicity_certificate(const WeilPoly& w, u64 ell, CertificateContext ctx) {
  check_aux(w, ell);
  Certificate c;
  c.ell = ell;
  if (irreducible_by_reduction(w.f, w.q, ell, ctx, c.reason, c.reduction)) {
    c.kind = CertificateKind::kCertified;
  }
  return c;
}

Certificate power_certificate(const WeilPoly& w, u64 ell, CertificateContext ctx) {
  check_aux(w, ell);
  Certificate c;
  c.ell = ell;
  const PowerStructure ps = max_power_structure(w.f);
  if (ps.d < 2) {
    c.reason = "no power structure";
    c.reduction = describe(factor_mod(reduce_mod(w.f, ell).poly));
    return c;
  }
  if (irreducible_by_reduction(ps.root, w.q, ell, ctx, c.reason, c.reduction)) {
    c.kind = CertificateKind::kCertifiedSelfProduct;
    c.reason = "root of power " + std::to_string(ps.d) + ": " + c.reason;
  }
  return c;
}

namespace {

std::string power_label(const std::string& name, std::optional<int> e, int idx) {
  if (!e) return name + "^e" + std::to_string(idx);
  if (*e == 1) return name;
  return name + "^" + std::to_string(*e);
}

}  // namespace

SplitReport analyze(const WeilPoly& w, const std::vector<u64>& aux_primes,
                    CertificateContext ctx) {
  SplitReport rep;
  rep.context = ctx;
  rep.poly = w;
  rep.prime_field = w.a == 1;
  rep.ordinary = ordinary_test(w);
  const PowerStructure ps = max_power_structure(w.f);
  rep.d = ps.d;
  rep.root = ps.root;

  const IntFactorization fac = factor_over_Z(ps.root);
  const IntPoly real_factor = IntPoly::monomial(2) - IntPoly::monomial(0, mpz_class(static_cast<unsigned long>(w.q)));
  for (const auto& [g, a] : fac.factors) {
    FactorConstraint fc;
    fc.factor = g;
    fc.a = a;
    const int n = a * rep.d;
    if (rep.prime_field && g == real_factor) {
      // Over F_p the real Weil number sqrt(p) has quaternion endomorphisms.
      if (n % 2 == 0) {
        fc.dY = 2;
        fc.e = n / 2;
        fc.rule = "real-prime-field";
      }
    } else if (rep.prime_field) {
      fc.dY = 1;
      fc.e = n;
      fc.rule = "prime-field";
    } else if (rep.ordinary) {
      fc.dY = 1;
      fc.e = n;
      fc.rule = "ordinary";
    }
    if (!fc.e) {
      for (int e = 1; e <= n; ++e) {
        if (n % e == 0) fc.candidates.emplace_back(e, n / e);
      }
      if (fc.candidates.size() == 1) {
        fc.e = 1;
        fc.dY = 1;
        fc.rule = "forced";
        fc.candidates.clear();
      }
    }
    rep.factors.push_back(std::move(fc));
  }

  // Duality between factors.
  for (std::size_t j = 0; j < rep.factors.size(); ++j) {
    const RatPoly dual = dual_polynomial(rep.factors[j].factor, w.q);
    if (dual == rep.factors[j].factor.to_rational()) {
      rep.factors[j].self_dual = true;
      continue;
    }
    for (std::size_t k = 0; k < rep.factors.size(); ++k) {
      if (k != j && dual == rep.factors[k].factor.to_rational()) {
        rep.factors[j].dual_index = static_cast<int>(k);
      }
    }
  }

  const bool single = rep.factors.size() == 1;
  std::ostringstream dec;
  dec << "X ~ ";
  for (std::size_t j = 0; j < rep.factors.size(); ++j) {
    FactorConstraint& fc = rep.factors[j];
    const std::string name = single ? "Y" : "Y" + std::to_string(j + 1);
    const std::string field = "Q[t]/(" + fc.factor.pretty() + ")";
    const int n = fc.a * rep.d;
    if (j) dec << " x ";
    dec << power_label(name, fc.e, static_cast<int>(j + 1));
    if (fc.dY && *fc.dY == 1) {
      fc.label = *fc.e == 1 ? "commutative, CM by " + field
                            : "M_" + std::to_string(*fc.e) + "(" + field + ")";
    } else if (fc.dY) {
      fc.label = "quaternion algebra over " + field;
      if (*fc.e > 1) fc.label = "M_" + std::to_string(*fc.e) + "(" + fc.label + ")";
    } else {
      fc.label = "center " + field + ", e*d(" + name + ") = " + std::to_string(n);
    }
  }
  rep.decomposition = dec.str();

  if (!single) {
    rep.simple = false;
  } else if (rep.factors[0].a * rep.d == 1) {
    rep.simple = true;
  } else if (rep.factors[0].e) {
    rep.simple = *rep.factors[0].e == 1;
  }

  for (u64 ell : aux_primes) {
    AuxCertificate ac;
    ac.ell = ell;
    try {
      ac.certificate = simplicity_certificate(w, ell, ctx);
      if (rep.d >= 2) ac.power = power_certificate(w, ell, ctx);
    } catch (const Error& e) {
      ac.skipped = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    rep.certificates.push_back(std::move(ac));
  }
  return rep;
}

}  // namespace frobsplit

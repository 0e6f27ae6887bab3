#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/errors.hpp"
#include "frobsplit/intpoly.hpp"
#include "frobsplit/modpoly.hpp"

namespace frobsplit {

struct PrimePower {
  std::uint64_t p;
  int a;
};

// q = p^a with a >= 1, or nullopt.
std::optional<PrimePower> prime_power(std::uint64_t q);

// Monic, degree 2g, a_i = q^(g-i) a_(2g-i), roots on |z| = sqrt(q).
// Build through weil_validate or make_weil.
struct WeilPoly {
  IntPoly f;
  std::uint64_t q;
  std::uint64_t p;
  int a;

  int g() const { return f.degree() / 2; }
};

struct WeilValidation {
  std::optional<WeilPoly> poly;
  std::optional<ErrorCode> error;
  std::string diagnostic;
  int symmetry_index = -1;  // first failing i when error is kSymmetryViolation

  bool ok() const { return poly.has_value(); }
};

// Never throws for a malformed f; the rejection is in the result.
WeilValidation weil_validate(const IntPoly& f, std::uint64_t q);
// Throws the rejection as Error.
WeilPoly make_weil(const IntPoly& f, std::uint64_t q);

// First i in [0, g] with a_i != q^(g-i) a_(2g-i), or -1.
int symmetry_violation(const IntPoly& f, std::uint64_t q);

// h of degree g with f(t) = t^g h(t + q/t).  Throws kSymmetryViolation,
// kOddDegree.
IntPoly real_weil_transform(const IntPoly& f, std::uint64_t q);
inline IntPoly real_weil_transform(const WeilPoly& w) {
  return real_weil_transform(w.f, w.q);
}

// Middle coefficient prime to p.
bool ordinary_test(const WeilPoly& w);

// Monic polynomial with roots q/alpha.  Not integral in general, hence the
// rational result.  Throws kNotMonic, kZeroConstantTerm.
RatPoly dual_polynomial(const RatPoly& g, std::uint64_t q);
RatPoly dual_polynomial(const IntPoly& g, std::uint64_t q);
// Same over F_ell; nullopt when g(0) vanishes there.
std::optional<ModPoly> dual_polynomial_mod(const ModPoly& g, std::uint64_t q);

enum class CertificateKind { kCertified, kCertifiedSelfProduct, kUnknown };
std::string_view certificate_kind_name(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::kUnknown;
  std::uint64_t ell = 0;
  std::string reason;
  // Monic factors of the reduced polynomial, e.g. "3,6,1 | 5,1".
  std::string reduction;
};

// Which reduction patterns count.  kIrreducible accepts only an irreducible
// reduction.  kUnitaryEven also accepts g1 * g2 with g1 != g2 irreducible of
// equal degree and g2 the dual of g1, the shape of a regular element of the
// anisotropic torus in the even-rank unitary case.
enum class CertificateContext { kIrreducible, kUnitaryEven };
std::string_view certificate_context_name(CertificateContext c);

// Certified or Unknown, never a false Certified.
// Throws kBadAuxPrime when ell divides q, kCompositeModulus for composite ell.
Certificate simplicity_certificate(
    const WeilPoly& w, std::uint64_t ell,
    CertificateContext ctx = CertificateContext::kIrreducible);

// f = g^d with d >= 2 and g passing the same test mod ell: the reduction is
// isogenous to a power of one simple variety.
Certificate power_certificate(
    const WeilPoly& w, std::uint64_t ell,
    CertificateContext ctx = CertificateContext::kIrreducible);

struct FactorConstraint {
  IntPoly factor;
  int a = 1;  // exponent in the d-th root
  // a * d == e * dY.  Set when a shortcut pins dY.
  std::optional<int> e;
  std::optional<int> dY;
  // "prime-field", "ordinary", "real-prime-field", "forced" (a*d == 1) or "".
  std::string rule;
  // Admissible (e, dY) pairs while unresolved.
  std::vector<std::pair<int, int>> candidates;
  bool self_dual = false;
  int dual_index = -1;  // index of the dual factor when not self-dual
  std::string label;
};

struct AuxCertificate {
  std::uint64_t ell;
  std::optional<Certificate> certificate;
  std::optional<Certificate> power;
  std::string skipped;  // non-empty when ell was not usable
};

struct SplitReport {
  WeilPoly poly;
  int d = 1;
  IntPoly root;
  bool prime_field = false;
  bool ordinary = false;
  std::vector<FactorConstraint> factors;
  std::vector<AuxCertificate> certificates;
  std::optional<bool> simple;
  CertificateContext context = CertificateContext::kIrreducible;
  std::string decomposition;  // e.g. "X ~ Y^2"
};

SplitReport analyze(const WeilPoly& w, const std::vector<std::uint64_t>& aux_primes,
                    CertificateContext ctx = CertificateContext::kIrreducible);

}  // namespace frobsplit

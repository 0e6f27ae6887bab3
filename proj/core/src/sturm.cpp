#include "frobsplit/sturm.hpp"

#include "frobsplit/errors.hpp"

namespace frobsplit {

namespace {

int sgn(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign(const QuadraticSurd& x) {
  const int sa = sgn(x.a);
  const int sb = x.d == 0 ? 0 : sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const mpq_class lhs = x.a * x.a;
  const mpq_class rhs = x.b * x.b * mpq_class(x.d);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

QuadraticSurd eval(const RatPoly& f, const QuadraticSurd& x) {
  QuadraticSurd r{0, 0, x.d};
  const mpq_class d(x.d);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    mpq_class na = r.a * x.a + r.b * x.b * d + *it;
    mpq_class nb = r.a * x.b + r.b * x.a;
    r.a = std::move(na);
    r.b = std::move(nb);
  }
  return r;
}

SturmSequence::SturmSequence(const RatPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::kInvalidArgument, "Sturm chain of a constant");
  chain_.push_back(f);
  chain_.push_back(f.derivative());
  while (chain_.back().degree() > 0) {
    RatPoly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::sign_changes_at(const QuadraticSurd& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign(eval(p, x)));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_infinity(bool positive) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) {
    int lead = sgn(p.lead());
    if (!positive && p.degree() % 2 == 1) lead = -lead;
    s.push_back(lead);
  }
  return count_changes(s);
}

int SturmSequence::roots_in_closed(const QuadraticSurd& lo,
                                   const QuadraticSurd& hi) const {
  // V(lo) - V(hi) counts roots in (lo, hi].
  int n = sign_changes_at(lo) - sign_changes_at(hi);
  if (sign(eval(chain_.front(), lo)) == 0) ++n;
  return n;
}

int SturmSequence::real_roots() const {
  return sign_changes_at_infinity(false) - sign_changes_at_infinity(true);
}

int count_real_roots(const IntPoly& f, const QuadraticSurd& lo,
                     const QuadraticSurd& hi) {
  int total = 0;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    SturmSequence s(part.to_rational());
    total += mult * s.roots_in_closed(lo, hi);
  }
  return total;
}

}  // namespace frobsplit

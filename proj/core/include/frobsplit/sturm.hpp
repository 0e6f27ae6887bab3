#pragma once

#include <gmpxx.h>

#include <vector>

#include "frobsplit/intpoly.hpp"

namespace frobsplit {

// a + b*sqrt(d), d >= 0 a fixed integer.
struct QuadraticSurd {
  mpq_class a;
  mpq_class b;
  mpz_class d;
};

int sign(const QuadraticSurd& x);
QuadraticSurd eval(const RatPoly& f, const QuadraticSurd& x);

class SturmSequence {
 public:
  // f must be squarefree and nonconstant.
  explicit SturmSequence(const RatPoly& f);

  int sign_changes_at(const QuadraticSurd& x) const;
  // +infinity when positive, -infinity otherwise.
  int sign_changes_at_infinity(bool positive) const;

  // Distinct real roots in [lo, hi], lo <= hi.
  int roots_in_closed(const QuadraticSurd& lo, const QuadraticSurd& hi) const;
  int real_roots() const;

  const std::vector<RatPoly>& chain() const noexcept { return chain_; }

 private:
  std::vector<RatPoly> chain_;
};

// Real roots of f (counted with multiplicity) in [lo, hi].
int count_real_roots(const IntPoly& f, const QuadraticSurd& lo,
                     const QuadraticSurd& hi);

}  // namespace frobsplit

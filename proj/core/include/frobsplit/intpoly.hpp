#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobsplit/modpoly.hpp"

namespace frobsplit {

class RatPoly;

// Dense polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  // "9,0,6,0,1" -> t^4 + 6t^2 + 9.  Throws kParse.
  static IntPoly parse(std::string_view text);
  static IntPoly monomial(int degree, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  mpz_class coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpz_class(0);
  }
  const mpz_class& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly pow(int e) const;
  IntPoly scaled(const mpz_class& s) const;
  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;
  // gcd of the coefficients, carrying the sign of the leading coefficient.
  mpz_class content() const;
  IntPoly primitive_part() const;
  RatPoly to_rational() const;

  // Degree first, then coefficients from the constant term up.
  bool canonical_less(const IntPoly& o) const;

  // Comma-separated ascending coefficients; "0" for the zero polynomial.
  std::string to_string() const;
  // Human-readable, e.g. "t^4+6t^2+9".
  std::string pretty(char var = 't') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Dense polynomial over Q.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  mpq_class coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0);
  }
  const mpq_class& lead() const { return c_.back(); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  RatPoly operator/(const RatPoly& d) const { return divmod(d).first; }
  RatPoly operator%(const RatPoly& d) const { return divmod(d).second; }

  RatPoly pow(int e) const;
  RatPoly monic() const;
  RatPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  bool is_integral() const;
  // Requires is_integral().
  IntPoly to_integer() const;
  // Clears denominators and content; positive leading coefficient.
  IntPoly primitive_integer() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic

// Exact quotient f / g over Z, or nullopt if g does not divide f.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g);

// Yun decomposition over Q: f = c * prod s_i^i, each s_i primitive and
// squarefree with positive leading coefficient.
struct SquarefreePart {
  IntPoly factor;
  int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f);

struct ReducedPoly {
  ModPoly poly;
  bool degree_dropped;
};

// Coefficientwise reduction into F_ell[t].
ReducedPoly reduce_mod(const IntPoly& f, std::uint64_t ell);

struct IntFactor {
  IntPoly factor;  // irreducible over Q, primitive, positive leading coeff
  int multiplicity;
};

struct IntFactorization {
  mpz_class content;  // signed; product() == input
  std::vector<IntFactor> factors;  // canonical order

  IntPoly product() const;
};

struct FactorOptions {
  // Smallest auxiliary prime tried for the modular image.
  std::uint64_t first_prime = 3;
  // Number of admissible primes compared before picking the one with the
  // fewest modular factors.
  int candidate_primes = 5;
  std::uint64_t seed = kDefaultFactorSeed;
};

// Squarefree decomposition, modular factorization, Hensel lifting and
// subset recombination under a Mignotte bound.
IntFactorization factor_over_Z(const IntPoly& f, const FactorOptions& opts = {});

// Monic g with g^d == f, found top-down over Q and then verified by expansion.
// Throws kNotMonic, kDegreeNotDivisible.
std::optional<IntPoly> dth_root(const IntPoly& f, int d);

struct PowerStructure {
  IntPoly root;
  int d;
};

// Largest d with f = g^d for a monic integer g.  Throws kNotMonic.
PowerStructure max_power_structure(const IntPoly& f);

}  // namespace frobsplit

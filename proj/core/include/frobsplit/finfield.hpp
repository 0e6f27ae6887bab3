#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobsplit {

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Returns p^k, throwing kOverflow when the result would reach 2^63.
std::uint64_t checked_power(std::uint64_t p, int k);

class FFElement;

// F_p viewed on its own.  Most code uses ExtField with k == 1 instead; this
// type exists for call sites that only need the modulus check.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t p() const noexcept { return p_; }

 private:
  std::uint64_t p_;
};

// F_{p^k} = F_p[t]/(modulus), with modulus the lexicographically least monic
// irreducible of degree k (coefficients compared from the constant term up).
//
// Elements are encoded as integers in [0, p^k): coefficient c_i of t^i is the
// i-th base-p digit.  So 0 and 1 encode the field's zero and one, and the
// prime subfield is exactly the range [0, p).
//
// Fields are interned by make_field() and never destroyed, so FFElement can
// hold a plain pointer.  All members are const and safe to share.
class ExtField {
 public:
  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

  std::uint64_t p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return size_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  // Monic, ascending, length k + 1.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  // Raw arithmetic on encoded values.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws kDivisionByZero
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t frobenius(std::uint64_t a) const { return pow(a, p_); }
  // Image of an integer under Z -> F_p -> F_{p^k}.
  std::uint64_t from_int(std::int64_t n) const;

  std::vector<std::uint64_t> coeffs(std::uint64_t v) const;
  std::uint64_t encode(std::span<const std::uint64_t> coeffs) const;

  FFElement element(std::uint64_t v) const;
  FFElement zero() const;
  FFElement one() const;
  // The class of t, a root of the modulus.
  FFElement generator() const;
  // Least encoded value generating the multiplicative group.
  std::uint64_t primitive_element() const;

 private:
  friend const ExtField& make_field(std::uint64_t p, int k);
  ExtField(std::uint64_t p, int k, std::vector<std::uint64_t> modulus);

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  std::uint64_t p_;
  int k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t primitive_ = 0;

  // Present only for 1 < k and size <= kTableLimit.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint16_t> add_table_;  // size <= kAddTableLimit
};

inline constexpr std::uint64_t kTableLimit = 1u << 20;
inline constexpr std::uint64_t kAddTableLimit = 1024;

// Returns the interned field F_{p^k}.  Throws kCompositeModulus if p is not
// prime, kOverflow if p^k >= 2^63, kInvalidArgument if k < 1.
const ExtField& make_field(std::uint64_t p, int k);

class FFElement {
 public:
  FFElement(const ExtField& field, std::uint64_t value) noexcept
      : field_(&field), value_(value) {}

  const ExtField& field() const noexcept { return *field_; }
  std::uint64_t value() const noexcept { return value_; }
  std::vector<std::uint64_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  FFElement operator+(const FFElement& o) const;
  FFElement operator-(const FFElement& o) const;
  FFElement operator*(const FFElement& o) const;
  FFElement operator/(const FFElement& o) const;
  FFElement operator-() const;
  FFElement pow(std::uint64_t e) const;
  FFElement inverse() const;

  bool operator==(const FFElement& o) const noexcept {
    return field_ == o.field_ && value_ == o.value_;
  }

  // Ascending coefficient vector, e.g. "[2,0,1]" for t^2 + 2 in degree 3.
  std::string to_string() const;

 private:
  void check_same(const FFElement& o) const;

  const ExtField* field_;
  std::uint64_t value_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv, kPow };

// `y` supplies the exponent for kPow as its encoded value.
FFElement field_arith(const FFElement& x, const FFElement& y, ArithOp op);

// [x, x^p, x^{p^2}, ...] up to the first repetition.
std::vector<FFElement> frobenius_orbit(const FFElement& x);

// Monic ascending coefficients over F_p.
std::vector<std::uint64_t> minimal_polynomial(const FFElement& x);

// Smallest d dividing k with x in F_{p^d}.
int subfield_degree(const FFElement& x);

}  // namespace frobsplit

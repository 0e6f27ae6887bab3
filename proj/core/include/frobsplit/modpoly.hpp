#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobsplit/finfield.hpp"

namespace frobsplit {

// Polynomial over an ExtField, ascending encoded coefficients, no trailing
// zeros.  The zero polynomial has an empty coefficient vector.
class ModPoly {
 public:
  explicit ModPoly(const ExtField& field) : field_(&field) {}
  ModPoly(const ExtField& field, std::vector<std::uint64_t> coeffs);

  static ModPoly constant(const ExtField& field, std::uint64_t c);
  static ModPoly monomial(const ExtField& field, int degree,
                          std::uint64_t c = 1);
  // x - root
  static ModPoly linear(const ExtField& field, std::uint64_t root);

  const ExtField& field() const noexcept { return *field_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ModPoly monic() const;
  ModPoly derivative() const;
  ModPoly scaled(std::uint64_t s) const;
  std::uint64_t eval(std::uint64_t x) const;
  // Applies v -> v^(p^j) to every coefficient.
  ModPoly frobenius_coeffs(int j = 1) const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly operator%(const ModPoly& o) const { return divmod(o).second; }
  ModPoly operator/(const ModPoly& o) const { return divmod(o).first; }
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& d) const;

  bool operator==(const ModPoly& o) const {
    return field_ == o.field_ && c_ == o.c_;
  }

  // Lexicographic from the constant term up, after comparing degree.
  bool canonical_less(const ModPoly& o) const;

  std::string to_string() const;

 private:
  void trim();
  void check_same(const ModPoly& o) const;

  const ExtField* field_;
  std::vector<std::uint64_t> c_;
};

// Monic gcd; gcd(0, 0) = 0.
ModPoly gcd(const ModPoly& a, const ModPoly& b);

// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  ModPoly g, s, t;
};
ExtendedGcd extended_gcd(const ModPoly& a, const ModPoly& b);

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& mod);

struct ModFactor {
  ModPoly factor;  // monic irreducible
  int multiplicity;
};

struct ModFactorization {
  const ExtField* field = nullptr;
  std::uint64_t unit = 0;  // leading coefficient of the input
  std::vector<ModFactor> factors;  // ordered by canonical_less

  ModPoly product() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'f00dULL;

// Squarefree decomposition, distinct-degree and Cantor-Zassenhaus
// equal-degree splitting.  The random splitting is driven by `seed`; the
// result is sorted, so it does not depend on the seed.
ModFactorization factor_mod(const ModPoly& f,
                            std::uint64_t seed = kDefaultFactorSeed);

bool is_irreducible_mod(const ModPoly& f);
bool is_squarefree(const ModPoly& f);

// Roots in the coefficient field, ascending encoded value, no repeats.
std::vector<std::uint64_t> roots(const ModPoly& f,
                                 std::uint64_t seed = kDefaultFactorSeed);

}  // namespace frobsplit

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "frobsplit/groups.hpp"

namespace frobsplit {

// Maximally anisotropic maximal torus of the group at desc.level.
//
// TypeC, and TypeA with r odd: E = F_{ell^{2r}} acting on itself by
// multiplication, restricted to the elements whose norm to F_{ell^r} lies in
// F_ell.  TypeA with r even: L = F_{ell^r}, V = L + L with the two summands
// isotropic and dual, (x, lambda) acting as x on the first summand and as
// frob^{-1}(lambda / x) on the second.
struct AnisotropicTorus {
  GroupDescriptor desc;
  // T is the direct product of the cyclic groups these generate.
  std::vector<GroupElement> generators;
  std::vector<std::uint64_t> generator_orders;
  std::uint64_t order = 0;
  // Degree over F_ell of the field carrying the eigenvalues.
  int extension_degree = 0;
  std::string construction;
  // Columns: the standard basis in regular-representation coordinates.
  Matrix change_of_basis;

  void for_each(const std::function<void(const GroupElement&)>& f,
                std::uint64_t budget = kTorusBudget) const;
  std::vector<GroupElement> elements(std::uint64_t budget = kTorusBudget) const;
};

// Throws kBudgetExceeded if the eigenvalue field has more than 2^40 elements.
AnisotropicTorus build_anisotropic_torus(const GroupDescriptor& desc);

enum class ElementClass { kJ, kI };
std::string_view element_class_name(ElementClass c);

// Characteristic-polynomial test on y = x^m.
// TypeC, TypeA r odd: the F_ell-characteristic polynomial is irreducible.
// TypeA r even: over F_{ell^2} it is g1 * g2, distinct irreducibles of degree
// r/2, with the roots of g2 equal to lambda / beta^ell for the roots beta of
// g1 (lambda the similitude of y).
ElementClass classify_element(const GroupElement& x, std::uint64_t m);

// Centralizer test, from the definition: J iff the centralizer of x^m in the
// group is abelian of the order of the anisotropic torus.
class ClassificationOracle {
 public:
  // Throws kBudgetExceeded when the group order exceeds `budget`.
  explicit ClassificationOracle(const GroupDescriptor& desc,
                                std::uint64_t budget = kGroupBudget);

  ElementClass classify(const GroupElement& x, std::uint64_t m) const;
  std::vector<Matrix> centralizer(const Matrix& y) const;
  std::uint64_t torus_order() const noexcept { return torus_order_; }
  const std::vector<Matrix>& group() const;

 private:
  GroupDescriptor desc_;
  std::uint64_t budget_;
  std::uint64_t group_order_;
  std::uint64_t torus_order_;
  mutable std::once_flag once_;
  mutable std::vector<Matrix> group_;
};

struct ClassCount {
  std::uint64_t group_order = 0;
  std::uint64_t j_count = 0;
};

// Exhaustive fast-path count of J_{ell,m} in the group at desc.level.
ClassCount classify_group(const GroupDescriptor& desc, std::uint64_t m,
                          std::uint64_t budget = kGroupBudget);

enum class NormalizerMethod { kAuto, kEnumerate, kCoset };

struct NormalizerCensus {
  std::uint64_t normalizer_order = 0;
  std::uint64_t weyl_order = 0;
  // "enumeration": every group element tested.  "coset": N is a union of
  // cosets of T = C(x) for a regular x in T, one per torus element
  // conjugate to x, found by solving g x = s g.
  std::string method;
};

// kAuto enumerates when the group order is within `budget`, otherwise uses
// the coset count.  Throws kBudgetExceeded when neither fits.
NormalizerCensus normalizer_census(const GroupDescriptor& desc,
                                   NormalizerMethod method = NormalizerMethod::kAuto,
                                   std::uint64_t budget = kGroupBudget);

struct WeylStability {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> weyl_orders;
  bool stable = false;
};

// Weyl order of the torus at each prime; stable when all agree.
WeylStability weyl_stability(Family family, int r, Level level,
                             const std::vector<std::uint64_t>& primes);

struct TorusCensus {
  GroupDescriptor desc;
  std::uint64_t m = 1;
  std::uint64_t torus_order = 0;
  std::uint64_t regular_count = 0;    // |T*|
  std::uint64_t regular_count_m = 0;  // |T*_m| = #{t : t^m regular}
  std::uint64_t normalizer_order = 0;
  std::uint64_t weyl_order = 0;
  std::string normalizer_method;
  mpq_class b_estimate;  // ell * (1 - |T*| / |T|)
};

TorusCensus torus_census(const GroupDescriptor& desc, std::uint64_t m);

}  // namespace frobsplit

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/finfield.hpp"
#include "frobsplit/matrix.hpp"

namespace frobsplit {

enum class Family { kA, kC };

// Where between the derived group and the full similitude group we sit.
// TypeC: kDerived == kIsometry == Sp, kSimilitude == GSp.
// TypeA: kDerived == SU, kIsometry == U, kSimilitude == GU.
enum class Level { kSimilitude, kIsometry, kDerived };

inline constexpr std::uint64_t kGroupBudget = 1'000'000;
inline constexpr std::uint64_t kTorusBudget = 10'000'000;

struct GroupDescriptor {
  Family family = Family::kC;
  int r = 1;
  std::uint64_t ell = 3;
  Level level = Level::kSimilitude;

  // F_ell for TypeC, F_{ell^2} for TypeA.
  const ExtField& base() const;
  // Matrix size: 2r for TypeC, r for TypeA.
  int dim() const { return family == Family::kC ? 2 * r : r; }
  // Base field is one of F2, F3, F4, F9.
  bool exceptional() const { return ell == 2 || ell == 3; }
  GroupDescriptor at_level(Level l) const;
  GroupDescriptor with_ell(std::uint64_t l) const;
  // e.g. "GSp_2(F_3)", "U_2(F_9)".
  std::string name() const;

  bool operator==(const GroupDescriptor&) const = default;
};

// Throws kCompositeModulus, kInvalidArgument (r < 1), kOverflow.
GroupDescriptor make_descriptor(Family family, int r, std::uint64_t ell,
                                Level level = Level::kSimilitude);

std::string_view family_name(Family f);
std::string_view level_name(Level l);

mpz_class group_order(const GroupDescriptor& desc);

// Gram matrix of the standard form: antidiag(1,..,1,-1,..,-1) for TypeC, the
// identity (Hermitian, conjugation x -> x^ell) for TypeA.
Matrix standard_form(const GroupDescriptor& desc);

struct GroupElement {
  GroupDescriptor desc;
  Matrix matrix;
  std::uint64_t similitude;  // in F_ell, encoded in the base field

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(std::uint64_t e) const;
};

// Sesquilinear (TypeA) or bilinear (TypeC) form applied to M:
// M^T J M, or M^T H conj(M).
Matrix form_image(const GroupDescriptor& desc, const Matrix& m);

// The element with its similitude if M lies in the group at desc.level.
// Throws kDimensionMismatch, kFieldMismatch.
std::optional<GroupElement> contains(const GroupDescriptor& desc, const Matrix& m);

// All elements in a deterministic order.  Throws kBudgetExceeded when the
// order formula exceeds `budget`.
std::vector<Matrix> enumerate_group(const GroupDescriptor& desc,
                                    std::uint64_t budget = kGroupBudget);

}  // namespace frobsplit

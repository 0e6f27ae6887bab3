#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "frobsplit/groups.hpp"

namespace frobsplit {

// One element of G_1 x ... x G_k, one matrix per factor.
using ElementTuple = std::vector<Matrix>;

enum class GoursatVerdict {
  kFull,            // the generated subgroup is the whole product
  kNotSurjective,   // some projection is proper, nothing to conclude
  kOutOfHypothesis, // projections surject, subgroup proper, hypotheses fail
  kCounterexample,  // projections surject, subgroup proper, hypotheses hold
};

std::string_view goursat_verdict_name(GoursatVerdict v);

struct GoursatResult {
  std::vector<GroupDescriptor> factors;
  std::uint64_t closure_order = 0;
  mpz_class product_order;
  std::vector<std::uint64_t> projection_orders;
  std::vector<bool> surjective;
  bool full = false;
  // Distinct primes, ell >= 5, and nonabelian simple adjoint quotient.
  bool hypotheses_hold = false;
  std::vector<std::string> hypothesis_failures;
  GoursatVerdict verdict = GoursatVerdict::kNotSurjective;
  std::string witness;
};

inline constexpr std::uint64_t kFactorBudget = 100'000;

// Closure of `generators` inside the product of the derived groups of
// `factors` (their levels are forced to kDerived).  Throws kDimensionMismatch
// for badly shaped tuples, kInvalidArgument for matrices outside a factor,
// kBudgetExceeded when a factor exceeds 10^5 elements or the closure exceeds
// `budget`.
GoursatResult goursat_verify(const std::vector<GroupDescriptor>& factors,
                             const std::vector<ElementTuple>& generators,
                             std::uint64_t budget = kTorusBudget);

// `count` uniformly random tuples, redrawn until every projection surjects
// (at most `attempts` rounds).  Throws kBudgetExceeded when no round succeeds.
std::vector<ElementTuple> random_surjective_generators(const std::vector<GroupDescriptor>& factors,
                                                       std::size_t count, std::uint64_t seed,
                                                       int attempts = 100);

// Tuples (g, g, ..., g) for `count` random g generating the single factor.
std::vector<ElementTuple> diagonal_generators(const GroupDescriptor& factor, std::size_t copies,
                                              std::size_t count, std::uint64_t seed,
                                              int attempts = 100);

}  // namespace frobsplit

#include "frobsplit/goursat.hpp"

#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "frobsplit/errors.hpp"
#include "random.hpp"

namespace frobsplit {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

std::string_view goursat_verdict_name(GoursatVerdict v) {
  switch (v) {
    case GoursatVerdict::kFull: return "full";
    case GoursatVerdict::kNotSurjective: return "not-surjective";
    case GoursatVerdict::kOutOfHypothesis: return "out-of-hypothesis";
    case GoursatVerdict::kCounterexample: return "counterexample";
  }
  return "?";
}

namespace {

// A factor group as a permutation domain.
struct Indexed {
  GroupDescriptor desc;
  std::vector<Matrix> elems;
  std::unordered_map<Matrix, u32, MatrixHash> index;
  u32 identity = 0;

  explicit Indexed(const GroupDescriptor& d)
      : desc(d.at_level(Level::kDerived)), elems(enumerate_group(desc, kFactorBudget)) {
    index.reserve(elems.size());
    for (u32 i = 0; i < elems.size(); ++i) {
      index.emplace(elems[i], i);
      if (elems[i].is_identity()) identity = i;
    }
  }

  u32 lookup(const Matrix& m) const {
    if (!contains(desc, m)) {
      fail(ErrorCode::kInvalidArgument, "generator entry is not in " + desc.name());
    }
    return index.at(m);
  }

  // x -> x * g as a table.
  std::vector<u32> right_mult(const Matrix& g) const {
    std::vector<u32> out(elems.size());
    for (u32 i = 0; i < elems.size(); ++i) out[i] = index.at(elems[i] * g);
    return out;
  }
};

u64 orbit_size(u32 start, const std::vector<std::vector<u32>>& perms) {
  std::vector<bool> seen(perms.empty() ? start + 1 : perms.front().size(), false);
  std::vector<u32> queue{start};
  seen[start] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& p : perms) {
      const u32 y = p[queue[q]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

std::vector<Indexed> index_factors(const std::vector<GroupDescriptor>& factors) {
  std::vector<Indexed> out;
  out.reserve(factors.size());
  for (const auto& d : factors) out.emplace_back(d);
  return out;
}

}  // namespace

GoursatResult goursat_verify(const std::vector<GroupDescriptor>& factors,
                             const std::vector<ElementTuple>& generators, u64 budget) {
  if (factors.empty()) fail(ErrorCode::kInvalidArgument, "no factors");
  const auto groups = index_factors(factors);
  const std::size_t k = groups.size();

  GoursatResult res;
  res.product_order = 1;
  for (const auto& g : groups) {
    res.factors.push_back(g.desc);
    res.product_order *= static_cast<unsigned long>(g.elems.size());
  }
  if (res.product_order > mpz_class("18446744073709551615")) {
    fail(ErrorCode::kBudgetExceeded, "product order " + res.product_order.get_str() + " exceeds 2^64");
  }

  // perms[i][j]: right multiplication by the j-th generator on factor i.
  std::vector<std::vector<std::vector<u32>>> perms(k);
  for (const auto& t : generators) {
    if (t.size() != k) {
      fail(ErrorCode::kDimensionMismatch, "generator tuple has " + std::to_string(t.size()) +
                                              " entries, expected " + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
      groups[i].lookup(t[i]);
      perms[i].push_back(groups[i].right_mult(t[i]));
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    const u64 o = orbit_size(groups[i].identity, perms[i]);
    res.projection_orders.push_back(o);
    res.surjective.push_back(o == groups[i].elems.size());
  }

  // Mixed-radix key of a tuple of indices.
  std::vector<u64> radix(k);
  u64 acc = 1;
  for (std::size_t i = 0; i < k; ++i) {
    radix[i] = acc;
    acc *= groups[i].elems.size();
  }
  auto digit = [&](u64 key, std::size_t i) {
    return static_cast<u32>(key / radix[i] % groups[i].elems.size());
  };
  u64 start = 0;
  for (std::size_t i = 0; i < k; ++i) start += groups[i].identity * radix[i];

  std::unordered_set<u64> seen{start};
  std::vector<u64> queue{start};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const u64 key = queue[q];
    for (std::size_t j = 0; j < generators.size(); ++j) {
      u64 next = 0;
      for (std::size_t i = 0; i < k; ++i) next += perms[i][j][digit(key, i)] * radix[i];
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          fail(ErrorCode::kBudgetExceeded, "closure exceeds " + std::to_string(budget) + " elements");
        }
        queue.push_back(next);
      }
    }
  }
  res.closure_order = queue.size();
  res.full = res.product_order == mpz_class(static_cast<unsigned long>(res.closure_order));

  std::set<u64> primes;
  for (const auto& g : groups) {
    const auto& d = g.desc;
    if (!primes.insert(d.ell).second) {
      res.hypothesis_failures.push_back("prime " + std::to_string(d.ell) + " repeated");
    }
    if (d.exceptional()) {
      res.hypothesis_failures.push_back(d.name() + " has exceptional base field");
    }
    if (d.family == Family::kA && d.r < 2) {
      res.hypothesis_failures.push_back(d.name() + " has no simple quotient");
    }
  }
  res.hypotheses_hold = res.hypothesis_failures.empty();

  bool all_surjective = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!res.surjective[i]) {
      all_surjective = false;
      if (res.witness.empty()) {
        res.witness = "projection to " + groups[i].desc.name() + " has order " +
                      std::to_string(res.projection_orders[i]) + " of " +
                      std::to_string(groups[i].elems.size());
      }
    }
  }
  if (res.full) {
    res.verdict = GoursatVerdict::kFull;
    res.witness = "closure order " + std::to_string(res.closure_order) + " equals the product order";
  } else if (!all_surjective) {
    res.verdict = GoursatVerdict::kNotSurjective;
  } else {
    res.verdict = res.hypotheses_hold ? GoursatVerdict::kCounterexample
                                      : GoursatVerdict::kOutOfHypothesis;
    res.witness = "closure order " + std::to_string(res.closure_order) + " of " +
                  res.product_order.get_str() + " with every projection onto";
  }
  return res;
}

std::vector<ElementTuple> random_surjective_generators(const std::vector<GroupDescriptor>& factors,
                                                       std::size_t count, u64 seed, int attempts) {
  const auto groups = index_factors(factors);
  std::mt19937_64 rng(detail::splitmix64(seed));
  for (int a = 0; a < attempts; ++a) {
    std::vector<ElementTuple> gens(count);
    std::vector<std::vector<std::vector<u32>>> perms(groups.size());
    for (auto& t : gens) {
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const u32 idx = static_cast<u32>(detail::bounded(rng, groups[i].elems.size()));
        t.push_back(groups[i].elems[idx]);
        perms[i].push_back(groups[i].right_mult(groups[i].elems[idx]));
      }
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < groups.size(); ++i) {
      ok = orbit_size(groups[i].identity, perms[i]) == groups[i].elems.size();
    }
    if (ok) return gens;
  }
  fail(ErrorCode::kBudgetExceeded,
       "no surjective generator set in " + std::to_string(attempts) + " attempts");
}

std::vector<ElementTuple> diagonal_generators(const GroupDescriptor& factor, std::size_t copies,
                                              std::size_t count, u64 seed, int attempts) {
  const auto single = random_surjective_generators({factor}, count, seed, attempts);
  std::vector<ElementTuple> out;
  for (const auto& t : single) out.push_back(ElementTuple(copies, t.front()));
  return out;
}

}  // namespace frobsplit

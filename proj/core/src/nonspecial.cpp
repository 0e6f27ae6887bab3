#include "frobsplit/nonspecial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "frobsplit/errors.hpp"
#include "frobsplit/finfield.hpp"

namespace frobsplit {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    fail(ErrorCode::kParse, "bad multiplicity '" + std::string(s) + "' in \"" +
                                std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

CMSignature CMSignature::parse(int r, std::string_view text) {
  CMSignature sig;
  sig.r = r;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorCode::kParse, "expected a:b, got '" + std::string(item) + "'");
    }
    sig.pairs.emplace_back(parse_int(item.substr(0, colon), text),
                           parse_int(item.substr(colon + 1), text));
    pos = comma + 1;
  }
  return sig;
}

std::string CMSignature::to_string() const {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + ":" + std::to_string(b);
  }
  return out;
}

std::string_view condition_label(NonSpecialCondition c) {
  switch (c) {
    case NonSpecialCondition::kRankFourOrPrime: return "i";
    case NonSpecialCondition::kMultiplicityOne: return "ii";
    case NonSpecialCondition::kSmallCoprime: return "iii";
    case NonSpecialCondition::kCoprimeNonBinomial: return "iv";
  }
  return "?";
}

bool is_binomial_pair(int a, int b) {
  // C(i, j-1) and C(i, j) both <= max(a, b) forces i <= max + 1.
  const long bound = std::max(a, b);
  for (long i = 0; i <= bound + 1; ++i) {
    // Row i of Pascal's triangle, padded with a trailing zero.
    std::vector<long> row(i + 2, 0);
    row[0] = 1;
    for (long j = 1; j <= i; ++j) row[j] = row[j - 1] * (i - j + 1) / j;
    for (long j = 1; j <= i + 1; ++j) {
      if (row[j - 1] == a && row[j] == b) return true;
    }
  }
  return false;
}

std::vector<NonSpecialCondition> non_special(const CMSignature& sig) {
  if (sig.r < 1) fail(ErrorCode::kInconsistentSignature, "rank must be >= 1");
  for (const auto& [a, b] : sig.pairs) {
    if (a + b != sig.r) {
      fail(ErrorCode::kInconsistentSignature,
           std::to_string(a) + ":" + std::to_string(b) + " does not sum to r = " +
               std::to_string(sig.r));
    }
  }
  const int r = sig.r;
  std::vector<NonSpecialCondition> out;
  if (r == 4 || is_prime(static_cast<std::uint64_t>(r))) {
    out.push_back(NonSpecialCondition::kRankFourOrPrime);
  }
  // Both tau and its conjugate range over the embeddings, so each pair
  // contributes both of its entries.
  std::set<int> mults;
  for (const auto& [a, b] : sig.pairs) {
    mults.insert(a);
    mults.insert(b);
  }
  if (mults.count(1)) out.push_back(NonSpecialCondition::kMultiplicityOne);

  bool small = false;
  for (int x : mults) {
    for (int y : mults) {
      if (1 <= x && x < y && 2 * y <= r && (std::gcd(x, r) == 1 || std::gcd(y, r) == 1)) {
        small = true;
      }
    }
  }
  if (small) out.push_back(NonSpecialCondition::kSmallCoprime);

  for (const auto& [a, b] : sig.pairs) {
    bool hit = false;
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (std::gcd(x, y) == 1 && !is_binomial_pair(x, y)) hit = true;
    }
    if (hit) {
      out.push_back(NonSpecialCondition::kCoprimeNonBinomial);
      break;
    }
  }
  return out;
}

}  // namespace frobsplit

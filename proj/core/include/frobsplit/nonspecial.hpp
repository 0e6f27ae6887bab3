#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frobsplit {

// Rank r and the multiplicity pairs (m_tau, m_taubar) of a CM action.
struct CMSignature {
  int r = 0;
  std::vector<std::pair<int, int>> pairs;

  // "1:5,2:4" with the given r.  Throws kParse.
  static CMSignature parse(int r, std::string_view text);
  std::string to_string() const;
};

enum class NonSpecialCondition { kRankFourOrPrime, kMultiplicityOne, kSmallCoprime, kCoprimeNonBinomial };

// "i", "ii", "iii", "iv".
std::string_view condition_label(NonSpecialCondition c);

// Every sufficient condition that holds, in order.  Empty means "not
// certified", not "special".  Throws kInconsistentSignature.
std::vector<NonSpecialCondition> non_special(const CMSignature& sig);

// (a, b) == (C(i, j-1), C(i, j)) for some natural i, j >= 1.
bool is_binomial_pair(int a, int b);

}  // namespace frobsplit

// Brute-force reference implementations and the cross-checking harness.
// These share no code with the predicates they audit, so agreement over an
// exhaustive range is evidence rather than tautology.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opow/language.hpp"
#include "opow/mupi.hpp"
#include "opow/words.hpp"

namespace opow {

struct disagreement {
  word w;
  bool left_verdict = false;
  bool right_verdict = false;
  std::string context;
};

// Exhaustive comparison of two deciders over all words up to max_len; an
// empty result is an agreement certificate for that range.
inline std::vector<disagreement> crosscheck(const language& a, const language& b,
                                            std::size_t max_len) {
  if (a.alpha != b.alpha)
    throw std::invalid_argument("crosscheck: alphabet mismatch");
  std::vector<disagreement> out;
  for_each_word(a.alpha, max_len, [&](const word& w) {
    bool va = a.decide(w), vb = b.decide(w);
    if (va != vb)
      out.push_back({w, va, vb, a.name + " vs " + b.name});
  });
  return out;
}

// All splittings w = c_1 a_1 ... c_n a_n with every c_i in `blocks` and every
// a_i a letter from `terminators`; a decomposition is reported as the sorted
// positions of the a_i. Exponential search, intended for short words.
inline std::vector<std::vector<std::size_t>> brute_decompose(
    const word& w, const language& blocks, const std::vector<std::uint8_t>& terminators) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto is_terminator = [&](std::uint8_t l) {
    return std::find(terminators.begin(), terminators.end(), l) != terminators.end();
  };
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (from == w.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t t = from; t < w.size(); ++t) {
      if (!is_terminator(w.letter(t)))
        continue;
      if (!blocks.decide(w.slice(from, t)))
        continue;
      current.push_back(t);
      self(self, t + 1);
      current.pop_back();
    }
  };
  search(search, 0);
  return out;
}

// Brute membership in the substitution image: some decomposition whose
// extracted terminator letters form a word in `extracted`.
inline bool brute_substitution_member(const word& w, const language& blocks,
                                      const std::vector<std::uint8_t>& terminators,
                                      const language& extracted) {
  for (const auto& cuts : brute_decompose(w, blocks, terminators)) {
    std::vector<std::uint8_t> letters;
    for (std::size_t t : cuts)
      letters.push_back(w.letter(t));
    bool in_alphabet = true;
    for (std::uint8_t l : letters)
      if (l >= extracted.alpha.size())
        in_alphabet = false;
    if (in_alphabet && extracted.decide(word(extracted.alpha, letters)))
      return true;
  }
  return false;
}

// First pi-member in enumeration order among words of length <= max_len,
// with its parse; defines the pinned regression witness.
inline std::optional<std::pair<word, pi_parse>> brute_pi_witness(
    std::size_t max_len, const tree_predicate& R,
    final_convention conv = final_convention::left_component) {
  std::optional<std::pair<word, pi_parse>> found;
  for_each_word(digits(4), max_len, [&](const word& w) {
    auto parse = parse_pi(w, R, conv);
    if (!parse)
      return true;
    found = {w, *parse};
    return false;
  });
  return found;
}

}  // namespace opow

// The coded transition-system combinatorics over the four-letter alphabet:
// enumeration of equal-length bit-word pairs, the index milestones M_j, the
// compact prefix sets K_{N,j}, the edge relation, and the languages pi, mu0,
// mu1 and their union, parameterized by a prefix-closed tree predicate.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opow/words.hpp"

namespace opow {

// M_j = sum_{i<j} 4^{i+1}; strictly increasing, and the index of the last
// pair of each length.
inline std::uint64_t m_index(std::size_t j) {
  if (j > 30)
    throw std::invalid_argument("m_index: level too large");
  std::uint64_t sum = 0, pow4 = 4;
  for (std::size_t i = 0; i < j; ++i) {
    sum += pow4;
    pow4 *= 4;
  }
  return sum;
}

// A pair of equal-length bit words.  Edges extend `left` by a free bit and
// `right` by the input bit.
struct state_pair {
  word left;
  word right;

  bool operator==(const state_pair& o) const { return left == o.left && right == o.right; }
};

namespace detail {

// (length, offset within that length) of state n.
inline std::pair<std::size_t, std::uint64_t> state_coords(std::uint64_t n) {
  std::size_t j = 0;
  while (m_index(j) < n)
    ++j;
  std::uint64_t first = j == 0 ? 0 : m_index(j - 1) + 1;
  return {j, n - first};
}

}  // namespace detail

// States are enumerated by length and then lexicographically as sequences of
// bit pairs, a pair (sl, sr) ordered by 2 sl + sr.
inline state_pair state_pair_at(std::uint64_t n) {
  auto [len, offset] = detail::state_coords(n);
  std::vector<std::uint8_t> left(len), right(len);
  for (std::size_t i = len; i-- > 0;) {
    std::uint64_t digit = offset % 4;
    offset /= 4;
    left[i] = static_cast<std::uint8_t>(digit >> 1);
    right[i] = static_cast<std::uint8_t>(digit & 1);
  }
  return {word(digits(2), std::move(left)), word(digits(2), std::move(right))};
}

inline std::uint64_t state_index(const state_pair& q) {
  if (q.left.size() != q.right.size())
    throw std::invalid_argument("state_index: components differ in length");
  std::size_t len = q.left.size();
  if (len == 0)
    return 0;
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < len; ++i)
    offset = offset * 4 + 2 * q.left.letter(i) + q.right.letter(i);
  return m_index(len - 1) + 1 + offset;
}

// Index of the state extending q_n by (guess_bit, input_bit).
inline std::uint64_t edge_target(std::uint64_t n, int input_bit, int guess_bit) {
  auto [len, offset] = detail::state_coords(n);
  return m_index(len) + 1 + offset * 4 +
         static_cast<std::uint64_t>(2 * guess_bit + input_bit);
}

// n -> p reading m, i.e. q_n.left is a prefix of q_p.left and
// q_p.right = q_n.right m.
inline bool edge(std::uint64_t n, int input_bit, std::uint64_t p) {
  state_pair qn = state_pair_at(n), qp = state_pair_at(p);
  if (qp.right.size() != qn.right.size() + 1)
    return false;
  if (!qn.left.is_prefix_of(qp.left) || qp.left.size() != qn.left.size() + 1)
    return false;
  return qp.right == append(qn.right, static_cast<std::uint8_t>(input_bit));
}

// A prefix-closed decision on equal-length bit-word pairs.
struct tree_predicate {
  std::string name;
  std::function<bool(const word& t, const word& s)> decide;
};

inline tree_predicate tree_full() {
  return {"full", [](const word&, const word&) { return true; }};
}

inline tree_predicate tree_diag() {
  return {"diag", [](const word& t, const word& s) { return t == s; }};
}

// The written form of final pairs is ambiguous between the two components,
// so both readings are available; the default tests the freely-guessed
// component (`left`).
enum class final_convention { left_component, right_component };

inline bool is_final(const state_pair& q, const tree_predicate& R,
                     final_convention conv = final_convention::left_component) {
  const word& tested = conv == final_convention::left_component ? q.left : q.right;
  if (tested.empty_word() || tested.letter(tested.size() - 1) != 1)
    return false;
  return conv == final_convention::left_component ? R.decide(q.left, q.right)
                                                  : R.decide(q.right, q.left);
}

// Is w a prefix of some element of K_{N,j} = 2^N (m 2^{M_{j+i+1}} 3
// 2^{M_{j+i+1}})_{i in omega} with free bits m?
inline bool k_prefix_member(const word& w, std::uint64_t N, std::size_t j) {
  if (w.alpha() != digits(4))
    throw std::invalid_argument("k_prefix_member: expects the alphabet {0,1,2,3}");
  if (N > m_index(j))
    throw std::invalid_argument("k_prefix_member: requires N <= M_j");
  std::size_t pos = 0;
  auto run_of_twos = [&](std::uint64_t count) {
    for (std::uint64_t c = 0; c < count; ++c) {
      if (pos == w.size())
        return true;  // exhausted inside the pattern: a prefix
      if (w.letter(pos) != 2)
        return false;
      ++pos;
    }
    return true;
  };
  if (!run_of_twos(N))
    return false;
  for (std::size_t i = 0;; ++i) {
    if (pos == w.size())
      return true;
    if (w.letter(pos) > 1)
      return false;
    ++pos;
    std::uint64_t m = m_index(j + i + 1);
    if (!run_of_twos(m))
      return false;
    if (pos == w.size())
      return true;
    if (w.letter(pos) != 3)
      return false;
    ++pos;
    if (!run_of_twos(m))
      return false;
  }
}

// --- block parses -------------------------------------------------------------

namespace detail {

// Common skeleton of pi and mu words: a 2-run, then alternating marked
// letters (0 or 1) and 3s separated by 2-runs, ending after a 3 and a final
// 2-run.
struct skeleton {
  std::size_t lead = 0;
  std::vector<int> marks;            // block letters m_i
  std::vector<std::size_t> gap_m3;   // 2-run between mark i and its 3
  std::vector<std::size_t> gap_3m;   // 2-run after 3 of block i (trailing for the last)
};

inline std::optional<skeleton> parse_skeleton(const word& w) {
  std::vector<std::pair<std::uint8_t, std::size_t>> items;  // (letter, run of 2s before it)
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint8_t l = w.letter(i);
    if (l == 2) {
      ++run;
      continue;
    }
    items.emplace_back(l, run);
    run = 0;
  }
  if (items.empty() || items.size() % 2 != 0)
    return std::nullopt;
  skeleton sk;
  sk.lead = items[0].second;
  for (std::size_t k = 0; k < items.size(); k += 2) {
    if (items[k].first > 1 || items[k + 1].first != 3)
      return std::nullopt;
    sk.marks.push_back(items[k].first);
    sk.gap_m3.push_back(items[k + 1].second);
    if (k + 2 < items.size())
      sk.gap_3m.push_back(items[k + 2].second);
  }
  sk.gap_3m.push_back(run);  // trailing 2-run
  return sk;
}

// Smallest j with M_j = value, if any.
inline std::optional<std::size_t> m_level_of(std::uint64_t value) {
  for (std::size_t j = 0;; ++j) {
    std::uint64_t m = m_index(j);
    if (m == value)
      return j;
    if (m > value)
      return std::nullopt;
  }
}

}  // namespace detail

// Witness of a pi parse; reassembling the blocks reproduces the word.
struct pi_parse {
  std::size_t j = 0;
  std::vector<int> m;
  std::vector<std::uint64_t> n, p, r;

  word reassemble() const {
    std::vector<std::uint8_t> ls;
    auto twos = [&](std::uint64_t c) { ls.insert(ls.end(), c, 2); };
    for (std::size_t i = 0; i < m.size(); ++i) {
      twos(n[i]);
      ls.push_back(static_cast<std::uint8_t>(m[i]));
      twos(p[i]);
      twos(r[i]);
      ls.push_back(3);
      twos(r[i]);
    }
    return word(digits(4), std::move(ls));
  }
};

inline std::optional<pi_parse> parse_pi(const word& w, const tree_predicate& R,
                                        final_convention conv = final_convention::left_component) {
  if (w.alpha() != digits(4))
    throw std::invalid_argument("parse_pi: expects the alphabet {0,1,2,3}");
  auto sk = detail::parse_skeleton(w);
  if (!sk)
    return std::nullopt;
  std::size_t blocks = sk->marks.size();
  auto level = detail::m_level_of(sk->gap_m3[0]);
  if (!level || *level == 0)
    return std::nullopt;
  std::size_t j = *level - 1;
  if (sk->lead > m_index(j))
    return std::nullopt;
  for (std::size_t i = 0; i < blocks; ++i) {
    if (sk->gap_m3[i] != m_index(j + i + 1))
      return std::nullopt;
    if (i + 1 < blocks && sk->gap_3m[i] != m_index(j + i + 1))
      return std::nullopt;
  }
  std::uint64_t last_gap = m_index(j + blocks);
  if (sk->gap_3m[blocks - 1] > last_gap)
    return std::nullopt;
  std::uint64_t p_last = last_gap - sk->gap_3m[blocks - 1];

  std::vector<std::uint64_t> chain(blocks + 1);
  chain[0] = sk->lead;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == blocks)
      return chain[blocks] == p_last && is_final(state_pair_at(p_last), R, conv);
    for (int guess = 0; guess < 2; ++guess) {
      std::uint64_t p = edge_target(chain[i], sk->marks[i], guess);
      if (p > m_index(j + i + 1))
        continue;
      chain[i + 1] = p;
      if (self(self, i + 1))
        return true;
    }
    return false;
  };
  if (!search(search, 0))
    return std::nullopt;
  pi_parse out;
  out.j = j;
  out.m = sk->marks;
  for (std::size_t i = 0; i < blocks; ++i) {
    out.n.push_back(chain[i]);
    out.p.push_back(chain[i + 1]);
    out.r.push_back(m_index(j + i + 1) - chain[i + 1]);
  }
  return out;
}

inline bool pi_member(const word& w, const tree_predicate& R,
                      final_convention conv = final_convention::left_component) {
  return parse_pi(w, R, conv).has_value();
}

struct mu_parse {
  std::uint64_t lead = 0;  // N
  std::vector<int> m;
  std::vector<std::uint64_t> P, R;

  word reassemble() const {
    std::vector<std::uint8_t> ls;
    auto twos = [&](std::uint64_t c) { ls.insert(ls.end(), c, 2); };
    twos(lead);
    for (std::size_t i = 0; i < m.size(); ++i) {
      ls.push_back(static_cast<std::uint8_t>(m[i]));
      twos(P[i]);
      ls.push_back(3);
      twos(R[i]);
    }
    return word(digits(4), std::move(ls));
  }
};

namespace detail {

// Shared mu shape: at least two blocks m 2^{P_i} 3 2^{R_i} after the lead,
// every P_i some M-value.
inline std::optional<mu_parse> parse_mu_shape(const word& w) {
  if (w.alpha() != digits(4))
    throw std::invalid_argument("parse_mu: expects the alphabet {0,1,2,3}");
  auto sk = parse_skeleton(w);
  if (!sk || sk->marks.size() < 2)
    return std::nullopt;
  for (std::size_t i = 0; i < sk->marks.size(); ++i)
    if (!m_level_of(sk->gap_m3[i]))
      return std::nullopt;
  mu_parse out;
  out.lead = sk->lead;
  out.m = sk->marks;
  out.P.assign(sk->gap_m3.begin(), sk->gap_m3.end());
  out.R.assign(sk->gap_3m.begin(), sk->gap_3m.end());
  return out;
}

}  // namespace detail

// mu0: the second-to-last P differs from the second-to-last R.
inline std::optional<mu_parse> parse_mu0(const word& w) {
  auto p = detail::parse_mu_shape(w);
  if (!p)
    return std::nullopt;
  std::size_t l = p->m.size() - 2;
  if (p->P[l] == p->R[l])
    return std::nullopt;
  return p;
}

// mu1: the second-to-last P is M_j while the last P is not M_{j+1}.
inline std::optional<mu_parse> parse_mu1(const word& w) {
  auto p = detail::parse_mu_shape(w);
  if (!p)
    return std::nullopt;
  std::size_t l = p->m.size() - 2;
  auto j = detail::m_level_of(p->P[l]);
  if (!j || p->P[l + 1] == m_index(*j + 1))
    return std::nullopt;
  return p;
}

inline bool mu0_member(const word& w) { return parse_mu0(w).has_value(); }
inline bool mu1_member(const word& w) { return parse_mu1(w).has_value(); }

inline bool a_member(const word& w, const tree_predicate& R,
                     final_convention conv = final_convention::left_component) {
  return mu0_member(w) || mu1_member(w) || pi_member(w, R, conv);
}

// All state-index sequences t_0 .. t_{|input|} with t_0 = 0 following the
// edge relation; two branches per step, one per free bit.
inline std::vector<std::vector<std::uint64_t>> run_prefixes(const word& input) {
  if (input.alpha() != digits(2))
    throw std::invalid_argument("run_prefixes: expects the alphabet {0,1}");
  if (input.size() > 20)
    throw std::invalid_argument("run_prefixes: input too long to enumerate");
  std::vector<std::vector<std::uint64_t>> runs{{0}};
  for (std::size_t i = 0; i < input.size(); ++i) {
    std::vector<std::vector<std::uint64_t>> next;
    next.reserve(runs.size() * 2);
    for (const auto& r : runs)
      for (int guess = 0; guess < 2; ++guess) {
        auto extended = r;
        extended.push_back(edge_target(r.back(), input.letter(i), guess));
        next.push_back(std::move(extended));
      }
    runs = std::move(next);
  }
  return runs;
}

}  // namespace opow

// Membership of ultimately periodic omega-words in omega-powers L^inf,
// decided through a finite factorization graph on cut positions: an infinite
// path from cut 0 with blocks of length at most B in L exists iff a cycle is
// reachable.  Positive verdicts are exact; negative verdicts are relative to
// the block bound.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opow/language.hpp"
#include "opow/words.hpp"

namespace opow {

// Nodes are cut positions: 0..|u|-1 in the prefix, then |u|..|u|+|v|-1 for
// positions inside the period, taken modulo |v|.  An edge p -> q labelled l
// means the l-letter block starting at p is in L.
struct factorization_graph {
  std::size_t prefix_len = 0;
  std::size_t period_len = 0;
  std::size_t bound = 0;
  struct edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t length = 0;
    word block;
  };
  std::vector<std::vector<edge>> out;

  std::size_t node_count() const { return prefix_len + period_len; }
  std::size_t normalize(std::size_t position) const {
    if (position < prefix_len)
      return position;
    return prefix_len + (position - prefix_len) % period_len;
  }
};

inline factorization_graph build_factorization_graph(const language& L, const lasso_word& x,
                                                     std::size_t block_bound) {
  if (L.alpha != x.alpha())
    throw std::invalid_argument("build_factorization_graph: alphabet mismatch");
  if (block_bound == 0)
    throw std::invalid_argument("build_factorization_graph: bound must be >= 1");
  factorization_graph g;
  g.prefix_len = x.head().size();
  g.period_len = x.period().size();
  g.bound = block_bound;
  g.out.resize(g.node_count());
  word window = x.unroll(g.node_count() + block_bound);
  for (std::size_t p = 0; p < g.node_count(); ++p) {
    for (std::size_t len = 1; len <= block_bound; ++len) {
      word block = window.slice(p, p + len);
      if (!L.decide(block))
        continue;
      g.out[p].push_back({p, g.normalize(p + len), len, std::move(block)});
    }
  }
  return g;
}

// A lead-in from cut 0 followed by a repeating cycle of blocks; expanding
// lead_in then cycle forever spells an omega-factorization into L-blocks.
struct factorization_witness {
  std::vector<factorization_graph::edge> lead_in;
  std::vector<factorization_graph::edge> cycle;
  std::size_t bound = 0;
};

inline std::optional<factorization_witness> omega_member_bounded(const language& L,
                                                                 const lasso_word& x,
                                                                 std::size_t block_bound) {
  factorization_graph g = build_factorization_graph(L, x, block_bound);
  // Depth-first search from node 0 looking for a back edge into the stack.
  enum class color { white, grey, black };
  std::vector<color> mark(g.node_count(), color::white);
  struct frame {
    std::size_t node;
    std::size_t next_edge;
  };
  std::vector<frame> stack{{0, 0}};
  mark[0] = color::grey;
  while (!stack.empty()) {
    frame& f = stack.back();
    if (f.next_edge == g.out[f.node].size()) {
      mark[f.node] = color::black;
      stack.pop_back();
      continue;
    }
    const auto& e = g.out[f.node][f.next_edge++];
    if (mark[e.to] == color::grey) {
      // Cycle found: the part of the stack from e.to onward plus e itself.
      factorization_witness w;
      w.bound = block_bound;
      std::size_t cut = 0;
      while (cut < stack.size() && stack[cut].node != e.to)
        ++cut;
      for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
        const auto& taken = g.out[stack[i].node][stack[i].next_edge - 1];
        (i < cut ? w.lead_in : w.cycle).push_back(taken);
      }
      if (cut < stack.size())
        w.cycle.push_back(e);
      else
        w.lead_in.push_back(e);  // unreachable; kept for safety
      return w;
    }
    if (mark[e.to] == color::white) {
      mark[e.to] = color::grey;
      stack.push_back({e.to, 0});
    }
  }
  return std::nullopt;
}

struct escalation_result {
  std::optional<factorization_witness> witness;
  std::size_t bound_reached = 0;           // bound of success, or B_max on exhaustion
  std::vector<std::size_t> bounds_tried;
};

// Try bounds 1, 2, 4, ... capped at B_max; membership is monotone in the
// bound, so the first success wins.
inline escalation_result omega_member_escalating(const language& L, const lasso_word& x,
                                                 std::size_t max_bound) {
  if (max_bound == 0)
    throw std::invalid_argument("omega_member_escalating: bound must be >= 1");
  escalation_result r;
  std::size_t b = 1;
  for (;;) {
    r.bounds_tried.push_back(b);
    r.bound_reached = b;
    r.witness = omega_member_bounded(L, x, b);
    if (r.witness)
      return r;
    if (b >= max_bound)
      return r;
    b = std::min(b * 2, max_bound);
  }
}

// w = w_1 ... w_k with k >= 0 nonempty blocks in L.
inline bool kleene_star_member(const language& L, const word& w) {
  if (L.alpha != w.alpha())
    throw std::invalid_argument("kleene_star_member: alphabet mismatch");
  std::vector<bool> reach(w.size() + 1, false);
  reach[0] = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!reach[i])
      continue;
    for (std::size_t j = i + 1; j <= w.size(); ++j)
      if (!reach[j] && L.decide(w.slice(i, j)))
        reach[j] = true;
  }
  return reach[w.size()];
}

// Whether w is a prefix of some element of L^inf: w = w_1 ... w_k r with the
// w_i nonempty L-blocks and r a proper prefix of some nonempty L-word of
// length <= probe.  Errors out when L has no such word at all, since then
// L^inf is empty as far as the probe can tell.
inline bool omega_prefix_member(const language& L, const word& w, std::size_t probe) {
  if (L.alpha != w.alpha())
    throw std::invalid_argument("omega_prefix_member: alphabet mismatch");
  std::vector<word> continuations;  // nonempty L-words of length <= probe
  for_each_word(L.alpha, probe, [&](const word& c) {
    if (!c.empty_word() && L.decide(c))
      continuations.push_back(c);
  });
  if (continuations.empty())
    throw std::invalid_argument("omega_prefix_member: no nonempty word of length <= " +
                                std::to_string(probe) + " in " + L.name);
  std::vector<bool> reach(w.size() + 1, false);
  reach[0] = true;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (!reach[i])
      continue;
    word rest = w.slice(i, w.size());
    for (const word& c : continuations)
      if (rest.size() < c.size() && rest.is_prefix_of(c))
        return true;
    if (rest.empty_word())
      return true;  // r = lambda
    for (std::size_t j = i + 1; j <= w.size(); ++j)
      if (!reach[j] && L.decide(w.slice(i, j)))
        reach[j] = true;
  }
  return false;
}

}  // namespace opow

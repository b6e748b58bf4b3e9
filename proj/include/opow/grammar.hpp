// Context-free grammars with a Chomsky-normal-form compiler and a CYK
// recognizer.  Used as the definitional oracle for grammar-given languages.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "opow/eraser.hpp"
#include "opow/words.hpp"

namespace opow {

struct grammar {
  std::vector<std::string> nonterminals;
  alphabet terminals = digits(1);
  struct production {
    std::string lhs;
    std::vector<std::string> rhs;  // mix of nonterminal names and terminal symbols
  };
  std::vector<production> productions;
  std::string start;
};

// The self-erasing grammar S -> a S <- S | a <- S | lambda over base + one eraser.
inline grammar l3_grammar(const eraser_alphabet& ea) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("l3_grammar: expects a single-eraser alphabet");
  grammar g;
  g.nonterminals = {"S"};
  g.terminals = ea.full;
  g.start = "S";
  const std::string er = ea.full.symbol(ea.eraser(1));
  for (std::size_t i = 0; i < ea.base.size(); ++i) {
    const std::string& a = ea.base.symbol(i);
    g.productions.push_back({"S", {a, "S", er, "S"}});
    g.productions.push_back({"S", {a, er, "S"}});
  }
  g.productions.push_back({"S", {}});
  return g;
}

// A grammar compiled to Chomsky normal form, ready for CYK.
class cnf_grammar {
  struct sym {
    bool term;
    int id;  // letter index when term, nonterminal id otherwise
    bool operator<(const sym& o) const { return std::tie(term, id) < std::tie(o.term, o.id); }
    bool operator==(const sym& o) const { return term == o.term && id == o.id; }
  };

public:
  explicit cnf_grammar(const grammar& g) : terminals_(g.terminals) {
    std::map<std::string, int> nt_id;
    auto intern = [&](const std::string& name) {
      auto it = nt_id.find(name);
      if (it != nt_id.end())
        return it->second;
      int id = static_cast<int>(nt_id.size());
      nt_id.emplace(name, id);
      return id;
    };
    for (const auto& n : g.nonterminals)
      intern(n);

    auto classify = [&](const std::string& name) -> sym {
      auto it = nt_id.find(name);
      if (it != nt_id.end())
        return {false, it->second};
      auto ix = g.terminals.index_of(name);
      if (!ix)
        throw std::invalid_argument("cnf_grammar: unknown symbol '" + name + "'");
      return {true, static_cast<int>(*ix)};
    };

    std::vector<std::pair<int, std::vector<sym>>> prods;
    for (const auto& p : g.productions) {
      std::vector<sym> rhs;
      for (const auto& s : p.rhs)
        rhs.push_back(classify(s));
      prods.emplace_back(intern(p.lhs), std::move(rhs));
    }

    int fresh = static_cast<int>(nt_id.size());

    // START: a fresh start symbol never on a right-hand side.
    start_ = fresh++;
    prods.emplace_back(start_, std::vector<sym>{{false, intern(g.start)}});

    // TERM: lift terminals out of long right-hand sides.
    std::map<int, int> term_nt;
    for (auto& [lhs, rhs] : prods) {
      if (rhs.size() < 2)
        continue;
      for (auto& s : rhs) {
        if (!s.term)
          continue;
        auto it = term_nt.find(s.id);
        int nt = it != term_nt.end() ? it->second : (term_nt[s.id] = fresh++);
        s = {false, nt};
      }
    }
    for (auto [letter, nt] : term_nt)
      prods.emplace_back(nt, std::vector<sym>{{true, letter}});

    // BIN: binarize long right-hand sides (appended tails are revisited).
    for (std::size_t pi = 0; pi < prods.size(); ++pi) {
      while (prods[pi].second.size() > 2) {
        int nt = fresh++;
        std::vector<sym> tail(prods[pi].second.begin() + 1, prods[pi].second.end());
        sym head = prods[pi].second[0];
        prods[pi].second = {head, {false, nt}};
        prods.emplace_back(nt, std::move(tail));
      }
    }

    // DEL: drop nullable occurrences.
    std::set<int> nullable;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [lhs, rhs] : prods) {
        if (nullable.count(lhs))
          continue;
        bool all = true;
        for (const auto& s : rhs)
          if (s.term || !nullable.count(s.id)) {
            all = false;
            break;
          }
        if (all) {
          nullable.insert(lhs);
          changed = true;
        }
      }
    }
    accepts_empty_ = nullable.count(start_) != 0;
    std::set<std::pair<int, std::vector<sym>>> expanded;
    for (const auto& [lhs, rhs] : prods) {
      std::vector<std::vector<sym>> variants{{}};
      for (const auto& s : rhs) {
        std::vector<std::vector<sym>> next;
        for (const auto& v : variants) {
          auto with = v;
          with.push_back(s);
          next.push_back(std::move(with));
          if (!s.term && nullable.count(s.id))
            next.push_back(v);
        }
        variants = std::move(next);
      }
      for (auto& v : variants)
        if (!v.empty())
          expanded.emplace(lhs, std::move(v));
    }

    // UNIT: close over chains A -> B.
    std::map<int, std::set<int>> unit_reach;  // A -> {B : A =>* B by unit steps}
    for (const auto& [lhs, rhs] : expanded)
      unit_reach[lhs].insert(lhs);
    unit_reach[start_].insert(start_);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [lhs, rhs] : expanded) {
        if (rhs.size() != 1 || rhs[0].term)
          continue;
        for (auto& [a, reach] : unit_reach) {
          if (reach.count(lhs) && !reach.count(rhs[0].id)) {
            reach.insert(rhs[0].id);
            changed = true;
          }
        }
      }
    }

    for (const auto& [lhs, rhs] : expanded) {
      if (rhs.size() == 1 && !rhs[0].term)
        continue;  // unit production, replaced by the closure
      for (const auto& [a, reach] : unit_reach) {
        if (!reach.count(lhs))
          continue;
        if (rhs.size() == 1)
          term_rules_[rhs[0].id].insert(a);
        else
          bin_rules_[{rhs[0].id, rhs[1].id}].insert(a);
      }
    }
  }

  bool accepts(const word& w) const {
    if (w.alpha() != terminals_)
      throw std::invalid_argument("cnf_grammar::accepts: wrong alphabet");
    std::size_t n = w.size();
    if (n == 0)
      return accepts_empty_;
    // table[i][len-1] = set of nonterminals deriving w[i, i+len)
    std::vector<std::vector<std::set<int>>> table(n, std::vector<std::set<int>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      auto it = term_rules_.find(w.letter(i));
      if (it != term_rules_.end())
        table[i][0] = it->second;
    }
    for (std::size_t len = 2; len <= n; ++len)
      for (std::size_t i = 0; i + len <= n; ++i)
        for (std::size_t k = 1; k < len; ++k)
          for (int b : table[i][k - 1])
            for (int c : table[i + k][len - k - 1]) {
              auto it = bin_rules_.find({b, c});
              if (it != bin_rules_.end())
                table[i][len - 1].insert(it->second.begin(), it->second.end());
            }
    return table[0][n - 1].count(start_) != 0;
  }

private:
  alphabet terminals_;
  int start_ = 0;
  bool accepts_empty_ = false;
  std::map<int, std::set<int>> term_rules_;            // letter -> {A : A -> letter}
  std::map<std::pair<int, int>, std::set<int>> bin_rules_;  // (B,C) -> {A : A -> B C}
};

}  // namespace opow

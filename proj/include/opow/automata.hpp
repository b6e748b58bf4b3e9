// Pushdown automata with lambda-transitions, bounded membership simulation,
// counter-shape validation, JSON/DOT serialization, and the concrete machines
// for the catalog languages that have one.

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "opow/language.hpp"
#include "opow/words.hpp"

namespace opow {

// Expected discipline of the reachable stack contents; checked dynamically
// during simulation, never assumed.
struct counter_shape {
  enum class kind_t { finite, one_counter, iterated };
  kind_t kind = kind_t::finite;
  std::size_t levels = 0;  // for iterated

  bool operator==(const counter_shape& o) const {
    return kind == o.kind && levels == o.levels;
  }
};

struct pda {
  std::vector<std::string> states;
  alphabet input = digits(1);
  alphabet stack = digits(1);  // bottom symbol included
  std::string bottom;
  std::string initial;
  std::vector<std::string> finals;
  struct transition {
    std::string from;
    std::optional<std::string> read;  // nullopt = lambda move
    std::string top;
    std::string to;
    std::vector<std::string> push;  // replaces top; leftmost ends up on top
    bool operator==(const transition& o) const {
      return from == o.from && read == o.read && top == o.top && to == o.to && push == o.push;
    }
  };
  std::vector<transition> transitions;
  counter_shape shape;

  bool operator==(const pda& o) const {
    return states == o.states && input == o.input && stack == o.stack && bottom == o.bottom &&
           initial == o.initial && finals == o.finals && transitions == o.transitions &&
           shape == o.shape;
  }
};

// Structural checks: names resolve, the bottom symbol is never pushed except
// as the rightmost symbol replacing the bottom itself.
inline void validate_pda(const pda& m) {
  auto has_state = [&](const std::string& s) {
    return std::find(m.states.begin(), m.states.end(), s) != m.states.end();
  };
  if (!has_state(m.initial))
    throw std::invalid_argument("pda: unknown initial state");
  for (const auto& f : m.finals)
    if (!has_state(f))
      throw std::invalid_argument("pda: unknown final state '" + f + "'");
  if (!m.stack.index_of(m.bottom))
    throw std::invalid_argument("pda: bottom symbol not in stack alphabet");
  for (const auto& t : m.transitions) {
    if (!has_state(t.from) || !has_state(t.to))
      throw std::invalid_argument("pda: transition uses unknown state");
    if (t.read && !m.input.index_of(*t.read))
      throw std::invalid_argument("pda: transition reads unknown symbol");
    if (!m.stack.index_of(t.top))
      throw std::invalid_argument("pda: transition pops unknown stack symbol");
    for (std::size_t i = 0; i < t.push.size(); ++i) {
      if (!m.stack.index_of(t.push[i]))
        throw std::invalid_argument("pda: transition pushes unknown stack symbol");
      if (t.push[i] == m.bottom && !(t.top == m.bottom && i + 1 == t.push.size()))
        throw std::invalid_argument("pda: bottom symbol pushed above the bottom");
    }
  }
}

struct configuration {
  std::string state;
  std::size_t position = 0;
  std::vector<std::string> stack;  // top first, bottom last

  bool operator==(const configuration& o) const {
    return state == o.state && position == o.position && stack == o.stack;
  }
};

// All successors of c via one lambda move or one move reading input at c.position.
inline std::vector<configuration> step(const pda& m, const configuration& c, const word& input) {
  std::vector<configuration> out;
  if (c.stack.empty())
    return out;
  const std::string& top = c.stack.front();
  for (const auto& t : m.transitions) {
    if (t.from != c.state || t.top != top)
      continue;
    bool reads = t.read.has_value();
    if (reads) {
      if (c.position >= input.size() || input.symbol_at(c.position) != *t.read)
        continue;
    }
    configuration n;
    n.state = t.to;
    n.position = c.position + (reads ? 1 : 0);
    n.stack = t.push;
    n.stack.insert(n.stack.end(), c.stack.begin() + 1, c.stack.end());
    out.push_back(std::move(n));
  }
  return out;
}

enum class verdict_kind { accepted, rejected_proven, rejected_at_bound };

struct membership_verdict {
  verdict_kind kind = verdict_kind::rejected_proven;
  std::vector<configuration> run;  // initial to accepting, when accepted
  std::size_t stack_bound = 0;
  std::size_t step_bound = 0;
  bool shape_ok = true;
  std::string shape_note;

  bool accepted() const { return kind == verdict_kind::accepted; }
};

inline std::size_t default_stack_bound(const pda& m, const word& w) {
  return (w.size() + 2) * m.states.size();
}
inline std::size_t default_step_bound(const pda& m, const word& w) {
  return default_stack_bound(m, w) * m.states.size() * (w.size() + 1);
}

namespace detail {

inline bool stack_matches_shape(const pda& m, const std::vector<std::string>& stack,
                                std::string* note) {
  if (stack.empty() || stack.back() != m.bottom) {
    if (note)
      *note = "stack without bottom symbol";
    return false;
  }
  switch (m.shape.kind) {
    case counter_shape::kind_t::finite:
      if (stack.size() != 1) {
        if (note)
          *note = "finite shape with nonempty stack";
        return false;
      }
      return true;
    case counter_shape::kind_t::one_counter: {
      if (m.stack.size() > 2) {
        if (note)
          *note = "one-counter shape with more than two stack symbols";
        return false;
      }
      for (std::size_t i = 0; i + 1 < stack.size(); ++i)
        if (stack[i] == m.bottom) {
          if (note)
            *note = "bottom symbol inside the stack";
          return false;
        }
      return true;
    }
    case counter_shape::kind_t::iterated: {
      // Contents must lie in z_{k-1}^* ... z_0^* Z0, reading top to bottom,
      // where z_i is stack symbol i+1 in alphabet order (bottom is symbol 0).
      long prev = static_cast<long>(m.stack.size());
      for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
        auto ix = m.stack.index_of(stack[i]);
        if (!ix || *ix == 0 || static_cast<long>(*ix) > prev) {
          if (note)
            *note = "stack not of iterated-counter form";
          return false;
        }
        prev = static_cast<long>(*ix);
      }
      return true;
    }
  }
  return true;
}

}  // namespace detail

inline membership_verdict accepts(const pda& m, const word& w, std::size_t stack_bound,
                                  std::size_t step_bound) {
  if (w.alpha() != m.input)
    throw std::invalid_argument("accepts: word over the wrong alphabet");
  membership_verdict verdict;
  verdict.stack_bound = stack_bound;
  verdict.step_bound = step_bound;

  std::set<std::string> final_set(m.finals.begin(), m.finals.end());
  auto key_of = [](const configuration& c) {
    std::string k = c.state;
    k += '\x01';
    k += std::to_string(c.position);
    for (const auto& s : c.stack) {
      k += '\x01';
      k += s;
    }
    return k;
  };

  configuration start{m.initial, 0, {m.bottom}};
  std::vector<configuration> pool{start};
  std::vector<std::size_t> parent{0};
  std::unordered_set<std::string> seen{key_of(start)};
  std::deque<std::size_t> frontier{0};
  bool discarded = false;
  std::size_t expansions = 0;

  auto audit_shape = [&](const configuration& c) {
    if (!verdict.shape_ok)
      return;
    std::string note;
    if (!detail::stack_matches_shape(m, c.stack, &note)) {
      verdict.shape_ok = false;
      verdict.shape_note = note;
    }
  };
  audit_shape(start);

  while (!frontier.empty()) {
    if (expansions >= step_bound) {
      discarded = true;
      break;
    }
    ++expansions;
    std::size_t ci = frontier.front();
    frontier.pop_front();
    configuration c = pool[ci];
    if (c.position == w.size() && final_set.count(c.state)) {
      verdict.kind = verdict_kind::accepted;
      std::vector<std::size_t> chain;
      for (std::size_t i = ci;; i = parent[i]) {
        chain.push_back(i);
        if (i == parent[i])
          break;
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        verdict.run.push_back(pool[*it]);
      return verdict;
    }
    for (configuration& n : step(m, c, w)) {
      if (n.stack.size() > stack_bound) {
        discarded = true;
        continue;
      }
      std::string k = key_of(n);
      if (!seen.insert(std::move(k)).second)
        continue;
      audit_shape(n);
      pool.push_back(std::move(n));
      parent.push_back(ci);
      frontier.push_back(pool.size() - 1);
    }
  }
  verdict.kind = discarded ? verdict_kind::rejected_at_bound : verdict_kind::rejected_proven;
  return verdict;
}

inline membership_verdict accepts(const pda& m, const word& w) {
  return accepts(m, w, default_stack_bound(m, w), default_step_bound(m, w));
}

struct enumeration {
  std::vector<word> accepted;
  std::vector<word> undecided;  // rejected_at_bound, reported rather than dropped
};

inline enumeration enumerate_accepted(const pda& m, std::size_t max_len) {
  enumeration out;
  for_each_word(m.input, max_len, [&](const word& w) {
    membership_verdict v = accepts(m, w);
    if (v.accepted())
      out.accepted.push_back(w);
    else if (v.kind == verdict_kind::rejected_at_bound)
      out.undecided.push_back(w);
  });
  return out;
}

// Wrap a machine as a language; undecided words are counted if a counter is
// supplied (they decide as false).
inline language pda_language(const pda& m, std::string name,
                             std::shared_ptr<std::size_t> at_bound_counter = nullptr) {
  return {std::move(name), m.input, [m, at_bound_counter](const word& w) {
            membership_verdict v = accepts(m, w);
            if (v.kind == verdict_kind::rejected_at_bound && at_bound_counter)
              ++*at_bound_counter;
            return v.accepted();
          }};
}

// --- concrete machines ------------------------------------------------------

// Deterministic real-time one-counter machine for the self-erasing words:
// every prefix has at least as many base letters as erasers, totals equal.
// In state "pos" the surplus equals the number of z's plus one, so top Z0
// there means surplus exactly one and an eraser returns to "zero".
inline pda automaton_l3(const alphabet& base, const std::string& eraser = "↢") {
  pda m;
  m.states = {"zero", "pos"};
  std::vector<std::string> in = base.symbols();
  in.push_back(eraser);
  m.input = alphabet(in);
  m.stack = alphabet({"Z0", "z"});
  m.bottom = "Z0";
  m.initial = "zero";
  m.finals = {"zero"};
  m.shape = {counter_shape::kind_t::one_counter, 0};
  for (const auto& a : base.symbols()) {
    m.transitions.push_back({"zero", a, "Z0", "pos", {"Z0"}});
    m.transitions.push_back({"pos", a, "Z0", "pos", {"z", "Z0"}});
    m.transitions.push_back({"pos", a, "z", "pos", {"z", "z"}});
  }
  m.transitions.push_back({"pos", eraser, "Z0", "zero", {"Z0"}});
  m.transitions.push_back({"pos", eraser, "z", "pos", {}});
  validate_pda(m);
  return m;
}

// One-counter machine for {u d v : u,v binary, |v| = 2|u| or 2|u|+1}: push
// two per letter of u, pop one per letter of v, and allow a single unpopped
// letter once the counter is back to zero.
inline pda automaton_d() {
  pda m;
  m.states = {"u", "v", "vx", "acc"};
  m.input = alphabet({"0", "1", "d"});
  m.stack = alphabet({"Z0", "z"});
  m.bottom = "Z0";
  m.initial = "u";
  m.finals = {"acc"};
  m.shape = {counter_shape::kind_t::one_counter, 0};
  for (const std::string b : {"0", "1"}) {
    m.transitions.push_back({"u", b, "Z0", "u", {"z", "z", "Z0"}});
    m.transitions.push_back({"u", b, "z", "u", {"z", "z", "z"}});
    m.transitions.push_back({"v", b, "z", "v", {}});
    m.transitions.push_back({"v", b, "Z0", "vx", {"Z0"}});
  }
  m.transitions.push_back({"u", "d", "Z0", "v", {"Z0"}});
  m.transitions.push_back({"u", "d", "z", "v", {"z"}});
  m.transitions.push_back({"v", std::nullopt, "Z0", "acc", {"Z0"}});
  m.transitions.push_back({"vx", std::nullopt, "Z0", "acc", {"Z0"}});
  validate_pda(m);
  return m;
}

// Two-state finite automaton for 0^{<w} 1.
inline pda automaton_p2() {
  pda m;
  m.states = {"s", "t"};
  m.input = alphabet({"0", "1"});
  m.stack = alphabet({"Z0"});
  m.bottom = "Z0";
  m.initial = "s";
  m.finals = {"t"};
  m.shape = {counter_shape::kind_t::finite, 0};
  m.transitions.push_back({"s", "0", "Z0", "s", {"Z0"}});
  m.transitions.push_back({"s", "1", "Z0", "t", {"Z0"}});
  validate_pda(m);
  return m;
}

// One-counter machine for the substitution image of 0^{<w} 1 under a -> a.D:
// blocks a u d v, counting inside each block as automaton_d does, where the
// extracted letters spell 0...01.
inline pda automaton_gw() {
  pda m;
  m.states = {"new", "u0", "v0", "uf", "vf", "acc"};
  m.input = alphabet({"0", "1", "d"});
  m.stack = alphabet({"Z0", "z"});
  m.bottom = "Z0";
  m.initial = "new";
  m.finals = {"acc"};
  m.shape = {counter_shape::kind_t::one_counter, 0};
  // block opener: 0 starts an inner block, 1 starts the final block
  m.transitions.push_back({"new", "0", "Z0", "u0", {"Z0"}});
  m.transitions.push_back({"new", "1", "Z0", "uf", {"Z0"}});
  for (const std::string b : {"0", "1"}) {
    m.transitions.push_back({"u0", b, "Z0", "u0", {"z", "z", "Z0"}});
    m.transitions.push_back({"u0", b, "z", "u0", {"z", "z", "z"}});
    m.transitions.push_back({"v0", b, "z", "v0", {}});
    m.transitions.push_back({"v0", b, "Z0", "new", {"Z0"}});  // the odd extra letter
    m.transitions.push_back({"uf", b, "Z0", "uf", {"z", "z", "Z0"}});
    m.transitions.push_back({"uf", b, "z", "uf", {"z", "z", "z"}});
    m.transitions.push_back({"vf", b, "z", "vf", {}});
    m.transitions.push_back({"vf", b, "Z0", "acc", {"Z0"}});
  }
  m.transitions.push_back({"u0", "d", "Z0", "v0", {"Z0"}});
  m.transitions.push_back({"u0", "d", "z", "v0", {"z"}});
  m.transitions.push_back({"uf", "d", "Z0", "vf", {"Z0"}});
  m.transitions.push_back({"uf", "d", "z", "vf", {"z"}});
  m.transitions.push_back({"v0", std::nullopt, "Z0", "new", {"Z0"}});
  m.transitions.push_back({"vf", std::nullopt, "Z0", "acc", {"Z0"}});
  validate_pda(m);
  return m;
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json pda_to_json(const pda& m) {
  nlohmann::json j;
  j["states"] = m.states;
  j["input"] = m.input.symbols();
  j["stack"] = m.stack.symbols();
  j["bottom"] = m.bottom;
  j["initial"] = m.initial;
  j["finals"] = m.finals;
  j["transitions"] = nlohmann::json::array();
  for (const auto& t : m.transitions) {
    nlohmann::json jt;
    jt["from"] = t.from;
    jt["read"] = t.read ? nlohmann::json(*t.read) : nlohmann::json(nullptr);
    jt["top"] = t.top;
    jt["to"] = t.to;
    jt["push"] = t.push;
    j["transitions"].push_back(std::move(jt));
  }
  switch (m.shape.kind) {
    case counter_shape::kind_t::finite:
      j["shape"] = "finite";
      break;
    case counter_shape::kind_t::one_counter:
      j["shape"] = "one-counter";
      break;
    case counter_shape::kind_t::iterated:
      j["shape"] = "iterated:" + std::to_string(m.shape.levels);
      break;
  }
  return j;
}

inline pda pda_from_json(const nlohmann::json& j) {
  auto require = [&](const char* field) -> const nlohmann::json& {
    auto it = j.find(field);
    if (it == j.end())
      throw std::invalid_argument(std::string("pda_from_json: missing field \"") + field + "\"");
    return *it;
  };
  pda m;
  m.states = require("states").get<std::vector<std::string>>();
  m.input = alphabet(require("input").get<std::vector<std::string>>());
  m.stack = alphabet(require("stack").get<std::vector<std::string>>());
  m.bottom = require("bottom").get<std::string>();
  m.initial = require("initial").get<std::string>();
  m.finals = require("finals").get<std::vector<std::string>>();
  for (const auto& jt : require("transitions")) {
    pda::transition t;
    t.from = jt.at("from").get<std::string>();
    t.read = jt.at("read").is_null() ? std::nullopt
                                     : std::optional<std::string>(jt.at("read").get<std::string>());
    t.top = jt.at("top").get<std::string>();
    t.to = jt.at("to").get<std::string>();
    t.push = jt.at("push").get<std::vector<std::string>>();
    m.transitions.push_back(std::move(t));
  }
  std::string shape = j.value("shape", "finite");
  if (shape == "finite")
    m.shape = {counter_shape::kind_t::finite, 0};
  else if (shape == "one-counter")
    m.shape = {counter_shape::kind_t::one_counter, 0};
  else if (shape.rfind("iterated:", 0) == 0)
    m.shape = {counter_shape::kind_t::iterated, std::stoul(shape.substr(9))};
  else
    throw std::invalid_argument("pda_from_json: unknown shape \"" + shape + "\"");
  validate_pda(m);
  return m;
}

inline std::string pda_to_dot(const pda& m) {
  std::string out = "digraph pda {\n  rankdir=LR;\n  node [shape=circle];\n";
  std::set<std::string> finals(m.finals.begin(), m.finals.end());
  for (const auto& s : m.states) {
    out += "  \"" + s + "\"";
    if (finals.count(s))
      out += " [shape=doublecircle]";
    out += ";\n";
  }
  out += "  \"\" [shape=none, label=\"\"];\n  \"\" -> \"" + m.initial + "\";\n";
  for (const auto& t : m.transitions) {
    std::string push;
    if (t.push.empty())
      push = "@";
    for (std::size_t i = 0; i < t.push.size(); ++i) {
      if (i)
        push += " ";
      push += t.push[i];
    }
    out += "  \"" + t.from + "\" -> \"" + t.to + "\" [label=\"" +
           (t.read ? *t.read : std::string("@")) + ", " + t.top + " / " + push + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace opow

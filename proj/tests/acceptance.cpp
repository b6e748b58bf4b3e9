// Acceptance suite: one criterion per function, one pass/fail line each.
// Every tolerance and range is pinned here; the exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "opow/automata.hpp"
#include "opow/catalog.hpp"
#include "opow/cli.hpp"
#include "opow/mupi.hpp"
#include "opow/opower.hpp"
#include "opow/oracle.hpp"

using namespace opow;

namespace {

struct outcome {
  bool pass = true;
  std::string note;
  std::string first_failure;

  void fail(const std::string& why) {
    pass = false;
    if (first_failure.empty())
      first_failure = why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond)
      fail(why);
  }
};

// --- criterion 1: eraser calculus ------------------------------------------

outcome eraser_calculus() {
  outcome r;
  std::size_t examined = 0;
  for (const alphabet& base : {chars("a"), chars("ab")}) {
    eraser_alphabet ea = eraser_alphabet::single(base);
    std::uint8_t er = ea.eraser(1);
    for_each_word(ea.full, 8, [&](const word& w) {
      ++examined;
      int surplus = 0;
      bool dips = false;
      for (std::uint8_t l : w.letters()) {
        surplus += (l == er) ? -1 : 1;
        dips = dips || surplus < 0;
      }
      erase_outcome o = erase_strict(ea, w);
      if (o.defined() == dips)
        r.fail("strict definedness differs from the prefix-surplus test on " + format_word(w));
      if (o.defined() && *o.value != erase_total(ea, w))
        r.fail("strict and total evaluations differ on " + format_word(w));
      word base_ext = erase_total(ea, w);
      for (std::uint8_t a = 0; a < base.size(); ++a)
        if (erase_total(ea, append(w, a)) != append(base_ext, a))
          r.fail("appending a base letter does not commute on " + format_word(w));
    });
  }
  r.note = std::to_string(examined) + " words";

  eraser_alphabet ea = eraser_alphabet::single(chars("ab"));
  auto ew = [&](const char* s) { return parse_word(ea.full, s); };
  auto lim = erase_lasso(ea, lasso_word(ew("@"), ew("a↢")));
  r.expect(std::holds_alternative<word>(lim) && std::get<word>(lim).empty_word(),
           "(a<-)^w should evaluate to the empty word");
  lim = erase_lasso(ea, lasso_word(ew("@"), ew("a↢↢")));
  r.expect(std::holds_alternative<word>(lim) && std::get<word>(lim).empty_word(),
           "(a<-<-)^w should evaluate to the empty word");
  lim = erase_lasso(ea, lasso_word(ew("@"), ew("ab↢")));
  r.expect(std::holds_alternative<lasso_word>(lim) &&
               same_omega_word(std::get<lasso_word>(lim),
                               lasso_word(word::empty(ea.base), parse_word(ea.base, "a"))),
           "(ab<-)^w should evaluate to a^w");
  lim = erase_lasso(ea, lasso_word(ew("bb"), ew("↢a")));
  r.expect(std::holds_alternative<word>(lim) &&
               format_word(std::get<word>(lim)) == "b",
           "bb(<-a)^w should evaluate to b");
  return r;
}

// --- criterion 2: l3 three-way agreement -------------------------------------

outcome l3_agreement() {
  outcome r;
  std::size_t examined = 0;
  auto run = [&](const alphabet& base, std::size_t max_len) {
    eraser_alphabet ea = eraser_alphabet::single(base);
    language dyck = lang_l3(ea);
    language cyk = lang_l3_cyk(ea);
    pda machine = automaton_l3(base);
    for_each_word(ea.full, max_len, [&](const word& w) {
      ++examined;
      bool a = dyck.decide(w);
      bool b = cyk.decide(w);
      membership_verdict v = accepts(machine, w);
      if (v.kind == verdict_kind::rejected_at_bound)
        r.fail("machine undecided at default bounds on " + format_word(w));
      if (a != b || a != v.accepted())
        r.fail("three-way disagreement on " + format_word(w));
    });
  };
  run(chars("a"), 10);
  run(chars("ab"), 8);
  r.note = std::to_string(examined) + " words";
  return r;
}

// --- criterion 3: machines match their definitional predicates ---------------

outcome machine_agreement() {
  outcome r;
  std::size_t examined = 0;
  auto run = [&](const pda& m, const language& lang, std::size_t max_len) {
    for_each_word(m.input, max_len, [&](const word& w) {
      ++examined;
      membership_verdict v = accepts(m, w);
      if (v.kind == verdict_kind::rejected_at_bound)
        r.fail(lang.name + " machine undecided on " + format_word(w));
      if (v.accepted() != lang.decide(w))
        r.fail(lang.name + " machine disagrees on " + format_word(w));
      if (!v.shape_ok)
        r.fail(lang.name + " machine broke its counter shape: " + v.shape_note);
    });
  };
  run(automaton_d(), lang_d(), 10);
  run(automaton_p2(), lang_p2(), 12);
  run(automaton_gw(), lang_gw(), 8);
  r.note = std::to_string(examined) + " words";
  return r;
}

// --- criterion 4: substitution characterization -------------------------------

outcome substitution_characterization() {
  outcome r;
  language p2 = lang_p2();
  language h = substitute_l3(p2);
  language blocks = lang_l3(digits(2));
  std::size_t examined = 0;
  for_each_word(h.alpha, 8, [&](const word& w) {
    ++examined;
    if (h.decide(w) != brute_substitution_member(w, blocks, {0, 1}, p2))
      r.fail("substitution disagrees with brute decomposition on " + format_word(w));
  });
  for_each_word(digits(2), 8, [&](const word& w) {
    if (h.decide(word(h.alpha, w.letters())) != p2.decide(w))
      r.fail("eraser-free embedding broken on " + format_word(w));
  });
  r.note = std::to_string(examined) + " words";
  return r;
}

// --- criterion 5: omega-power fixtures ----------------------------------------

outcome omega_power_fixtures() {
  outcome r;
  alphabet bin = digits(2);
  auto bl = [&](const char* u, const char* v) {
    return lasso_word(parse_word(bin, u), parse_word(bin, v));
  };

  r.expect(omega_member_bounded(lang_p1(), bl("@", "0"), 1).has_value(),
           "0^w should lie in the omega-power of {0}");
  language p2 = lang_p2();
  for (std::size_t k = 0; k <= 4; ++k) {
    word period(bin, [&] {
      std::vector<std::uint8_t> ls(k, 0);
      ls.push_back(1);
      return ls;
    }());
    r.expect(omega_member_bounded(p2, lasso_word(word::empty(bin), period), 8).has_value(),
             "(0^k 1)^w should lie in the omega-power of 0^*1, k=" + std::to_string(k));
  }

  language s1 = lang_s1();
  lasso_word ten = bl("1", "0");
  std::size_t s1_checked = 0;
  for (const auto& u : enumerate_words(bin, 3))
    for (const auto& v : enumerate_words(bin, 3)) {
      if (v.empty_word())
        continue;
      ++s1_checked;
      lasso_word x(u, v);
      bool member = omega_member_bounded(s1, x, 8).has_value();
      bool is_ten = same_omega_word(x, ten);
      if (member == is_ten)
        r.fail("s1 omega-power wrong on " + format_lasso(x));
    }

  language a = lang_clopen_a();
  std::size_t a_checked = 0;
  for (const auto& u : enumerate_words(bin, 5))
    for (const auto& v : enumerate_words(bin, 6)) {
      if (v.empty_word() || u.size() + v.size() > 6)
        continue;
      ++a_checked;
      lasso_word x(u, v);
      bool member = omega_member_escalating(a, x, 8).witness.has_value();
      bool starts_10 = x.letter(0) == 1 && x.letter(1) == 0;
      if (member == starts_10)
        r.fail("clopen omega-power wrong on " + format_lasso(x));
    }
  r.note = std::to_string(s1_checked) + " s1 lassos, " + std::to_string(a_checked) +
           " clopen lassos";
  return r;
}

// --- criterion 6: transition-system combinatorics -----------------------------

outcome mupi_combinatorics() {
  outcome r;
  for (std::uint64_t n = 0; n < 10000; ++n)
    if (state_index(state_pair_at(n)) != n) {
      r.fail("state enumeration round trip fails at " + std::to_string(n));
      break;
    }
  r.expect(m_index(0) == 0 && m_index(1) == 4 && m_index(2) == 20, "M_0, M_1, M_2 milestones");
  for (std::size_t j = 0; j <= 4; ++j) {
    state_pair q = state_pair_at(m_index(j));
    bool all_ones = q.left.size() == j && q.right.size() == j;
    for (std::size_t i = 0; i < j && all_ones; ++i)
      all_ones = q.left.letter(i) == 1 && q.right.letter(i) == 1;
    r.expect(all_ones, "the M_j-th state should be the last pair of length " + std::to_string(j));
  }

  auto witness = brute_pi_witness(12, tree_full());
  r.expect(witness.has_value() && format_word(witness->first) == "122223" &&
               witness->second.reassemble() == witness->first,
           "pinned minimal pi member");

  tree_predicate full = tree_full();
  std::size_t examined = 0, pi_count = 0, mu_count = 0;
  for_each_word(digits(4), 12, [&](const word& w) {
    ++examined;
    bool m0 = mu0_member(w);
    bool m1 = mu1_member(w);
    auto parse = parse_pi(w, full);
    if (a_member(w, full) != (m0 || m1 || parse.has_value()))
      r.fail("a-membership is not the definitional union on " + format_word(w));
    if (parse) {
      ++pi_count;
      if (parse->reassemble() != w)
        r.fail("pi parse does not reassemble " + format_word(w));
    }
    if (m0 || m1) {
      ++mu_count;
      auto mp = m0 ? parse_mu0(w) : parse_mu1(w);
      if (!mp || mp->reassemble() != w)
        r.fail("mu parse does not reassemble " + format_word(w));
    }
  });
  r.expect(pi_count > 0 && mu_count > 0, "the audit should see members of both pieces");

  // words sitting on a K_{N,j} prefix never fall in mu
  for (std::size_t j = 0; j <= 2; ++j)
    for (std::uint64_t N = 0; N <= std::min<std::uint64_t>(2, m_index(j)); ++N) {
      std::vector<std::uint8_t> buf;
      auto dfs = [&](auto&& self) -> void {
        word w(digits(4), buf);
        if (!k_prefix_member(w, N, j))
          return;
        if (mu0_member(w) || mu1_member(w))
          r.fail("a K-prefix lies in mu: " + format_word(w));
        if (buf.size() == 12)
          return;
        for (std::uint8_t l = 0; l < 4; ++l) {
          buf.push_back(l);
          self(self);
          buf.pop_back();
        }
      };
      dfs(dfs);
    }
  r.note = std::to_string(examined) + " words audited, " + std::to_string(pi_count) +
           " in pi, " + std::to_string(mu_count) + " in mu";
  return r;
}

// --- criterion 7: strictness witnesses ----------------------------------------

outcome strictness_witnesses() {
  outcome r;
  eraser_alphabet e2 = eraser_alphabet::indexed(chars("a"), 2);
  bool separating = false;
  std::size_t examined = 0;
  for_each_word(e2.full, 8, [&](const word& w) {
    ++examined;
    bool t1 = erases_to_empty(e2, w, 1);
    bool t2 = erases_to_empty(e2, w, 2);
    if (t1 && !t2)
      r.fail("one-pass language not inside the two-pass language on " + format_word(w));
    separating = separating || (t2 && !t1);
  });
  r.expect(separating, "a word separating the pass languages should exist");

  language s2 = lang_s2();
  language e = lang_e();
  std::function<bool(const word&, std::size_t)> estar_brute = [&](const word& w,
                                                                  std::size_t from) -> bool {
    if (from == w.size())
      return true;
    for (std::size_t j = from + 1; j <= w.size(); ++j)
      if (e.decide(w.slice(from, j)) && estar_brute(w, j))
        return true;
    return false;
  };
  auto s2_brute = [&](const word& w) {
    if (e.decide(w))
      return true;
    if (w.empty_word() || w.letter(w.size() - 1) != 1)
      return false;
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.letter(i) == 1)
        ones.push_back(i);
    for (std::size_t mask = 1; mask < (std::size_t{1} << ones.size()); ++mask) {
      std::vector<std::size_t> cuts;
      for (std::size_t k = 0; k < ones.size(); ++k)
        if (mask & (std::size_t{1} << k))
          cuts.push_back(ones[k]);
      if (cuts.back() != w.size() - 1)
        continue;
      if (cuts.size() == 1 && cuts[0] == 0)
        continue;
      bool ok = true;
      std::size_t from = 0;
      for (std::size_t c : cuts) {
        if (!estar_brute(w.slice(from, c), 0)) {
          ok = false;
          break;
        }
        from = c + 1;
      }
      if (ok)
        return true;
    }
    return false;
  };
  for_each_word(digits(3), 8, [&](const word& w) {
    if (s2.decide(w) != s2_brute(w))
      r.fail("s2 differs from the brute split search on " + format_word(w));
  });
  r.note = std::to_string(examined) + " eraser words";
  return r;
}

// --- criterion 8: serialization ------------------------------------------------

outcome serialization() {
  outcome r;
  std::vector<pda> machines = {automaton_l3(chars("a")), automaton_l3(chars("ab")),
                               automaton_d(), automaton_p2(), automaton_gw()};
  for (const pda& m : machines) {
    std::string j1 = pda_to_json(m).dump();
    pda back = pda_from_json(nlohmann::json::parse(j1));
    r.expect(back == m, "json import does not invert export");
    r.expect(pda_to_json(back).dump() == j1, "json round trip is not bit-exact");
    r.expect(pda_to_dot(back) == pda_to_dot(m), "dot output changes across the round trip");
  }
  for (auto args : std::vector<std::vector<std::string>>{
           {"member", "p2", "0001", "--json"},
           {"omega-member", "--lang", "s1", "--lasso", "1:0", "--bound", "8", "--json"},
           {"enumerate", "l3", "--max-len", "4", "--json", "--ascii"},
           {"crosscheck", "p1", "p2", "--max-len", "4", "--json"},
           {"construct", "automaton:gw", "--json"},
           {"mupi", "pi-member", "122223", "--json"},
           {"catalog", "list", "--json"},
       }) {
    std::ostringstream out, err;
    int status = opow::cli::run_cli(args, out, err);
    if (status == 1) {
      r.fail("cli returned a usage error for a --json query");
      continue;
    }
    try {
      nlohmann::json parsed = nlohmann::json::parse(out.str());
      r.expect(!parsed.empty(), "cli --json output is empty");
    } catch (const std::exception&) {
      r.fail("cli --json output does not parse");
    }
  }
  r.note = std::to_string(machines.size()) + " machines, 7 cli queries";
  return r;
}

}  // namespace

int main() {
  struct entry {
    const char* name;
    std::function<outcome()> run;
  };
  const std::vector<entry> criteria = {
      {"eraser calculus", eraser_calculus},
      {"l3 agreement", l3_agreement},
      {"machine/predicate agreement", machine_agreement},
      {"substitution characterization", substitution_characterization},
      {"omega-power fixtures", omega_power_fixtures},
      {"transition-system combinatorics", mupi_combinatorics},
      {"strictness witnesses", strictness_witnesses},
      {"serialization", serialization},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    outcome r = criteria[i].run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu (%s): %s  [%.1fs%s%s]\n", i + 1, criteria[i].name,
                r.pass ? "PASS" : "FAIL", secs, r.note.empty() ? "" : ", ",
                r.note.c_str());
    if (!r.pass) {
      std::printf("  first failure: %s\n", r.first_failure.c_str());
      ++failures;
    }
  }
  return failures;
}

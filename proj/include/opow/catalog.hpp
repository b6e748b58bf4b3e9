// Definitional membership predicates for the named languages, the L3-padding
// substitution, and the catalog registry used by the CLI.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opow/eraser.hpp"
#include "opow/grammar.hpp"
#include "opow/language.hpp"
#include "opow/opower.hpp"
#include "opow/words.hpp"

namespace opow {

// P1 = {0}.
inline language lang_p1() {
  return {"p1", digits(2), [](const word& w) { return w.size() == 1 && w.letter(0) == 0; }};
}

// P2 = 0^k 1, k >= 0.
inline language lang_p2() {
  return {"p2", digits(2), [](const word& w) {
            if (w.empty_word() || w.letter(w.size() - 1) != 1)
              return false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
              if (w.letter(i) != 0)
                return false;
            return true;
          }};
}

// S1 = {s : 0 is a prefix, or 1 0^k 1 is a prefix for some k}.
inline language lang_s1() {
  return {"s1", digits(2), [](const word& w) {
            if (w.empty_word())
              return false;
            if (w.letter(0) == 0)
              return true;
            for (std::size_t i = 1; i < w.size(); ++i) {
              if (w.letter(i) == 1)
                return true;  // prefix 1 0^{i-1} 1
            }
            return false;
          }};
}

// A = {s : 0 is a prefix or 11 is a prefix}; A^inf is everything not
// starting with 10.
inline language lang_clopen_a() {
  return {"clopenA", digits(2), [](const word& w) {
            if (w.empty_word())
              return false;
            if (w.letter(0) == 0)
              return true;
            return w.size() >= 2 && w.letter(1) == 1;
          }};
}

// L3 over base + one eraser: the words erasing to nothing, equivalently the
// Dyck condition "every prefix has #base >= #erasers and the totals agree".
inline language lang_l3(const eraser_alphabet& ea) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("lang_l3: expects a single-eraser alphabet");
  std::uint8_t er = ea.eraser(1);
  return {"l3", ea.full, [er](const word& w) {
            std::ptrdiff_t depth = 0;
            for (std::uint8_t l : w.letters()) {
              depth += (l == er) ? -1 : 1;
              if (depth < 0)
                return false;
            }
            return depth == 0;
          }};
}

inline language lang_l3(const alphabet& base) {
  return lang_l3(eraser_alphabet::single(base));
}

// Independent oracle for L3: CYK over the literal grammar.
inline language lang_l3_cyk(const eraser_alphabet& ea) {
  auto cnf = std::make_shared<cnf_grammar>(l3_grammar(ea));
  return {"l3-cyk", ea.full, [cnf](const word& w) { return cnf->accepts(w); }};
}

inline bool l3_cyk_member(const eraser_alphabet& ea, const word& w) {
  return cnf_grammar(l3_grammar(ea)).accepts(w);
}

// E = 0 together with the nonempty counted words: as many 2s as 1s, no
// prefix with an excess of 2s, and the demoted value of all but the last
// letter starts with a 1.
inline language lang_e() {
  return {"e", digits(3), [](const word& w) {
            if (w.size() == 1 && w.letter(0) == 0)
              return true;
            if (w.empty_word() || !demote_defined(w))
              return false;
            if (count_letter(w, "1") != count_letter(w, "2"))
              return false;
            word demoted = backspace_demote(w.prefix(w.size() - 1));
            return !demoted.empty_word() && demoted.letter(0) == 1;
          }};
}

// S2 = E together with the words c_0 1 c_1 1 ... c_k 1 where each c_j is a
// concatenation of E-words and a lone block must be nonempty.
inline language lang_s2() {
  language e = lang_e();
  return {"s2", digits(3), [e](const word& w) {
            if (e.decide(w))
              return true;
            if (w.empty_word())
              return false;
            std::size_t n = w.size();
            // estar[i][j]: w[i,j) is a concatenation of E-words
            std::vector<std::vector<bool>> estar(n + 1, std::vector<bool>(n + 1, false));
            for (std::size_t i = 0; i <= n; ++i) {
              estar[i][i] = true;
              for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t k = i; k < j && !estar[i][j]; ++k)
                  if (estar[i][k] && e.decide(w.slice(k, j)))
                    estar[i][j] = true;
            }
            // one[i]: w[0,i) is a single block c_0 1; more[i]: two or more blocks
            std::vector<bool> one(n + 1, false), more(n + 1, false);
            for (std::size_t i = 1; i <= n; ++i) {
              if (w.letter(i - 1) != 1)
                continue;
              if (estar[0][i - 1])
                one[i] = true;
              for (std::size_t m = 1; m < i; ++m)
                if ((one[m] || more[m]) && estar[m][i - 1]) {
                  more[i] = true;
                  break;
                }
            }
            return (one[n] && n >= 2) || more[n];
          }};
}

// D = {u d v : u, v binary, |v| = 2|u| or |v| = 2|u|+1}.
inline language lang_d() {
  return {"d", alphabet({"0", "1", "d"}), [](const word& w) {
            std::optional<std::size_t> dpos;
            for (std::size_t i = 0; i < w.size(); ++i)
              if (w.letter(i) == 2) {
                if (dpos)
                  return false;
                dpos = i;
              }
            if (!dpos)
              return false;
            std::size_t u = *dpos, v = w.size() - u - 1;
            return v == 2 * u || v == 2 * u + 1;
          }};
}

// g(W) for g(a) = a.D and W = 0^k 1: blocks a_i (u_i d v_i) whose extracted
// letters a_1 ... a_n spell 0...01.
inline language lang_gw() {
  language d = lang_d();
  return {"gw", alphabet({"0", "1", "d"}), [d](const word& w) {
            std::size_t n = w.size();
            std::vector<bool> zero_blocks(n + 1, false);  // prefix = blocks extracting only 0s
            zero_blocks[0] = true;
            for (std::size_t i = 0; i < n; ++i) {
              if (!zero_blocks[i])
                continue;
              if (w.letter(i) == 1 && d.decide(w.slice(i + 1, n)))
                return true;  // final block extracts the 1
              if (w.letter(i) != 0)
                continue;
              for (std::size_t j = i + 2; j <= n; ++j)
                if (!zero_blocks[j] && d.decide(w.slice(i + 1, j)))
                  zero_blocks[j] = true;
            }
            return false;
          }};
}

// The substitution a -> L3 a applied to L: member words are the strict-eval
// defined words that are empty or end in a surviving letter, whose residue
// lies in L.  A brute-force decomposition oracle guards this characterization
// in the tests.
inline language substitute_l3(const language& L, const std::string& eraser = "↢") {
  eraser_alphabet ea = eraser_alphabet::single(L.alpha, eraser);
  return {"h(" + L.name + ")", ea.full, [ea, L](const word& w) {
            erase_outcome o = erase_strict(ea, w);
            if (!o.defined())
              return false;
            if (!w.empty_word()) {
              std::vector<std::size_t> alive = surviving_positions(ea, w);
              if (alive.empty() || alive.back() != w.size() - 1)
                return false;
            }
            return L.decide(*o.value);
          }};
}

// P_1 and P_2 as above; P_{n+1} applies the L3 substitution with a fresh
// eraser, the newest eraser being the one evaluated first.
inline language lang_pn(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("lang_pn: level must be >= 1");
  if (n == 1)
    return lang_p1();
  if (n == 2)
    return lang_p2();
  std::size_t k = n - 2;  // number of erasers
  eraser_alphabet ea = eraser_alphabet::indexed(digits(2), k);
  language base = lang_p2();
  return {"pn:" + std::to_string(n), ea.full, [ea, k, base](const word& w) {
            word cur = w;
            for (std::size_t level = 1; level <= k; ++level) {
              std::uint8_t er = ea.eraser(level);
              if (!cur.empty_word()) {
                // the last letter must survive this pass
                erase_outcome probe = backspace_pass(cur, er, true);
                if (!probe.defined())
                  return false;
                if (probe.value->empty_word() ||
                    probe.value->letter(probe.value->size() - 1) != cur.letter(cur.size() - 1) ||
                    cur.letter(cur.size() - 1) == er)
                  return false;
              }
              cur = *backspace_pass(cur, er, true).value;
            }
            return base.decide(word(digits(2), cur.letters()));
          }};
}

// Union over k of the coded fully-erasable words: decode alpha beta^j alpha
// segments into indexed erasers and require the passes to empty the word.
inline language lang_script_l() {
  alphabet base = digits(2);
  return {"scriptL", with_ab(base), [base](const word& w) {
            decode_outcome d = decode_eraser_ab(base, w);
            if (!d.ok())
              return false;
            eraser_alphabet ea = eraser_alphabet::indexed(base, d.max_index);
            return erases_to_empty(ea, *d.value, d.max_index);
          }};
}

// The scriptL substitution applied to P2: blocks c_i a_i with c_i in scriptL,
// a_i a digit, and the extracted digits spelling 0...01.
inline language lang_hp2() {
  language sl = lang_script_l();
  return {"hp2", sl.alpha, [sl](const word& w) {
            std::size_t n = w.size();
            auto is_digit = [&](std::size_t i) { return w.letter(i) <= 1; };
            std::vector<bool> zeros(n + 1, false);  // prefix = blocks extracting only 0s
            zeros[0] = true;
            for (std::size_t i = 0; i < n; ++i) {
              if (!zeros[i])
                continue;
              for (std::size_t j = i; j < n; ++j) {
                if (!is_digit(j))
                  continue;
                if (!sl.decide(w.slice(i, j)))
                  continue;
                if (w.letter(j) == 1 && j + 1 == n)
                  return true;
                if (w.letter(j) == 0 && !zeros[j + 1])
                  zeros[j + 1] = true;
              }
            }
            return false;
          }};
}

// --- registry ----------------------------------------------------------------

struct catalog_entry {
  std::string name;
  language lang;
  std::string about;
};

inline const std::vector<catalog_entry>& catalog_entries() {
  static const std::vector<catalog_entry> entries = [] {
    std::vector<catalog_entry> v;
    v.push_back({"p1", lang_p1(), "the singleton {0}"});
    v.push_back({"p2", lang_p2(), "0^k 1 with k >= 0"});
    v.push_back({"s1", lang_s1(), "words starting 0 or 1 0^k 1"});
    v.push_back({"s2", lang_s2(), "E-star blocks chained by 1s, or an E-word"});
    v.push_back({"e", lang_e(), "counted demoting-backspace words, plus 0"});
    v.push_back({"l3", lang_l3(chars("ab")), "self-erasing eraser words over {a,b}"});
    v.push_back({"d", lang_d(), "u d v with |v| = 2|u| or 2|u|+1"});
    v.push_back({"gw", lang_gw(), "blocks a.D with extracted word in 0^*1"});
    v.push_back({"clopenA", lang_clopen_a(), "words starting 0 or 11"});
    v.push_back({"scriptL", lang_script_l(), "coded iterated-eraser words (alpha beta^j alpha)"});
    v.push_back({"hp2", lang_hp2(), "scriptL-padded digits with extracted word in 0^*1"});
    return v;
  }();
  return entries;
}

inline std::optional<language> find_language(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name)
      return e.lang;
  if (name.rfind("pn:", 0) == 0) {
    std::size_t n = 0;
    for (char c : name.substr(3)) {
      if (c < '0' || c > '9')
        return std::nullopt;
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n >= 1 && n <= 12)
      return lang_pn(n);
  }
  return std::nullopt;
}

}  // namespace opow

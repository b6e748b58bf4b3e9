// Back-space (eraser) calculi over words.  An eraser letter deletes the
// previous surviving letter; the total variant treats an eraser hitting an
// empty buffer as a no-op, the strict variant makes the result undefined
// there.  Also: the omega-limit of eraser evaluation on lasso words, the
// ternary demoting back-space, iterated multi-eraser evaluation, and two
// finite-alphabet codings of indexed erasers.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "opow/words.hpp"

namespace opow {

// A base alphabet extended with eraser letters.  Eraser level 1 is the one
// evaluated first in multi-pass evaluation; the full alphabet lists base
// symbols first, then erasers in evaluation order.
struct eraser_alphabet {
  alphabet base;
  alphabet full;
  std::size_t eraser_count;

  static eraser_alphabet single(const alphabet& base, const std::string& eraser = "↢") {
    std::vector<std::string> s = base.symbols();
    if (base.index_of(eraser))
      throw std::invalid_argument("eraser_alphabet: eraser collides with base symbol");
    s.push_back(eraser);
    return {base, alphabet(std::move(s)), 1};
  }

  // Erasers named <stem>1 .. <stem>k, evaluated in that order.
  static eraser_alphabet indexed(const alphabet& base, std::size_t k,
                                 const std::string& stem = "↢") {
    if (k == 0)
      throw std::invalid_argument("eraser_alphabet: need at least one eraser");
    std::vector<std::string> s = base.symbols();
    for (std::size_t j = 1; j <= k; ++j) {
      std::string name = stem + std::to_string(j);
      if (base.index_of(name))
        throw std::invalid_argument("eraser_alphabet: eraser collides with base symbol");
      s.push_back(name);
    }
    return {base, alphabet(std::move(s)), k};
  }

  bool is_eraser(std::uint8_t letter) const { return letter >= base.size(); }

  // Letter index of the level-th eraser (1-based).
  std::uint8_t eraser(std::size_t level) const {
    if (level == 0 || level > eraser_count)
      throw std::invalid_argument("eraser_alphabet: bad eraser level");
    return static_cast<std::uint8_t>(base.size() + level - 1);
  }

  // Reinterpret a word without erasers over the base alphabet.
  word to_base(const word& w) const {
    for (std::uint8_t l : w.letters())
      if (is_eraser(l))
        throw std::invalid_argument("to_base: eraser letter remains");
    return word(base, w.letters());
  }

  word embed(const word& base_word) const {
    if (base_word.alpha() != base)
      throw std::invalid_argument("embed: not a base word");
    return word(full, base_word.letters());
  }
};

// Outcome of a strict evaluation pass: either the residue, or the position
// of the eraser that met an empty buffer.
struct erase_outcome {
  std::optional<word> value;
  std::size_t undefined_at = 0;
  bool defined() const { return value.has_value(); }
};

// One left-to-right pass evaluating a single letter as the eraser; all other
// letters are buffered.  The result stays over w's alphabet.
inline erase_outcome backspace_pass(const word& w, std::uint8_t eraser_letter, bool strict) {
  std::vector<std::uint8_t> buf;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint8_t l = w.letter(i);
    if (l == eraser_letter) {
      if (!buf.empty())
        buf.pop_back();
      else if (strict)
        return {std::nullopt, i};
    } else {
      buf.push_back(l);
    }
  }
  return {word(w.alpha(), std::move(buf)), 0};
}

// x^<- with the total semantics (single eraser); result over the base alphabet.
inline word erase_total(const eraser_alphabet& ea, const word& w) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("erase_total: expects a single-eraser alphabet");
  if (w.alpha() != ea.full)
    throw std::invalid_argument("erase_total: wrong alphabet");
  return ea.to_base(*backspace_pass(w, ea.eraser(1), false).value);
}

// x^<- with the strict semantics; Defined values agree with erase_total.
inline erase_outcome erase_strict(const eraser_alphabet& ea, const word& w) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("erase_strict: expects a single-eraser alphabet");
  if (w.alpha() != ea.full)
    throw std::invalid_argument("erase_strict: wrong alphabet");
  erase_outcome o = backspace_pass(w, ea.eraser(1), true);
  if (!o.defined())
    return o;
  return {ea.to_base(*o.value), 0};
}

// Positions of base letters never deleted during evaluation; requires the
// strict evaluation to be defined.  Reading them in order gives the residue.
inline std::vector<std::size_t> surviving_positions(const eraser_alphabet& ea, const word& w) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("surviving_positions: expects a single-eraser alphabet");
  std::vector<std::size_t> stack;
  std::uint8_t e = ea.eraser(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letter(i) == e) {
      if (stack.empty())
        throw std::invalid_argument("surviving_positions: evaluation undefined at position " +
                                    std::to_string(i));
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  return stack;
}

// The omega-limit of the total evaluation along a lasso: either a finite
// residue or an ultimately periodic omega-word.
using erase_limit = std::variant<word, lasso_word>;

namespace detail {

// Behaviour of one period against a deep buffer: how many buffer letters it
// consumes (dig), and the letters it leaves behind (tail).
struct period_effect {
  std::size_t dig = 0;
  std::vector<std::uint8_t> tail;
};

inline period_effect analyze_period(const word& v, std::uint8_t eraser_letter) {
  period_effect pe;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint8_t l = v.letter(i);
    if (l == eraser_letter) {
      if (!pe.tail.empty())
        pe.tail.pop_back();
      else
        ++pe.dig;
    } else {
      pe.tail.push_back(l);
    }
  }
  return pe;
}

}  // namespace detail

inline erase_limit erase_lasso(const eraser_alphabet& ea, const lasso_word& x) {
  if (ea.eraser_count != 1)
    throw std::invalid_argument("erase_lasso: expects a single-eraser alphabet");
  if (x.alpha() != ea.full)
    throw std::invalid_argument("erase_lasso: wrong alphabet");
  std::uint8_t e = ea.eraser(1);
  const word& v = x.period();
  detail::period_effect pe = detail::analyze_period(v, e);
  std::ptrdiff_t net = static_cast<std::ptrdiff_t>(pe.tail.size()) -
                       static_cast<std::ptrdiff_t>(pe.dig);

  std::vector<std::uint8_t> buf = backspace_pass(x.head(), e, false).value->letters();
  auto run_period = [&](std::vector<std::uint8_t>& b, std::size_t* min_level) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::uint8_t l = v.letter(i);
      if (l == e) {
        if (!b.empty())
          b.pop_back();
      } else {
        b.push_back(l);
      }
      if (min_level && b.size() < *min_level)
        *min_level = b.size();
    }
  };

  if (net > 0) {
    // The buffer eventually outgrows the per-period dig; from then on the
    // floor below the dig is stable and the tail repeats.
    std::size_t guard = pe.dig + 2;
    while (buf.size() < pe.dig && guard--)
      run_period(buf, nullptr);
    if (buf.size() < pe.dig)
      throw std::logic_error("erase_lasso: growth bound violated");
    std::vector<std::uint8_t> stable(buf.begin(), buf.end() - pe.dig);
    std::vector<std::uint8_t> cycle(pe.tail.begin(), pe.tail.begin() + net);
    return lasso_word(word(ea.base, std::move(stable)), word(ea.base, std::move(cycle)));
  }

  // Non-growing case: buffers at period boundaries live in a finite set, so
  // the orbit cycles; the limit is the part never dipped into over a cycle.
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::vector<std::uint8_t>> boundary;
  std::vector<std::size_t> dip;  // per-period minimum level
  for (std::size_t k = 0; k < 100000; ++k) {
    std::string key(buf.begin(), buf.end());
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::size_t entry = it->second;
      std::size_t floor = buf.size();
      for (std::size_t i = entry; i < k; ++i)
        floor = std::min(floor, dip[i]);
      const auto& at_entry = boundary[entry];
      return word(ea.base,
                  std::vector<std::uint8_t>(at_entry.begin(), at_entry.begin() + floor));
    }
    seen.emplace(std::move(key), k);
    boundary.push_back(buf);
    std::size_t level = buf.size();
    run_period(buf, &level);
    dip.push_back(level);
  }
  throw std::logic_error("erase_lasso: no cycle found");
}

inline std::size_t count_letter(const word& w, std::string_view symbol) {
  auto ix = w.alpha().index_of(symbol);
  if (!ix)
    throw std::invalid_argument("count_letter: symbol not in alphabet");
  std::size_t n = 0;
  for (std::uint8_t l : w.letters())
    n += (l == *ix);
  return n;
}

// --- ternary demoting back-space -------------------------------------------
//
// Over {0,1,2}: a 0 or 1 appends itself, a 2 demotes the last 1 of the value
// so far to 0.  Defined exactly on words where no prefix has more 2s than 1s.

inline bool demote_defined(const word& s) {
  if (s.alpha() != digits(3))
    throw std::invalid_argument("demote_defined: expects the alphabet {0,1,2}");
  std::size_t ones = 0, twos = 0;
  for (std::uint8_t l : s.letters()) {
    if (l == 1)
      ++ones;
    else if (l == 2)
      ++twos;
    if (twos > ones)
      return false;
  }
  return true;
}

inline word backspace_demote(const word& s) {
  if (!demote_defined(s))
    throw std::invalid_argument("backspace_demote: a prefix has more 2s than 1s");
  std::vector<std::uint8_t> out;
  std::vector<std::size_t> one_positions;
  for (std::uint8_t l : s.letters()) {
    if (l == 2) {
      out[one_positions.back()] = 0;
      one_positions.pop_back();
    } else {
      if (l == 1)
        one_positions.push_back(out.size());
      out.push_back(l);
    }
  }
  return word(digits(2), std::move(out));
}

// --- iterated erasers -------------------------------------------------------
//
// A word over base + erasers 1..k is fully erasable when evaluating eraser 1
// strictly (it may delete base letters or higher erasers), then eraser 2 on
// the residue, and so on through eraser k, stays defined and ends empty.

inline bool erases_to_empty(const eraser_alphabet& ea, const word& w, std::size_t k) {
  if (k == 0 || k > ea.eraser_count)
    throw std::invalid_argument("erases_to_empty: bad pass count");
  if (w.alpha() != ea.full)
    throw std::invalid_argument("erases_to_empty: wrong alphabet");
  word cur = w;
  for (std::size_t level = 1; level <= k; ++level) {
    erase_outcome o = backspace_pass(cur, ea.eraser(level), true);
    if (!o.defined())
      return false;
    cur = *o.value;
  }
  return cur.empty_word();
}

// --- eraser codings over finite alphabets -----------------------------------

inline alphabet with_ab(const alphabet& base) {
  std::vector<std::string> s = base.symbols();
  s.push_back("α");
  s.push_back("β");
  return alphabet(std::move(s));
}

// Eraser j coded as alpha beta^j alpha.
inline word encode_eraser_ab(std::size_t j) {
  if (j == 0)
    throw std::invalid_argument("encode_eraser_ab: index must be >= 1");
  alphabet ab({"α", "β"});
  std::vector<std::uint8_t> ls;
  ls.push_back(0);
  ls.insert(ls.end(), j, 1);
  ls.push_back(0);
  return word(ab, std::move(ls));
}

// Eraser n coded as alpha B^n C^n D^n E^n beta.
inline word encode_eraser_runs(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("encode_eraser_runs: index must be >= 1");
  alphabet a({"α", "B", "C", "D", "E", "β"});
  std::vector<std::uint8_t> ls;
  ls.push_back(0);
  for (std::uint8_t run = 1; run <= 4; ++run)
    ls.insert(ls.end(), n, run);
  ls.push_back(5);
  return word(a, std::move(ls));
}

struct decode_outcome {
  std::optional<word> value;  // over base + erasers 1..max_index (>= 1)
  std::size_t max_index = 0;  // largest eraser index decoded
  std::size_t error_at = 0;   // where scanning failed, when !ok()
  bool ok() const { return value.has_value(); }
};

// Greedy left-to-right decode of alpha beta^j alpha segments (j >= 1) into
// indexed erasers; base letters pass through.  Unambiguous because alpha
// delimits every code on both sides.
inline decode_outcome decode_eraser_ab(const alphabet& base, const word& w) {
  alphabet full = with_ab(base);
  if (w.alpha() != full)
    throw std::invalid_argument("decode_eraser_ab: wrong alphabet");
  std::uint8_t al = static_cast<std::uint8_t>(base.size());
  std::uint8_t be = static_cast<std::uint8_t>(base.size() + 1);

  struct piece {
    bool is_eraser;
    std::size_t payload;  // letter index or eraser index
  };
  std::vector<piece> pieces;
  std::size_t max_j = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    std::uint8_t l = w.letter(i);
    if (l == be)
      return {std::nullopt, 0, i};
    if (l != al) {
      pieces.push_back({false, l});
      ++i;
      continue;
    }
    std::size_t start = i++;
    std::size_t j = 0;
    while (i < w.size() && w.letter(i) == be) {
      ++j;
      ++i;
    }
    if (j == 0 || i >= w.size() || w.letter(i) != al)
      return {std::nullopt, 0, start};
    ++i;
    pieces.push_back({true, j});
    max_j = std::max(max_j, j);
  }
  eraser_alphabet ea = eraser_alphabet::indexed(base, std::max<std::size_t>(max_j, 1));
  std::vector<std::uint8_t> ls;
  for (const piece& p : pieces)
    ls.push_back(p.is_eraser ? ea.eraser(p.payload) : static_cast<std::uint8_t>(p.payload));
  return {word(ea.full, std::move(ls)), std::max<std::size_t>(max_j, 1), 0};
}

}  // namespace opow

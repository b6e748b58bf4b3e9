// Core word types: finite alphabets, finite words, and ultimately periodic
// omega-words stored as lassos u.v^omega.  All values are immutable after
// construction and cheap to copy (alphabets are shared).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opow {

class alphabet {
public:
  explicit alphabet(std::vector<std::string> symbols)
      : symbols_(std::make_shared<const std::vector<std::string>>(std::move(symbols))) {
    if (symbols_->empty())
      throw std::invalid_argument("alphabet: no symbols");
    if (symbols_->size() > 255)
      throw std::invalid_argument("alphabet: too many symbols");
    for (std::size_t i = 0; i < symbols_->size(); ++i) {
      if ((*symbols_)[i].empty())
        throw std::invalid_argument("alphabet: empty symbol name");
      for (std::size_t k = i + 1; k < symbols_->size(); ++k)
        if ((*symbols_)[i] == (*symbols_)[k])
          throw std::invalid_argument("alphabet: duplicate symbol '" + (*symbols_)[i] + "'");
    }
  }

  std::size_t size() const { return symbols_->size(); }

  const std::string& symbol(std::size_t i) const { return symbols_->at(i); }

  const std::vector<std::string>& symbols() const { return *symbols_; }

  std::optional<std::uint8_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_->size(); ++i)
      if ((*symbols_)[i] == name)
        return static_cast<std::uint8_t>(i);
    return std::nullopt;
  }

  bool operator==(const alphabet& o) const {
    return symbols_ == o.symbols_ || *symbols_ == *o.symbols_;
  }
  bool operator!=(const alphabet& o) const { return !(*this == o); }

private:
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

// The alphabets {0}, {0,1}, {0,1,2}, ... with decimal digit names.
inline alphabet digits(std::size_t n) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i)
    s.push_back(std::to_string(i));
  return alphabet(std::move(s));
}

// One symbol per character of `cs`, e.g. chars("ab") = {a, b}.
inline alphabet chars(std::string_view cs) {
  std::vector<std::string> s;
  for (char c : cs)
    s.emplace_back(1, c);
  return alphabet(std::move(s));
}

class word {
public:
  word(alphabet a, std::vector<std::uint8_t> letters)
      : alpha_(std::move(a)), letters_(std::move(letters)) {
    for (std::uint8_t l : letters_)
      if (l >= alpha_.size())
        throw std::invalid_argument("word: letter out of alphabet");
  }

  static word empty(alphabet a) { return word(std::move(a), {}); }

  const alphabet& alpha() const { return alpha_; }
  std::size_t size() const { return letters_.size(); }
  bool empty_word() const { return letters_.empty(); }
  std::uint8_t letter(std::size_t i) const { return letters_.at(i); }
  const std::string& symbol_at(std::size_t i) const { return alpha_.symbol(letters_.at(i)); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  // w|n, the prefix of length n (n <= |w|).
  word prefix(std::size_t n) const {
    if (n > size())
      throw std::invalid_argument("word::prefix: length exceeds word");
    return word(alpha_, std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + n));
  }

  word slice(std::size_t b, std::size_t e) const {
    if (b > e || e > size())
      throw std::invalid_argument("word::slice: bad range");
    return word(alpha_, std::vector<std::uint8_t>(letters_.begin() + b, letters_.begin() + e));
  }

  bool is_prefix_of(const word& o) const {
    return size() <= o.size() &&
           std::equal(letters_.begin(), letters_.end(), o.letters_.begin());
  }

  bool operator==(const word& o) const {
    return alpha_ == o.alpha_ && letters_ == o.letters_;
  }
  bool operator!=(const word& o) const { return !(*this == o); }

private:
  alphabet alpha_;
  std::vector<std::uint8_t> letters_;
};

// Length-then-lexicographic order, the enumeration order used everywhere.
inline bool word_less(const word& a, const word& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a.letters() < b.letters();
}

inline word concat(const word& a, const word& b) {
  if (a.alpha() != b.alpha())
    throw std::invalid_argument("concat: alphabet mismatch");
  std::vector<std::uint8_t> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return word(a.alpha(), std::move(ls));
}

inline word append(const word& a, std::uint8_t letter) {
  std::vector<std::uint8_t> ls = a.letters();
  ls.push_back(letter);
  return word(a.alpha(), std::move(ls));
}

// An ultimately periodic omega-word u.v^omega.
class lasso_word {
public:
  lasso_word(word prefix, word period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (prefix_.alpha() != period_.alpha())
      throw std::invalid_argument("lasso_word: alphabet mismatch");
    if (period_.empty_word())
      throw std::invalid_argument("lasso_word: empty period");
  }

  const alphabet& alpha() const { return prefix_.alpha(); }
  const word& head() const { return prefix_; }
  const word& period() const { return period_; }

  std::uint8_t letter(std::size_t i) const {
    if (i < prefix_.size())
      return prefix_.letter(i);
    return period_.letter((i - prefix_.size()) % period_.size());
  }

  // The prefix of length n of u.v^omega.
  word unroll(std::size_t n) const {
    std::vector<std::uint8_t> ls;
    ls.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      ls.push_back(letter(i));
    return word(alpha(), std::move(ls));
  }

private:
  word prefix_;
  word period_;
};

// Whether two lassos denote the same omega-word.  Comparing prefixes of
// length |u_x| + |u_y| + 2 lcm(|v_x|, |v_y|) decides it.
inline bool same_omega_word(const lasso_word& x, const lasso_word& y) {
  if (x.alpha() != y.alpha())
    throw std::invalid_argument("same_omega_word: alphabet mismatch");
  std::size_t l = std::lcm(x.period().size(), y.period().size());
  std::size_t n = x.head().size() + y.head().size() + 2 * l;
  for (std::size_t i = 0; i < n; ++i)
    if (x.letter(i) != y.letter(i))
      return false;
  return true;
}

// Visit every word of length <= max_len in length-then-lex order.
// f may return void, or bool with false meaning "stop early".
template <class F>
void for_each_word(const alphabet& a, std::size_t max_len, F&& f) {
  auto visit = [&](const word& w) -> bool {
    if constexpr (std::is_void_v<decltype(f(w))>) {
      f(w);
      return true;
    } else {
      return f(w);
    }
  };
  if (!visit(word::empty(a)))
    return;
  std::vector<std::uint8_t> buf;
  for (std::size_t len = 1; len <= max_len; ++len) {
    buf.assign(len, 0);
    for (;;) {
      if (!visit(word(a, buf)))
        return;
      std::size_t i = len;
      while (i > 0 && buf[i - 1] + 1u == a.size())
        buf[--i] = 0;
      if (i == 0)
        break;
      ++buf[i - 1];
    }
  }
}

inline std::vector<word> enumerate_words(const alphabet& a, std::size_t max_len) {
  std::vector<word> out;
  for_each_word(a, max_len, [&](const word& w) { out.push_back(w); });
  return out;
}

// --- textual syntax -------------------------------------------------------
//
// The empty word is written "@".  Symbols are juxtaposed when every symbol
// of the alphabet is a single code point, and '.'-separated otherwise.
// A lasso is written "u:v".

namespace detail {

inline std::vector<std::string> split_codepoints(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && (static_cast<unsigned char>(s[j]) & 0xC0) == 0x80)
      ++j;
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool single_codepoint(std::string_view s) {
  return !s.empty() && split_codepoints(s).size() == 1;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(b, i - b));
      b = i + 1;
    }
  }
  return out;
}

}  // namespace detail

inline bool juxtaposable(const alphabet& a) {
  for (const auto& s : a.symbols())
    if (!detail::single_codepoint(s))
      return false;
  return true;
}

inline word parse_word(const alphabet& a, std::string_view text) {
  if (text == "@")
    return word::empty(a);
  std::vector<std::string> tokens;
  if (text.find('.') != std::string_view::npos)
    tokens = detail::split_on(text, '.');
  else if (juxtaposable(a))
    tokens = detail::split_codepoints(text);
  else if (a.index_of(text))
    tokens.emplace_back(text);
  else
    throw std::invalid_argument(
        "parse_word: alphabet has multi-character symbols, separate them with '.'");
  std::vector<std::uint8_t> ls;
  for (const auto& t : tokens) {
    auto ix = a.index_of(t);
    if (!ix)
      throw std::invalid_argument("parse_word: symbol '" + t + "' not in alphabet");
    ls.push_back(*ix);
  }
  return word(a, std::move(ls));
}

inline std::string format_word(const word& w) {
  if (w.empty_word())
    return "@";
  std::string out;
  bool juxta = juxtaposable(w.alpha());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !juxta)
      out += '.';
    out += w.symbol_at(i);
  }
  return out;
}

inline lasso_word parse_lasso(const alphabet& a, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("parse_lasso: expected \"u:v\"");
  return lasso_word(parse_word(a, text.substr(0, colon)),
                    parse_word(a, text.substr(colon + 1)));
}

inline std::string format_lasso(const lasso_word& x) {
  return format_word(x.head()) + ":" + format_word(x.period());
}

}  // namespace opow

#include <doctest.h>

#include "opow/grammar.hpp"

using namespace opow;

TEST_CASE("cnf compilation of a^n b^n, hand-checkable") {
  grammar g;
  g.nonterminals = {"S"};
  g.terminals = chars("ab");
  g.start = "S";
  g.productions.push_back({"S", {"a", "S", "b"}});
  g.productions.push_back({"S", {}});
  cnf_grammar cnf(g);
  alphabet ab = chars("ab");
  CHECK(cnf.accepts(word::empty(ab)));
  CHECK(cnf.accepts(parse_word(ab, "ab")));
  CHECK(cnf.accepts(parse_word(ab, "aaabbb")));
  CHECK(!cnf.accepts(parse_word(ab, "aab")));
  CHECK(!cnf.accepts(parse_word(ab, "ba")));
  CHECK(!cnf.accepts(parse_word(ab, "a")));
  // exhaustive against the counting definition
  for_each_word(ab, 8, [&](const word& w) {
    bool expect = w.size() % 2 == 0;
    for (std::size_t i = 0; expect && i < w.size(); ++i)
      expect = w.letter(i) == (i < w.size() / 2 ? 0 : 1);
    if (cnf.accepts(w) != expect)
      FAIL("a^n b^n mismatch on ", format_word(w));
  });
}

TEST_CASE("cnf handles unit chains and nullables") {
  grammar g;
  g.nonterminals = {"S", "A", "B"};
  g.terminals = chars("xy");
  g.start = "S";
  g.productions.push_back({"S", {"A"}});
  g.productions.push_back({"A", {"B"}});
  g.productions.push_back({"A", {"B", "A"}});
  g.productions.push_back({"B", {"x"}});
  g.productions.push_back({"B", {"y", "B"}});
  cnf_grammar cnf(g);
  alphabet xy = chars("xy");
  // B = y^k x, A = S = B+
  CHECK(cnf.accepts(parse_word(xy, "x")));
  CHECK(cnf.accepts(parse_word(xy, "yyx")));
  CHECK(cnf.accepts(parse_word(xy, "xyxx")));
  CHECK(!cnf.accepts(word::empty(xy)));
  CHECK(!cnf.accepts(parse_word(xy, "xy")));
  for_each_word(xy, 7, [&](const word& w) {
    bool expect = !w.empty_word() && w.letter(w.size() - 1) == 0;  // ends in x
    if (cnf.accepts(w) != expect)
      FAIL("(y*x)+ mismatch on ", format_word(w));
  });
}

TEST_CASE("the self-erasing grammar derives the first few members") {
  eraser_alphabet ea = eraser_alphabet::single(chars("a"));
  cnf_grammar cnf{l3_grammar(ea)};
  auto w = [&](const char* s) { return parse_word(ea.full, s); };
  CHECK(cnf.accepts(w("@")));
  CHECK(cnf.accepts(w("a↢")));
  CHECK(cnf.accepts(w("aa↢↢")));
  CHECK(cnf.accepts(w("a↢a↢")));
  CHECK(cnf.accepts(w("aa↢a↢↢")));
  CHECK(!cnf.accepts(w("a")));
  CHECK(!cnf.accepts(w("↢a")));
  CHECK(!cnf.accepts(w("a↢↢")));
}

TEST_CASE("unknown symbols are rejected") {
  grammar g;
  g.nonterminals = {"S"};
  g.terminals = chars("a");
  g.start = "S";
  g.productions.push_back({"S", {"a", "T"}});
  CHECK_THROWS_AS(cnf_grammar{g}, std::invalid_argument);
}

#include <doctest.h>

#include "opow/mupi.hpp"
#include "opow/oracle.hpp"

using namespace opow;

namespace {

word qw(const char* s) { return parse_word(digits(4), s); }

}  // namespace

TEST_CASE("m_index milestones") {
  CHECK(m_index(0) == 0);
  CHECK(m_index(1) == 4);
  CHECK(m_index(2) == 20);
  for (std::size_t j = 0; j < 8; ++j)
    CHECK(m_index(j) < m_index(j + 1));
}

TEST_CASE("state enumeration pins the listed values") {
  auto expect = [&](std::uint64_t n, const char* l, const char* r) {
    state_pair q = state_pair_at(n);
    CHECK(format_word(q.left) == l);
    CHECK(format_word(q.right) == r);
  };
  expect(0, "@", "@");
  expect(1, "0", "0");
  expect(2, "0", "1");
  expect(3, "1", "0");
  expect(4, "1", "1");
  expect(5, "00", "00");
  expect(6, "00", "01");
}

TEST_CASE("state enumeration round trip and milestones") {
  for (std::uint64_t n = 0; n < 2000; ++n)
    CHECK(state_index(state_pair_at(n)) == n);
  for (std::size_t j = 0; j <= 4; ++j) {
    state_pair last = state_pair_at(m_index(j));
    CHECK(last.left.size() == j);
    for (std::size_t i = 0; i < j; ++i) {
      CHECK(last.left.letter(i) == 1);
      CHECK(last.right.letter(i) == 1);
    }
  }
}

TEST_CASE("edge relation") {
  CHECK(edge(0, 0, 1));
  CHECK(edge(0, 0, 3));
  CHECK(!edge(0, 0, 2));
  CHECK(edge(0, 1, 2));
  CHECK(edge(0, 1, 4));
  CHECK(!edge(0, 1, 1));
  for (std::uint64_t n = 0; n < 40; ++n)
    for (int m = 0; m < 2; ++m) {
      CHECK(edge(n, m, edge_target(n, m, 0)));
      CHECK(edge(n, m, edge_target(n, m, 1)));
    }
}

TEST_CASE("edges lengthen states by one") {
  for (std::uint64_t n = 0; n < 500; ++n)
    for (std::uint64_t p = 0; p < 500; ++p)
      for (int m = 0; m < 2; ++m)
        if (edge(n, m, p) &&
            state_pair_at(p).left.size() != state_pair_at(n).left.size() + 1)
          FAIL("edge changes length by something else than one");
}

TEST_CASE("is_final under both conventions") {
  tree_predicate full = tree_full();
  CHECK(!is_final(state_pair_at(0), full));
  state_pair q10{parse_word(digits(2), "1"), parse_word(digits(2), "0")};
  state_pair q01{parse_word(digits(2), "0"), parse_word(digits(2), "1")};
  CHECK(is_final(q10, full));
  CHECK(!is_final(q01, full));
  CHECK(!is_final(q10, full, final_convention::right_component));
  CHECK(is_final(q01, full, final_convention::right_component));
  tree_predicate diag = tree_diag();
  state_pair q11{parse_word(digits(2), "1"), parse_word(digits(2), "1")};
  CHECK(is_final(q11, diag));
  CHECK(!is_final(q10, diag));
}

TEST_CASE("k_prefix_member") {
  CHECK(k_prefix_member(qw("@"), 0, 0));
  CHECK(k_prefix_member(qw("22"), 2, 1));
  CHECK(!k_prefix_member(qw("3"), 1, 1));  // must start with 2^N
  CHECK(k_prefix_member(qw("1222232222"), 0, 0));      // one full block of K_{0,0}
  CHECK(k_prefix_member(qw("12222322220"), 0, 0));     // the next mark may follow
  CHECK(!k_prefix_member(qw("12222322223"), 0, 0));    // a 3 is not a mark
  CHECK(!k_prefix_member(qw("122223222221"), 0, 0));   // mark arrives one 2 too late
  CHECK(k_prefix_member(qw("1222232222122222"), 0, 0));  // inside the 2^{M_2} run
  CHECK_THROWS_AS(k_prefix_member(qw("@"), 1, 0), std::invalid_argument);
}

TEST_CASE("pi membership") {
  tree_predicate full = tree_full();
  CHECK(!pi_member(qw("@"), full));
  CHECK(!pi_member(qw("3"), full));
  CHECK(pi_member(qw("122223"), full));
  CHECK(pi_member(qw("0222232"), full));
  CHECK(!pi_member(qw("0222232"), full, final_convention::right_component));
  CHECK(pi_member(qw("122223"), full, final_convention::right_component));
  CHECK(!pi_member(qw("1222232"), full));  // trailing run forces a non-successor
  CHECK(!pi_member(qw("122233"), full));
}

TEST_CASE("the pinned minimal pi witness") {
  auto w = brute_pi_witness(6, tree_full());
  REQUIRE(w);
  CHECK(format_word(w->first) == "122223");
  CHECK(w->second.reassemble() == w->first);
  CHECK(w->second.j == 0);
  CHECK(!brute_pi_witness(5, tree_full()));
  CHECK(!brute_pi_witness(2, tree_full()));
  CHECK(!brute_pi_witness(0, tree_full()));
}

TEST_CASE("pi parses reassemble") {
  tree_predicate full = tree_full();
  for_each_word(digits(4), 9, [&](const word& w) {
    auto p = parse_pi(w, full);
    if (p && p->reassemble() != w)
      FAIL("pi parse does not reassemble ", format_word(w));
  });
}

TEST_CASE("mu membership") {
  // 1 2^4 3 then 1 2^4 3 2^4: both mu0 (P_l != R_l) and mu1 fire
  word example = concat(concat(qw("122223"), qw("122223")), qw("2222"));
  CHECK(mu0_member(example));
  CHECK(mu1_member(example));
  auto parse = parse_mu0(example);
  REQUIRE(parse);
  CHECK(parse->reassemble() == example);
  CHECK(!mu0_member(qw("@")));
  CHECK(!mu1_member(qw("@")));
  CHECK(!mu0_member(qw("122223")));  // needs two blocks
  // a P-run of length 5 is never an M-value
  CHECK(!mu0_member(qw("12222231222223")));
  CHECK(!mu1_member(qw("12222231222223")));
  // 1 3 1 3: P = (0,0) = (M_0, M_0), R = (0,0): mu1 only
  CHECK(!mu0_member(qw("1313")));
  CHECK(mu1_member(qw("1313")));
}

TEST_CASE("run prefixes") {
  word empty = word::empty(digits(2));
  auto r0 = run_prefixes(empty);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == std::vector<std::uint64_t>{0});
  auto r1 = run_prefixes(parse_word(digits(2), "0"));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == std::vector<std::uint64_t>{0, 1});
  CHECK(r1[1] == std::vector<std::uint64_t>{0, 3});
  CHECK(run_prefixes(parse_word(digits(2), "01")).size() == 4);
  for (std::size_t len = 0; len <= 6; ++len) {
    word input(digits(2), std::vector<std::uint8_t>(len, 1));
    CHECK(run_prefixes(input).size() == (std::size_t{1} << len));
  }
}

TEST_CASE("tree predicates are prefix closed on samples") {
  for (const tree_predicate& R : {tree_full(), tree_diag()}) {
    for_each_word(digits(2), 6, [&](const word& t) {
      for_each_word(digits(2), 6, [&](const word& s) {
        if (t.size() != s.size() || !R.decide(t, s))
          return;
        for (std::size_t i = 0; i < t.size(); ++i)
          if (!R.decide(t.prefix(i), s.prefix(i)))
            FAIL("prefix closure violated");
      });
    });
  }
}

#include <algorithm>
#include <random>

#include "doctest.h"
#include "permrel/errors.hpp"
#include "permrel/explorer.hpp"
#include "permrel/oracles.hpp"
#include "permrel/rewrite_cyclic.hpp"

using namespace permrel;

TEST_CASE("rule patterns") {
  const int n = 3;
  CHECK(Rule::rotation(1).lhs(n) == Word{2, 3, 1});
  CHECK(Rule::rotation(1).rhs(n) == Word{1, 2, 3});
  CHECK(Rule::shift(2, 1).lhs(n) == Word{2, 1, 2, 3});
  CHECK(Rule::shift(2, 1).rhs(n) == Word{1, 2, 3, 2});
  CHECK(Rule::shift(3, 2).lhs(n) == Word{3, 1, 1, 2, 3});
  CHECK(Rule::shift(3, 2).rhs(n) == Word{1, 2, 3, 3, 1});
  CHECK(to_string(Rule::shift(3, 2)) == "R(3,2)");
  CHECK(to_string(Rule::rotation(2)) == "T(2)");
  for (int j = 2; j <= 4; ++j) {
    for (int m = 1; m <= 3; ++m) {
      const Rule r = Rule::shift(j, m);
      CHECK(r.lhs(4) > r.rhs(4));
      CHECK(multidegree(r.lhs(4), 4) == multidegree(r.rhs(4), 4));
    }
  }
}

TEST_CASE("find_redexes") {
  const CyclicMonoid s(3);
  CHECK(s.find_redexes(Word{2, 3, 1}) == std::vector<Redex>{{Rule::rotation(1), 0}});
  CHECK(s.find_redexes(Word{2, 1}).empty());
  CHECK(s.find_redexes(Word{3, 1, 1, 2, 3}) == std::vector<Redex>{{Rule::shift(3, 2), 0}});
  // R(3,1) is not a rule
  CHECK(s.find_redexes(Word{3, 1, 2, 3}) == std::vector<Redex>{{Rule::rotation(2), 0}});
  CHECK_THROWS_AS(CyclicMonoid(2), PreconditionError);
}

TEST_CASE("apply") {
  const CyclicMonoid s(3);
  CHECK(s.apply(Word{2, 3, 1}, {Rule::rotation(1), 0}) == Word{1, 2, 3});
  CHECK(s.apply(Word{2, 1, 2, 3}, {Rule::shift(2, 1), 0}) == Word{1, 2, 3, 2});
  CHECK(s.apply(Word{3, 1, 1, 2, 3}, {Rule::shift(3, 2), 0}) == Word{1, 2, 3, 3, 1});
  CHECK_THROWS_AS(s.apply(Word{1, 2, 3}, {Rule::rotation(1), 0}), PreconditionError);
}

TEST_CASE("normal_form examples") {
  const CyclicMonoid s(3);
  CHECK(s.normal_form(Word{3, 1, 2}) == Word{1, 2, 3});
  CHECK(s.normal_form(Word{2, 1}) == Word{2, 1});
  const Word w{2, 1, 2, 3, 1};
  CHECK(s.normal_form(w) == Word{1, 2, 3, 2, 1});
  const auto cls = oracle::class_by_search(Presentation::cyclic(3), w);
  CHECK(*cls.begin() == Word{1, 2, 3, 2, 1});
}

TEST_CASE("normal form is the length-lex least element of the class") {
  for (int n = 3; n <= 4; ++n) {
    const CyclicMonoid s(n);
    const auto p = Presentation::cyclic(n);
    for (std::size_t len = 0; len <= static_cast<std::size_t>(n + 3); ++len) {
      const auto table = build_table(p, len);
      for (const Word& w : oracle::all_words(n, len)) {
        const Word nf = s.normal_form(w);
        REQUIRE(nf == table.representative(w));
        CHECK(s.is_irreducible(nf));
        CHECK(s.normal_form(nf) == nf);
      }
    }
  }
}

TEST_CASE("class search agrees with the table") {
  const auto p = Presentation::cyclic(3);
  const auto table = build_table(p, 6);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = oracle::random_word(rng, 3, 6);
    const auto cls = oracle::class_by_search(p, w);
    CHECK(cls.size() == table.class_size(w));
    CHECK(*cls.begin() == table.representative(w));
  }
}

TEST_CASE("every strategy reaches the same normal form") {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 5; ++n) {
    const CyclicMonoid s(n);
    for (int trial = 0; trial < 300; ++trial) {
      const Word w = oracle::random_word(rng, n, rng() % 14);
      const Word nf = s.normal_form(w);
      CHECK(s.random_normal_form(w, rng).result == nf);
      CHECK(s.normal_form(oracle::random_relation_walk(Presentation::cyclic(n), w, 10, rng)) == nf);
    }
  }
}

TEST_CASE("decompose") {
  const CyclicMonoid s(3);
  CHECK(s.decompose(Word{1, 2, 3, 2}) == NormalForm{0, 1, 0, Word{2}});
  CHECK(s.decompose(Word{}) == NormalForm{});
  CHECK(s.decompose(Word{1, 1, 2, 1}) == NormalForm{2, 0, 0, Word{2, 1}});
  CHECK_THROWS_AS(s.decompose(Word{2, 3, 1}), PreconditionError);

  const auto parses = oracle::constrained_parses(Word{1, 2, 3, 2}, 3);
  REQUIRE(parses.size() == 1);
  CHECK(parses.front() == NormalForm{0, 1, 0, Word{2}});
}

TEST_CASE("irreducible words have exactly one constrained parse") {
  for (int n = 3; n <= 4; ++n) {
    const CyclicMonoid s(n);
    for (std::size_t len = 0; len <= 7; ++len) {
      for (const Word& w : oracle::all_words(n, len)) {
        if (!s.is_irreducible(w)) {
          continue;
        }
        const auto parses = oracle::constrained_parses(w, n);
        REQUIRE(parses.size() == 1);
        CHECK(parses.front() == s.decompose(w));
        CHECK(assemble(parses.front(), n) == w);
      }
    }
  }
}

TEST_CASE("multiply and equal") {
  const CyclicMonoid s(3);
  CHECK(s.multiply(Word{1}, Word{2, 3}) == Word{1, 2, 3});
  CHECK(s.multiply(Word{2, 3}, Word{1}) == Word{1, 2, 3});
  CHECK(s.multiply(Word{3}, Word{1, 1, 2, 3}) == Word{1, 2, 3, 3, 1});
  CHECK(s.equal(Word{2, 3, 1}, Word{3, 1, 2}));
  CHECK_FALSE(s.equal(Word{2, 1}, Word{1, 2}));
  CHECK(s.equal(Word{}, Word{}));
  CHECK_FALSE(s.equal(Word{1}, Word{1, 1}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = oracle::random_word(rng, 3, rng() % 6);
    const Word b = oracle::random_word(rng, 3, rng() % 6);
    const Word c = oracle::random_word(rng, 3, rng() % 6);
    CHECK(s.multiply(s.multiply(a, b), c) == s.multiply(a, s.multiply(b, c)));
    CHECK(s.multiply(a, s.z()) == s.multiply(s.z(), a));
  }
}

TEST_CASE("membership in P") {
  const CyclicMonoid s(3);
  CHECK(s.is_in_P(Word{1, 2, 3}));
  CHECK_FALSE(s.is_in_P(Word{2, 1}));
  CHECK(s.is_in_P(Word{2, 3, 1}));
  for (int n = 3; n <= 4; ++n) {
    const CyclicMonoid m(n);
    for (std::size_t len = 0; len <= static_cast<std::size_t>(n + 2); ++len) {
      const auto table = build_table(Presentation::cyclic(n), len);
      for (const Word& w : oracle::all_words(n, len)) {
        CHECK(m.is_in_P(w) == oracle::in_P_by_table(table, w));
      }
    }
  }
}

TEST_CASE("outside P the presentation is unique") {
  const CyclicMonoid s(3);
  const auto table = build_table(Presentation::cyclic(3), 6);
  for (const Word& w : oracle::all_words(3, 6)) {
    if (!s.is_in_P(w)) {
      CHECK(table.class_size(w) == 1);
      CHECK_FALSE(oracle::contains_rotation(w, 3));
    }
  }
}

TEST_CASE("prime_witness") {
  const CyclicMonoid s(3);
  auto in_p_for = [&](const Word& a, const Word& b, int i) { return s.is_in_P(a + Word{i, i} + b); };
  CHECK(s.prime_witness(Word{}, Word{}) == 1);
  for (const auto& [a, b] : {std::pair{Word{2, 3}, Word{1}}, std::pair{Word{3}, Word{2, 3}}}) {
    const int i = s.prime_witness(a, b);
    CHECK(i >= 1);
    CHECK(i <= 3);
    CHECK_FALSE(in_p_for(a, b, i));
  }
  CHECK_THROWS_AS(s.prime_witness(Word{1, 2, 3}, Word{}), PreconditionError);
}

#include <algorithm>
#include <random>

#include "doctest.h"
#include "permrel/errors.hpp"
#include "permrel/oracles.hpp"
#include "permrel/presentation.hpp"

using namespace permrel;

TEST_CASE("parse_word") {
  CHECK(parse_word("2 3 1", 3) == Word{2, 3, 1});
  CHECK(parse_word("a1.a1.a2", 3) == Word{1, 1, 2});
  CHECK(parse_word("", 3).empty());
  CHECK_THROWS_AS(parse_word("4", 3), LetterRangeError);
  CHECK_THROWS_AS(parse_word("0", 3), LetterRangeError);
  CHECK_THROWS_AS(parse_word("x", 3), ParseError);
  CHECK(to_string(Word{1, 2, 3}) == "1 2 3");
  CHECK(to_string(Word{}) == "ε");
}

TEST_CASE("length-lex order") {
  CHECK(Word{3} < Word{1, 1});
  CHECK(Word{1, 2} < Word{2, 1});
  CHECK(Word{} < Word{1});
  CHECK_FALSE(Word{2, 1} < Word{2, 1});
}

TEST_CASE("concatenation is associative with identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = oracle::random_word(rng, 4, rng() % 5);
    const Word b = oracle::random_word(rng, 4, rng() % 5);
    const Word c = oracle::random_word(rng, 4, rng() % 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + Word{} == a);
    CHECK(Word{} + a == a);
  }
}

TEST_CASE("permutations") {
  const Permutation p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p == Permutation::full_cycle(3));
  CHECK((p * p.inverse()).is_identity());
  CHECK(parse_permutation("(1 2 3)", 3) == p);
  CHECK(parse_permutation("2,3,1", 3) == p);
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("(1 2)(3 4)", 4) == Permutation({2, 1, 4, 3}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), PreconditionError);
  CHECK_THROWS(parse_permutation("1,2", 3));
  CHECK(to_string(p) == "2,3,1");
}

TEST_CASE("close_under_group") {
  const Permutation c({2, 3, 1});
  const Permutation t({2, 1, 3});
  const auto cyclic = close_under_group(3, std::vector{c});
  CHECK(cyclic.size() == 3);
  CHECK(cyclic.contains(Permutation({3, 1, 2})));
  CHECK(close_under_group(3, std::vector<Permutation>{}).size() == 1);

  const std::vector<Permutation> gens{t, c};
  const auto sym = close_under_group(3, gens);
  CHECK(sym.size() == 6);
  CHECK(sym == PermutationSet(3, oracle::closure_by_products(3, gens)));
  CHECK(sym.is_subgroup());

  // idempotent
  CHECK(close_under_group(3, sym.members()) == sym);

  for (int n = 2; n <= 5; ++n) {
    const std::vector<Permutation> g{Permutation::full_cycle(n),
                                     parse_permutation("(1 2)", n)};
    CHECK(close_under_group(n, g) == PermutationSet(n, oracle::closure_by_products(n, g)));
  }
  CHECK(PermutationSet::symmetric(4).size() == 24);
}

TEST_CASE("relations_of") {
  const auto cyc = Presentation::cyclic(3);
  const std::vector<Relation> expected{{Word{1, 2, 3}, Word{2, 3, 1}}, {Word{1, 2, 3}, Word{3, 1, 2}}};
  auto got = relations_of(cyc);
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(relations_of(Presentation::free(3)).empty());
  CHECK(relations_of(Presentation::symmetric(3)).size() == 5);
}

TEST_CASE("relations have |H| - [id in H] pairs with permuted right sides") {
  const PermutationSet without_id(3, {Permutation({2, 1, 3}), Permutation({3, 2, 1})});
  CHECK_FALSE(without_id.is_subgroup());
  CHECK(Presentation(without_id).relations().size() == 2);
  for (int n = 2; n <= 4; ++n) {
    const auto p = Presentation::symmetric(n);
    CHECK(p.relations().size() == p.permutations().size() - 1);
    for (const auto& [lhs, rhs] : p.relations()) {
      CHECK(lhs == central_word(n));
      CHECK(multidegree(rhs, n) == multidegree(lhs, n));
    }
  }
}

TEST_CASE("parse_h_spec") {
  CHECK(parse_h_spec("cyclic", 4) == PermutationSet::cyclic(4));
  CHECK(parse_h_spec("sym", 3) == PermutationSet::symmetric(3));
  CHECK(parse_h_spec("trivial", 3) == PermutationSet::trivial(3));
  CHECK(parse_h_spec("(1 2);(1 2 3)", 3) == PermutationSet::symmetric(3));
  const auto subset = parse_h_spec("set:2,1,3", 3);
  CHECK(subset.size() == 1);
  CHECK_FALSE(subset.is_subgroup());
  CHECK_THROWS_AS(parse_h_spec("bogus", 3), ParseError);
}

TEST_CASE("presentation JSON round trip") {
  for (const auto& p : {Presentation::cyclic(4), Presentation::symmetric(3), Presentation::free(3)}) {
    const auto back = presentation_from_json(to_json(p));
    CHECK(back.permutations() == p.permutations());
    CHECK(back.relations() == p.relations());
  }
  const auto from_gens = presentation_from_json(nlohmann::json::parse(R"({"n":3,"generators":[[2,1,3],[2,3,1]]})"));
  CHECK(from_gens.permutations().size() == 6);
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"members":[]})")), ParseError);
}

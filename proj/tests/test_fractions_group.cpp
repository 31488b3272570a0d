#include <random>

#include "doctest.h"
#include "permrel/errors.hpp"
#include "permrel/fractions_group.hpp"
#include "permrel/oracles.hpp"
#include "permrel/rewrite_cyclic.hpp"

using namespace permrel;

namespace {

FreeWord x(int g, long e = 1) { return FreeWord::generator(g, e); }

GroupElement random_element(std::mt19937_64& rng, int n) {
  GroupElement g;
  const int syllables = static_cast<int>(rng() % 6);
  for (int k = 0; k < syllables; ++k) {
    g.free_part = g.free_part * x(1 + static_cast<int>(rng() % (n - 1)), static_cast<long>(rng() % 5) - 2);
  }
  g.c_exp = static_cast<long>(rng() % 7) - 3;
  return g;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK((x(1) * x(1, -1)).is_identity());
  CHECK((x(1) * x(2) * x(2, -1) * x(1, 2)).syllables() == std::vector<Syllable>{{1, 3}});
  CHECK(x(1, 0).is_identity());
  CHECK((x(1) * x(2)).inverse() == x(2, -1) * x(1, -1));
}

TEST_CASE("phi") {
  CHECK(phi(Word{1, 2, 3}, 3) == GroupElement{FreeWord{}, 1});
  CHECK(phi(Word{2, 3, 1}, 3) == GroupElement{FreeWord{}, 1});
  CHECK(phi(Word{2, 1}, 3) == GroupElement{x(2) * x(1), 0});
  CHECK(phi(Word{3}, 3) == GroupElement{x(2, -1) * x(1, -1), 1});
  CHECK(to_string(phi(Word{3}, 3)) == "x2^-1 x1^-1 ; c^1");
  CHECK(to_string(phi(Word{1, 2, 3}, 3)) == "1 ; c^1");
  CHECK(phi(Word{}, 3) == GroupElement{});
}

TEST_CASE("group operations") {
  CHECK(group_mul({x(1), 0}, {x(1, -1), 2}) == GroupElement{FreeWord{}, 2});
  CHECK(group_mul({x(1) * x(2), 1}, {FreeWord{}, -1}) == GroupElement{x(1) * x(2), 0});
  CHECK(group_mul(phi(Word{2, 3}, 3), phi(Word{1}, 3)) == phi(Word{2, 3, 1}, 3));
  CHECK(group_inv({x(1) * x(2), 1}) == GroupElement{x(2, -1) * x(1, -1), -1});
  CHECK(group_inv(GroupElement{}) == GroupElement{});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_element(rng, 4);
    const auto h = random_element(rng, 4);
    const auto k = random_element(rng, 4);
    CHECK(group_mul(g, group_inv(g)) == GroupElement{});
    CHECK(group_mul(group_mul(g, h), k) == group_mul(g, group_mul(h, k)));
  }
}

TEST_CASE("phi is a homomorphism constant on classes") {
  std::mt19937_64 rng(23);
  for (int n = 3; n <= 5; ++n) {
    const CyclicMonoid s(n);
    const auto p = Presentation::cyclic(n);
    for (int trial = 0; trial < 200; ++trial) {
      const Word u = oracle::random_word(rng, n, rng() % 8);
      const Word v = oracle::random_word(rng, n, rng() % 8);
      CHECK(phi(u + v, n) == group_mul(phi(u, n), phi(v, n)));
      CHECK(phi(s.normal_form(u), n) == phi(u, n));
      CHECK(phi(oracle::random_relation_walk(p, u, 6, rng), n) == phi(u, n));
      CHECK(phi(u, n).c_exp == static_cast<long>(multidegree(u, n)[static_cast<std::size_t>(n - 1)]));
    }
  }
}

TEST_CASE("psi") {
  const auto images = psi_on_generators(3);
  CHECK(images.x[0] == Word{1});
  CHECK(images.c == Word{1, 2, 3});
  CHECK(phi(images.x[0], 3) == GroupElement{x(1), 0});
  CHECK(phi(images.c, 3) == GroupElement{FreeWord{}, 1});
  CHECK(psi_monoid({x(2) * x(1), 0}, 3) == Word{2, 1});
  CHECK(phi(psi_monoid({x(2) * x(1), 0}, 3), 3) == GroupElement{x(2) * x(1), 0});
  CHECK_THROWS_AS(psi_monoid({x(1, -1), 0}, 3), PreconditionError);
  for (int n = 3; n <= 6; ++n) {
    CHECK(verify_phi_psi_on_generators(n));
  }
}

TEST_CASE("equality via the group agrees with normal forms") {
  CHECK(equal_via_group(Word{2, 3, 1}, Word{1, 2, 3}, 3));
  CHECK_FALSE(equal_via_group(Word{1, 2}, Word{2, 1}, 3));
  CHECK(equal_via_group(Word{}, Word{}, 3));
  for (int n = 3; n <= 4; ++n) {
    const CyclicMonoid s(n);
    for (std::size_t len = 0; len <= 5; ++len) {
      const auto words = oracle::all_words(n, len);
      for (std::size_t a = 0; a < words.size(); a += 3) {
        for (std::size_t b = 0; b < words.size(); b += 5) {
          CHECK(equal_via_group(words[a], words[b], n) == s.equal(words[a], words[b]));
        }
      }
    }
  }
}

TEST_CASE("group element JSON") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_element(rng, 4);
    CHECK(group_element_from_json(to_json(g)) == g);
  }
}

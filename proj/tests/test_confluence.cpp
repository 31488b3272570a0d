#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "permrel/confluence.hpp"
#include "permrel/explorer.hpp"
#include "permrel/oracles.hpp"

using namespace permrel;

namespace {

using Key = std::tuple<std::vector<Letter>, std::string, std::string, std::size_t>;

Key key_of(const Word& ambient, Rule a, Rule b, std::size_t offset) {
  if (offset == 0 && rule_precedes(b, a)) {
    std::swap(a, b);
  }
  return {ambient.letters(), to_string(a), to_string(b), offset};
}

// Every word that is exactly the union of two overlapping redexes, one at 0.
std::set<Key> overlaps_by_scan(int n, int max_m) {
  const CyclicMonoid s(n);
  const std::size_t longest = 2 * static_cast<std::size_t>(n + max_m) - 1;
  std::set<Key> out;
  for (std::size_t len = static_cast<std::size_t>(n); len <= longest; ++len) {
    for (const Word& w : oracle::all_words(n, len)) {
      const auto redexes = s.find_redexes(w);
      for (const auto& a : redexes) {
        if (a.position != 0 || a.rule.run > max_m) {
          continue;
        }
        for (const auto& b : redexes) {
          if (b.rule.run > max_m || (b.position == 0 && b.rule == a.rule)) {
            continue;
          }
          const std::size_t end = std::max(a.rule.span(n), b.position + b.rule.span(n));
          if (b.position < a.rule.span(n) && end == len) {
            out.insert(key_of(w, a.rule, b.rule, b.position));
          }
        }
      }
    }
  }
  return out;
}

const OverlapInstance* find(const std::vector<OverlapInstance>& all, const Word& ambient, Rule a, Rule b,
                            std::size_t offset) {
  for (const auto& inst : all) {
    if (inst.ambient == ambient && inst.left_rule == a && inst.right_rule == b && inst.offset == offset) {
      return &inst;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(family_of(Rule::rotation(1), 3) == PatternFamily::Alpha);
  CHECK(family_of(Rule::shift(2, 3), 3) == PatternFamily::Beta);
  CHECK(family_of(Rule::shift(3, 2), 3) == PatternFamily::Gamma);
  CHECK(classify(PatternFamily::Gamma, PatternFamily::Alpha) == OverlapClass::AlphaGamma);
  CHECK(case_number(OverlapClass::AlphaAlpha) == 1);
  CHECK(case_number(OverlapClass::GammaGamma) == 5);
}

TEST_CASE("enumeration matches a brute-force scan") {
  for (const auto& [n, max_m] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
    std::set<Key> enumerated;
    for (const auto& inst : enumerate_overlaps(n, max_m)) {
      enumerated.insert(key_of(inst.ambient, inst.left_rule, inst.right_rule, inst.offset));
    }
    CHECK(enumerated == overlaps_by_scan(n, max_m));
  }
}

TEST_CASE("rotation and shift overlap instances are present") {
  const auto all = enumerate_overlaps(3, 2);
  const auto* case1 = find(all, Word{2, 3, 1, 2}, Rule::rotation(1), Rule::rotation(2), 1);
  REQUIRE(case1 != nullptr);
  CHECK(case1->overlap_class() == OverlapClass::AlphaAlpha);
  const auto* case3 = find(all, Word{3, 1, 1, 2, 3, 1}, Rule::shift(3, 2), Rule::rotation(1), 3);
  REQUIRE(case3 != nullptr);
  CHECK(case3->overlap_class() == OverlapClass::AlphaGamma);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& inst : enumerate_overlaps(n, 4)) {
      CHECK(inst.overlap_class() != OverlapClass::BetaBeta);
      CHECK_FALSE(inst.nested);
    }
  }
}

TEST_CASE("rotation overlaps include wrap-around placements") {
  // T(2) at 0 and T(1) at 2 share one letter; not of the i < k form.
  const auto all = enumerate_overlaps(3, 2);
  const auto* wrap = find(all, Word{3, 1, 2, 3, 1}, Rule::rotation(2), Rule::rotation(1), 2);
  REQUIRE(wrap != nullptr);
  CHECK(check_joinable(*wrap).joinable);
}

TEST_CASE("check_joinable") {
  const auto all = enumerate_overlaps(3, 2);
  const auto report = check_joinable(*find(all, Word{2, 3, 1, 2}, Rule::rotation(1), Rule::rotation(2), 1));
  CHECK(report.joinable);
  CHECK(report.left_result == Word{1, 2, 3, 2});
  CHECK(report.right_result == Word{2, 1, 2, 3});
  CHECK(report.common_descendant == Word{1, 2, 3, 2});

  OverlapInstance disjoint{3, Rule::rotation(1), Rule::rotation(1), 3, Word{2, 3, 1, 2, 3, 1}, false};
  const auto d = check_joinable(disjoint);
  CHECK(d.joinable);
  CHECK(CyclicMonoid(3).apply(d.left_result, {Rule::rotation(1), 3}) ==
        CyclicMonoid(3).apply(d.right_result, {Rule::rotation(1), 0}));
}

TEST_CASE("gamma-gamma overlap with m = p = 2") {
  const int n = 3;
  const Word ambient{3, 1, 1, 2, 3, 1, 1, 2, 3};
  const auto all = enumerate_overlaps(n, 2);
  const auto* inst = find(all, ambient, Rule::shift(3, 2), Rule::shift(3, 2), 4);
  REQUIRE(inst != nullptr);
  const auto report = check_joinable(*inst);
  REQUIRE(report.joinable);
  CHECK(report.left_result == Word{1, 2, 3, 3, 1, 1, 1, 2, 3});
  CHECK(report.right_result == Word{3, 1, 1, 2, 1, 2, 3, 3, 1});
  // Both sides descend through z z a_n a_1^{m+p-2}, whose normal form is the join.
  const Word through = central_word(n) + central_word(n) + Word{3, 1, 1};
  const CyclicMonoid s(n);
  CHECK(s.normal_form(through) == report.common_descendant);
  CHECK(report.common_descendant == build_table(Presentation::cyclic(n), ambient.size()).representative(ambient));
}

TEST_CASE("local confluence") {
  for (const auto& [n, max_m] : {std::pair{3, 4}, std::pair{4, 3}, std::pair{5, 3}}) {
    const auto summary = certify_local_confluence(n, max_m);
    CHECK(summary.certified());
    CHECK(summary.instances > 0);
    CHECK(summary.joinable == summary.instances);
  }
  const auto json = to_json(certify_local_confluence(3, 2));
  CHECK(json.contains("counts"));
}

TEST_CASE("degenerate rule is caught") {
  const auto summary = certify_local_confluence(3, 2, {.allow_degenerate_shift = true});
  CHECK_FALSE(summary.certified());
  CHECK(summary.failures.size() + summary.malformed.size() >= 1);
}

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "permrel/rewrite_cyclic.hpp"

namespace permrel {

/// Shapes of rule left-hand sides:
///   alpha  a_{i+1}...a_n a_1...a_i            (rotations)
///   beta   a_j a_1^m a_2...a_n, 2 <= j <= n-1
///   gamma  a_n a_1^m a_2...a_n, m >= 2
enum class PatternFamily { Alpha, Beta, Gamma };

PatternFamily family_of(const Rule& r, int n);

/// Unordered pair of pattern families.
enum class OverlapClass { AlphaAlpha, AlphaBeta, AlphaGamma, BetaBeta, BetaGamma, GammaGamma };
inline constexpr std::size_t kOverlapClassCount = 6;

OverlapClass classify(PatternFamily a, PatternFamily b);
/// 1..5 for the five overlap cases of the local confluence argument; 0 for
/// beta-beta, which admits no overlaps.
int case_number(OverlapClass c);
std::string to_string(OverlapClass c);

/// Two rule occurrences sharing at least one letter of `ambient`, which is
/// the union of their spans. The left rule starts at 0.
struct OverlapInstance {
  int n = 0;
  Rule left_rule;
  Rule right_rule;
  std::size_t offset = 0;  // start of right_rule in ambient
  Word ambient;
  /// One span contains the other. Impossible for the genuine rule set; it
  /// signals a malformed rule list (e.g. R(n,1) next to T(n-1)).
  bool nested = false;

  OverlapClass overlap_class() const;
};

struct JoinReport {
  OverlapInstance instance;
  Word left_result;
  Word right_result;
  Word common_descendant;  // normal form of left_result when joinable
  std::size_t left_path_length = 0;
  std::size_t right_path_length = 0;
  bool joinable = false;
};

/// All overlapping placements of two rule instances with runs <= max_m.
/// Requires n >= 3 and max_m >= 2.
std::vector<OverlapInstance> enumerate_overlaps(int n, int max_m, RuleOptions options = {});

/// Rewrites the ambient word once with each rule and compares the normal
/// forms of the two results.
JoinReport check_joinable(const OverlapInstance& inst, const CyclicMonoid& monoid);
JoinReport check_joinable(const OverlapInstance& inst);

struct ConfluenceSummary {
  int n = 0;
  int max_m = 0;
  bool degenerate_rule_enabled = false;
  std::array<std::size_t, kOverlapClassCount> counts{};
  std::size_t instances = 0;
  std::size_t joinable = 0;
  std::size_t max_left_path = 0;
  std::size_t max_right_path = 0;
  std::vector<JoinReport> failures;         // non-joinable
  std::vector<OverlapInstance> malformed;   // nested placements

  bool beta_beta_empty() const {
    return counts[static_cast<std::size_t>(OverlapClass::BetaBeta)] == 0;
  }
  bool certified() const {
    return failures.empty() && malformed.empty() && beta_beta_empty() &&
           joinable == instances;
  }
};

ConfluenceSummary certify_local_confluence(int n, int max_m, RuleOptions options = {});

/// {"n", "max_m", "certified", "instances", "counts": {...},
///  "max_path": [l, r], "counterexamples": [...], "malformed": [...]}
nlohmann::json to_json(const ConfluenceSummary& s);

}  // namespace permrel

#include "permrel/confluence.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "permrel/errors.hpp"

namespace permrel {

PatternFamily family_of(const Rule& r, int n) {
  if (r.family == RuleFamily::Rotation) {
    return PatternFamily::Alpha;
  }
  return r.index == n ? PatternFamily::Gamma : PatternFamily::Beta;
}

OverlapClass classify(PatternFamily a, PatternFamily b) {
  if (a > b) {
    std::swap(a, b);
  }
  using F = PatternFamily;
  if (a == F::Alpha) {
    return b == F::Alpha ? OverlapClass::AlphaAlpha
           : b == F::Beta ? OverlapClass::AlphaBeta
                          : OverlapClass::AlphaGamma;
  }
  if (a == F::Beta) {
    return b == F::Beta ? OverlapClass::BetaBeta : OverlapClass::BetaGamma;
  }
  return OverlapClass::GammaGamma;
}

int case_number(OverlapClass c) {
  switch (c) {
    case OverlapClass::AlphaAlpha: return 1;
    case OverlapClass::AlphaBeta: return 2;
    case OverlapClass::AlphaGamma: return 3;
    case OverlapClass::BetaGamma: return 4;
    case OverlapClass::GammaGamma: return 5;
    case OverlapClass::BetaBeta: return 0;
  }
  return 0;
}

std::string to_string(OverlapClass c) {
  switch (c) {
    case OverlapClass::AlphaAlpha: return "alpha-alpha";
    case OverlapClass::AlphaBeta: return "alpha-beta";
    case OverlapClass::AlphaGamma: return "alpha-gamma";
    case OverlapClass::BetaBeta: return "beta-beta";
    case OverlapClass::BetaGamma: return "beta-gamma";
    case OverlapClass::GammaGamma: return "gamma-gamma";
  }
  return "?";
}

OverlapClass OverlapInstance::overlap_class() const {
  return classify(family_of(left_rule, n), family_of(right_rule, n));
}

namespace {

std::vector<Rule> rule_list(int n, int max_m, const RuleOptions& options) {
  std::vector<Rule> rules;
  for (int i = 1; i <= n - 1; ++i) {
    rules.push_back(Rule::rotation(i));
  }
  for (int j = 2; j <= n; ++j) {
    const int min_run = (j == n && !options.allow_degenerate_shift) ? 2 : 1;
    for (int m = min_run; m <= max_m; ++m) {
      rules.push_back(Rule::shift(j, m));
    }
  }
  return rules;
}

auto rule_key(const Rule& r) { return std::make_tuple(r.family, r.index, r.run); }

}  // namespace

std::vector<OverlapInstance> enumerate_overlaps(int n, int max_m, RuleOptions options) {
  if (n < 3 || max_m < 2) {
    throw PreconditionError("enumerate_overlaps needs n >= 3 and max_m >= 2");
  }
  const auto rules = rule_list(n, max_m, options);
  std::vector<OverlapInstance> out;
  std::set<std::tuple<std::vector<Letter>, std::size_t, std::tuple<RuleFamily, int, int>,
                      std::tuple<RuleFamily, int, int>>>
      seen;

  for (const Rule& a : rules) {
    const Word pa = a.lhs(n);
    for (const Rule& b : rules) {
      const Word pb = b.lhs(n);
      for (std::size_t d = 0; d < pa.size(); ++d) {
        // Same start: take each unordered pair of distinct rules once.
        if (d == 0 && !(rule_key(a) < rule_key(b))) {
          continue;
        }
        std::vector<Letter> ambient(pa.begin(), pa.end());
        ambient.resize(std::max(pa.size(), d + pb.size()), 0);
        bool consistent = true;
        for (std::size_t t = 0; t < pb.size() && consistent; ++t) {
          Letter& slot = ambient[d + t];
          if (slot == 0) {
            slot = pb[t];
          } else {
            consistent = slot == pb[t];
          }
        }
        if (!consistent) {
          continue;
        }
        if (!seen.emplace(ambient, d, rule_key(a), rule_key(b)).second) {
          continue;
        }
        OverlapInstance inst;
        inst.n = n;
        inst.left_rule = a;
        inst.right_rule = b;
        inst.offset = d;
        inst.ambient = Word(std::move(ambient));
        inst.nested = d + pb.size() <= pa.size() || d == 0;
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

JoinReport check_joinable(const OverlapInstance& inst, const CyclicMonoid& monoid) {
  JoinReport report;
  report.instance = inst;
  report.left_result = monoid.apply(inst.ambient, {inst.left_rule, 0});
  report.right_result = monoid.apply(inst.ambient, {inst.right_rule, inst.offset});
  const auto left = monoid.normal_form_trace(report.left_result);
  const auto right = monoid.normal_form_trace(report.right_result);
  report.left_path_length = left.steps;
  report.right_path_length = right.steps;
  report.joinable = left.result == right.result;
  if (report.joinable) {
    report.common_descendant = left.result;
  }
  return report;
}

JoinReport check_joinable(const OverlapInstance& inst) {
  return check_joinable(inst, CyclicMonoid(inst.n));
}

ConfluenceSummary certify_local_confluence(int n, int max_m, RuleOptions options) {
  const CyclicMonoid monoid(n, options);
  ConfluenceSummary summary;
  summary.n = n;
  summary.max_m = max_m;
  summary.degenerate_rule_enabled = options.allow_degenerate_shift;
  for (const auto& inst : enumerate_overlaps(n, max_m, options)) {
    ++summary.instances;
    ++summary.counts[static_cast<std::size_t>(inst.overlap_class())];
    if (inst.nested) {
      summary.malformed.push_back(inst);
    }
    auto report = check_joinable(inst, monoid);
    summary.max_left_path = std::max(summary.max_left_path, report.left_path_length);
    summary.max_right_path = std::max(summary.max_right_path, report.right_path_length);
    if (report.joinable) {
      ++summary.joinable;
    } else {
      summary.failures.push_back(std::move(report));
    }
  }
  return summary;
}

nlohmann::json to_json(const ConfluenceSummary& s) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t c = 0; c < kOverlapClassCount; ++c) {
    counts[to_string(static_cast<OverlapClass>(c))] = s.counts[c];
  }
  auto instance_json = [](const OverlapInstance& inst) {
    return nlohmann::json{{"left_rule", to_string(inst.left_rule)},
                          {"right_rule", to_string(inst.right_rule)},
                          {"offset", inst.offset},
                          {"ambient", inst.ambient.letters()}};
  };
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& f : s.failures) {
    auto j = instance_json(f.instance);
    j["left_result"] = f.left_result.letters();
    j["right_result"] = f.right_result.letters();
    counterexamples.push_back(std::move(j));
  }
  nlohmann::json malformed = nlohmann::json::array();
  for (const auto& inst : s.malformed) {
    malformed.push_back(instance_json(inst));
  }
  return {{"n", s.n},
          {"max_m", s.max_m},
          {"degenerate_rule_enabled", s.degenerate_rule_enabled},
          {"certified", s.certified()},
          {"instances", s.instances},
          {"joinable", s.joinable},
          {"beta_beta_empty", s.beta_beta_empty()},
          {"counts", counts},
          {"max_path", {s.max_left_path, s.max_right_path}},
          {"counterexamples", counterexamples},
          {"malformed", malformed}};
}

}  // namespace permrel

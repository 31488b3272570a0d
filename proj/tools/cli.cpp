#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "permrel/acceptance.hpp"
#include "permrel/confluence.hpp"
#include "permrel/errors.hpp"
#include "permrel/explorer.hpp"
#include "permrel/fractions_group.hpp"
#include "permrel/growth_series.hpp"
#include "permrel/presentation.hpp"
#include "permrel/rewrite_cyclic.hpp"

namespace permrel::cli {

namespace {

struct Config {
  int n = 3;
  std::string h_spec = "cyclic";
  std::uint64_t budget = ExplorerConfig{}.budget;
  bool json = false;
  std::uint64_t seed = AcceptanceOptions{}.seed;

  ExplorerConfig explorer() const { return {budget}; }
};

/// Raised for conditions the command reports as a failed assertion (exit 1).
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Config& cfg, bool with_h) {
  cmd->add_option("-n", cfg.n, "number of generators")->check(CLI::Range(2, 64));
  if (with_h) {
    cmd->add_option("--h", cfg.h_spec, "permutation set: cyclic | sym | trivial | generator list | set:list");
  }
  cmd->add_option("--budget", cfg.budget, "largest number of words per table")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", cfg.json, "JSON output");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
}

Presentation presentation_of(const Config& cfg) { return Presentation(parse_h_spec(cfg.h_spec, cfg.n)); }

CyclicMonoid cyclic_monoid(const Config& cfg) {
  if (parse_h_spec(cfg.h_spec, cfg.n) != PermutationSet::cyclic(cfg.n)) {
    throw PreconditionError("unsupported H '" + cfg.h_spec +
                            "': normal forms are available only for the cyclic group <(1,2,...,n)>");
  }
  return CyclicMonoid(cfg.n);
}

nlohmann::json to_json(const NormalForm& nf) {
  return {{"i", nf.i}, {"eps", nf.eps}, {"j", nf.j}, {"tail", nf.tail.letters()}};
}

void print_normal_form(std::ostream& out, const Config& cfg, const CyclicMonoid& monoid, const Word& input) {
  const Word nf = monoid.normal_form(input);
  const NormalForm parts = monoid.decompose(nf);
  const bool in_p = parts.eps == 1;
  if (cfg.json) {
    out << nlohmann::json{{"input", input.letters()},
                          {"normal_form", nf.letters()},
                          {"decomposition", to_json(parts)},
                          {"in_P", in_p}}
               .dump()
        << '\n';
    return;
  }
  out << to_string(nf) << " ∣ i=" << parts.i << " ε=" << parts.eps << " j=" << parts.j
      << " b=" << to_string(parts.tail) << " ∣ in P: " << (in_p ? "yes" : "no") << '\n';
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += (k ? "," : "") + std::to_string(values[k]);
  }
  return out;
}

std::string relation_text(const Relation& r) {
  return to_string(r.first) + " = " + to_string(r.second);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problems, normal forms and growth for monoids defined by permutation relations",
               "permrel"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Config cfg;
  std::string word_a;
  std::string word_b;
  std::size_t max_len = 6;
  std::size_t length = 3;
  int max_m = 5;
  std::size_t max_power = 3;
  bool degenerate = false;
  bool csv = false;
  bool check_cancel = false;
  std::function<int()> action;

  auto* nf = app.add_subcommand("nf", "normal form, decomposition and P-membership (cyclic H)");
  add_common(nf, cfg, true);
  nf->add_option("word", word_a, "word, e.g. \"2 3 1\" or a1.a2")->required();
  nf->callback([&] {
    action = [&] {
      const auto monoid = cyclic_monoid(cfg);
      print_normal_form(out, cfg, monoid, parse_word(word_a, cfg.n));
      return kSuccess;
    };
  });

  auto* eq = app.add_subcommand("eq", "decide equality of two words (cyclic H)");
  add_common(eq, cfg, true);
  eq->add_option("u", word_a)->required();
  eq->add_option("v", word_b)->required();
  eq->callback([&] {
    action = [&] {
      const auto monoid = cyclic_monoid(cfg);
      const Word u = parse_word(word_a, cfg.n);
      const Word v = parse_word(word_b, cfg.n);
      const bool equal = monoid.equal(u, v);
      if (cfg.json) {
        out << nlohmann::json{{"equal", equal},
                              {"normal_forms",
                               {monoid.normal_form(u).letters(), monoid.normal_form(v).letters()}}}
                   .dump()
            << '\n';
      } else {
        out << (equal ? "equal" : "not equal") << '\n';
      }
      return kSuccess;
    };
  });

  auto* mul = app.add_subcommand("mul", "product of two words in normal form (cyclic H)");
  add_common(mul, cfg, true);
  mul->add_option("u", word_a)->required();
  mul->add_option("v", word_b)->required();
  mul->callback([&] {
    action = [&] {
      const auto monoid = cyclic_monoid(cfg);
      print_normal_form(out, cfg, monoid, parse_word(word_a, cfg.n) + parse_word(word_b, cfg.n));
      return kSuccess;
    };
  });

  auto* phi_cmd = app.add_subcommand("phi", "image in the group of fractions F_{n-1} x Z");
  add_common(phi_cmd, cfg, false);
  phi_cmd->add_option("word", word_a)->required();
  phi_cmd->callback([&] {
    action = [&] {
      const auto g = phi(parse_word(word_a, cfg.n), cfg.n);
      out << (cfg.json ? to_json(g).dump() : to_string(g)) << '\n';
      return kSuccess;
    };
  });

  auto* growth_cmd = app.add_subcommand("growth", "number of elements of each length (explorer)");
  add_common(growth_cmd, cfg, true);
  growth_cmd->add_option("--max-len", max_len, "largest length");
  growth_cmd->callback([&] {
    action = [&] {
      const auto p = presentation_of(cfg);
      const auto counts = growth(p, max_len, cfg.explorer());
      if (cfg.json) {
        out << nlohmann::json{{"presentation", to_json(p)}, {"growth", counts}}.dump() << '\n';
      } else {
        out << join(counts) << '\n';
      }
      return kSuccess;
    };
  });

  auto* series = app.add_subcommand("series", "normal-form and avoiding-word counts vs explorer (cyclic H)");
  add_common(series, cfg, false);
  series->add_option("--max-len", max_len, "largest length");
  series->callback([&] {
    action = [&] {
      const auto report = series_report(cfg.n, max_len, cfg.explorer());
      if (cfg.json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << "length normal_forms explorer_classes avoiding explorer_singletons\n";
        for (const auto& row : report.rows) {
          auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; };
          out << row.length << ' ' << row.normal_forms << ' ' << opt(row.explorer_classes) << ' '
              << row.avoiding << ' ' << opt(row.explorer_singletons) << (row.mismatch() ? " MISMATCH" : "")
              << '\n';
        }
      }
      return report.consistent() ? kSuccess : kAssertion;
    };
  });

  auto* confluence = app.add_subcommand("confluence", "check every overlap of the rewriting rules");
  add_common(confluence, cfg, false);
  confluence->add_option("--max-m", max_m, "largest a_1-run in shift rules")->check(CLI::Range(2, 64));
  confluence->add_flag("--with-degenerate-rule", degenerate, "also admit R(n,1) (negative control)");
  confluence->callback([&] {
    action = [&] {
      const auto summary = certify_local_confluence(cfg.n, max_m, {.allow_degenerate_shift = degenerate});
      if (cfg.json) {
        out << to_json(summary).dump() << '\n';
        return summary.certified() ? kSuccess : kAssertion;
      }
      out << (summary.certified() ? "all overlaps joinable" : "local confluence NOT certified") << " ("
          << summary.joinable << "/" << summary.instances << " instances, n=" << summary.n
          << ", max_m=" << summary.max_m << ")\n";
      for (std::size_t c = 0; c < kOverlapClassCount; ++c) {
        const auto cls = static_cast<OverlapClass>(c);
        out << "  case " << case_number(cls) << " " << to_string(cls) << ": " << summary.counts[c] << '\n';
      }
      out << "  max path lengths: " << summary.max_left_path << ", " << summary.max_right_path << '\n';
      for (const auto& f : summary.failures) {
        out << "  not joinable: " << to_string(f.instance.ambient) << " via " << to_string(f.instance.left_rule)
            << " and " << to_string(f.instance.right_rule) << "@" << f.instance.offset << '\n';
      }
      for (const auto& m : summary.malformed) {
        out << "  malformed (nested redexes): " << to_string(m.ambient) << " via " << to_string(m.left_rule)
            << " and " << to_string(m.right_rule) << "@" << m.offset << '\n';
      }
      return summary.certified() ? kSuccess : kAssertion;
    };
  });

  auto* explore = app.add_subcommand("explore", "congruence table of one length stratum");
  add_common(explore, cfg, true);
  explore->add_option("--len", length, "word length");
  explore->add_flag("--csv", csv, "write word,representative rows");
  explore->add_flag("--check-cancel", check_cancel, "search this length for a cancellation failure");
  explore->callback([&] {
    action = [&] {
      const auto p = presentation_of(cfg);
      const auto table = build_table(p, length, cfg.explorer());
      if (csv) {
        table.write_csv(out);
        return kSuccess;
      }
      std::optional<CancellationFailure> failure;
      if (check_cancel) {
        failure = find_cancellation_failure(p, length, cfg.explorer());
      }
      if (cfg.json) {
        nlohmann::json j{{"presentation", to_json(p)},
                         {"length", length},
                         {"classes", table.class_count()},
                         {"singletons", table.singleton_count()}};
        if (check_cancel) {
          j["cancellation_failure"] =
              failure ? nlohmann::json{{"u", failure->u.letters()},
                                       {"v", failure->v.letters()},
                                       {"letter", failure->letter},
                                       {"side", failure->on_right ? "right" : "left"}}
                      : nlohmann::json();
        }
        out << j.dump() << '\n';
      } else {
        out << "length " << length << ": " << table.class_count() << " classes, " << table.singleton_count()
            << " singletons\n";
        if (check_cancel) {
          if (failure) {
            out << "cancellation fails: " << to_string(failure->u) << " and " << to_string(failure->v)
                << " agree after " << (failure->on_right ? "right" : "left") << " multiplication by a"
                << failure->letter << '\n';
          } else {
            out << "no cancellation failure at length " << length << '\n';
          }
        }
      }
      return kSuccess;
    };
  });

  auto* rho = app.add_subcommand("rho", "bounded search for s z^i = t z^i");
  add_common(rho, cfg, true);
  rho->add_option("s", word_a)->required();
  rho->add_option("t", word_b)->required();
  rho->add_option("--max-power", max_power, "largest power of z to try");
  rho->callback([&] {
    action = [&] {
      const auto result =
          rho_related(presentation_of(cfg), parse_word(word_a, cfg.n), parse_word(word_b, cfg.n), max_power,
                      cfg.explorer());
      const bool related = result.verdict == RhoVerdict::Related;
      if (cfg.json) {
        out << nlohmann::json{{"verdict", related ? "related" : "unknown"},
                              {"power", related ? nlohmann::json(*result.power) : nlohmann::json()}}
                   .dump()
            << '\n';
      } else if (related) {
        out << "related (power " << *result.power << ")\n";
      } else {
        out << "unknown (no power up to " << max_power << ")\n";
      }
      return kSuccess;
    };
  });

  auto* symid = app.add_subcommand("symid", "check z a_i a_j = z a_j a_i for all i < j");
  add_common(symid, cfg, true);
  symid->callback([&] {
    action = [&] {
      const auto p = presentation_of(cfg);
      nlohmann::json pairs = nlohmann::json::array();
      bool all = true;
      for (int i = 1; i <= cfg.n; ++i) {
        for (int j = i + 1; j <= cfg.n; ++j) {
          const bool holds = check_commutation_after_z(p, i, j, cfg.explorer());
          all = all && holds;
          if (cfg.json) {
            pairs.push_back({{"i", i}, {"j", j}, {"holds", holds}});
          } else {
            out << "(" << i << "," << j << "): " << (holds ? "holds" : "fails") << '\n';
          }
        }
      }
      if (cfg.json) {
        out << nlohmann::json{{"pairs", pairs}, {"all", all}}.dump() << '\n';
      }
      return kSuccess;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "stabilizer reduction to n-1 generators");
  add_common(reduce, cfg, true);
  reduce->callback([&] {
    action = [&] {
      const auto reduction = stabilizer_reduction(parse_h_spec(cfg.h_spec, cfg.n));
      if (cfg.json) {
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : reduction.induced_relations) {
          rels.push_back({r.first.letters(), r.second.letters()});
        }
        out << nlohmann::json{{"h_order", reduction.h.size()},
                              {"h1", to_json(reduction.induced_presentation())},
                              {"induced_relations", rels}}
                   .dump()
            << '\n';
        return kSuccess;
      }
      out << "H1 order " << reduction.h1.size() << "; induced relations: " << reduction.induced_relations.size()
          << " (deduplicated)\n";
      for (const auto& r : reduction.induced_relations) {
        out << "  " << relation_text(r) << '\n';
      }
      return kSuccess;
    };
  });

  auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
  accept->add_option("--seed", cfg.seed, "seed for randomized checks");
  accept->add_flag("--json", cfg.json, "JSON output");
  accept->callback([&] {
    action = [&] {
      AcceptanceOptions options;
      options.seed = cfg.seed;
      const auto results = run_acceptance(options);
      const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (cfg.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : results) {
          rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << nlohmann::json{{"criteria", rows}, {"passed", all}}.dump() << '\n';
      } else {
        for (const auto& r : results) {
          out << format_result(r) << '\n';
        }
      }
      return all ? kSuccess : kAssertion;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const CentralityError& e) {
    err << "error: " << e.what() << '\n';
    return kAssertion;
  } catch (const AssertionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace permrel::cli

#include "permrel/growth_series.hpp"

#include <algorithm>
#include <deque>

#include "permrel/errors.hpp"
#include "permrel/presentation.hpp"

namespace permrel {

FactorAutomaton::FactorAutomaton(int alphabet, const std::vector<Word>& factors)
    : alphabet_(alphabet) {
  const auto width = static_cast<std::size_t>(alphabet);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> trie(width, kNone);
  forbidden_.push_back(false);

  for (const auto& f : factors) {
    if (!letters_within(f, alphabet) || f.empty()) {
      throw PreconditionError("factor " + to_string(f) + " is not a non-empty word over the alphabet");
    }
    std::size_t state = 0;
    for (Letter a : f) {
      const std::size_t edge = state * width + static_cast<std::size_t>(a - 1);
      if (trie[edge] == kNone) {
        trie[edge] = forbidden_.size();
        forbidden_.push_back(false);
        trie.resize(trie.size() + width, kNone);
      }
      state = trie[edge];
    }
    forbidden_[state] = true;
  }

  // Breadth-first completion of the goto function along failure links.
  delta_ = trie;
  std::vector<std::size_t> fail(forbidden_.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < width; ++a) {
    std::size_t& slot = delta_[a];
    if (slot == kNone) {
      slot = 0;
    } else {
      fail[slot] = 0;
      queue.push_back(slot);
    }
  }
  while (!queue.empty()) {
    const std::size_t state = queue.front();
    queue.pop_front();
    forbidden_[state] = forbidden_[state] || forbidden_[fail[state]];
    for (std::size_t a = 0; a < width; ++a) {
      std::size_t& slot = delta_[state * width + a];
      const std::size_t via_fail = delta_[fail[state] * width + a];
      if (slot == kNone) {
        slot = via_fail;
      } else {
        fail[slot] = via_fail;
        queue.push_back(slot);
      }
    }
  }
}

FactorAutomaton FactorAutomaton::rotations(int n) {
  std::vector<Word> factors;
  for (int i = 0; i < n; ++i) {
    factors.push_back(ascending_run(i + 1, n) + ascending_run(1, i));
  }
  return FactorAutomaton(n, factors);
}

bool FactorAutomaton::avoids(const Word& w) const {
  std::size_t state = start();
  for (Letter a : w) {
    state = next(state, a);
    if (forbidden(state)) {
      return false;
    }
  }
  return true;
}

namespace {

void require_rank(int n) {
  if (n < 3) {
    throw PreconditionError("growth series need n >= 3");
  }
}

// Tracks the prefix restriction on tails: no leading a_1 and no leading
// a_2...a_n. State k in [0, n-2] means the word so far is a_2...a_{k+1};
// kFree means the prefix diverged harmlessly; kDead means a forbidden start.
struct PrefixTracker {
  int n;
  int free_state() const { return n - 1; }
  int dead_state() const { return n; }
  int state_count() const { return n + 1; }

  int next(int state, Letter a) const {
    if (state == free_state() || state == dead_state()) {
      return state;
    }
    if (state == 0 && a == 1) {
      return dead_state();
    }
    if (a == state + 2) {
      return state + 1 == n - 1 ? dead_state() : state + 1;
    }
    return free_state();
  }
};

}  // namespace

std::vector<BigInt> count_avoiding(int n, std::size_t max_length) {
  require_rank(n);
  const auto automaton = FactorAutomaton::rotations(n);
  std::vector<BigInt> current(automaton.state_count());
  current[automaton.start()] = 1;
  std::vector<BigInt> out;
  for (std::size_t len = 0;; ++len) {
    BigInt total = 0;
    for (const auto& c : current) {
      total += c;
    }
    out.push_back(total);
    if (len == max_length) {
      break;
    }
    std::vector<BigInt> next(automaton.state_count());
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (current[s] == 0) {
        continue;
      }
      for (Letter a = 1; a <= n; ++a) {
        const std::size_t t = automaton.next(s, a);
        if (!automaton.forbidden(t)) {
          next[t] += current[s];
        }
      }
    }
    current = std::move(next);
  }
  return out;
}

std::vector<BigInt> count_tails(int n, std::size_t max_length) {
  require_rank(n);
  const auto automaton = FactorAutomaton::rotations(n);
  const PrefixTracker prefix{n};
  const auto prefix_states = static_cast<std::size_t>(prefix.state_count());
  auto product = [&](std::size_t ac, int pre) {
    return ac * prefix_states + static_cast<std::size_t>(pre);
  };

  std::vector<BigInt> current(automaton.state_count() * prefix_states);
  current[product(automaton.start(), 0)] = 1;
  std::vector<BigInt> out;
  for (std::size_t len = 0;; ++len) {
    BigInt total = 0;
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (static_cast<int>(s % prefix_states) != prefix.dead_state()) {
        total += current[s];
      }
    }
    out.push_back(total);
    if (len == max_length) {
      break;
    }
    std::vector<BigInt> next(current.size());
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (current[s] == 0) {
        continue;
      }
      const std::size_t ac = s / prefix_states;
      const int pre = static_cast<int>(s % prefix_states);
      if (pre == prefix.dead_state()) {
        continue;
      }
      for (Letter a = 1; a <= n; ++a) {
        const std::size_t ac_next = automaton.next(ac, a);
        if (automaton.forbidden(ac_next)) {
          continue;
        }
        next[product(ac_next, prefix.next(pre, a))] += current[s];
      }
    }
    current = std::move(next);
  }
  return out;
}

std::vector<BigInt> count_normal_forms(int n, std::size_t max_length) {
  const auto tails = count_tails(n, max_length);
  // cumulative[r] = tails[0] + ... + tails[r]
  std::vector<BigInt> cumulative(tails.size());
  BigInt running = 0;
  for (std::size_t r = 0; r < tails.size(); ++r) {
    running += tails[r];
    cumulative[r] = running;
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<BigInt> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    // eps = 0, j = 0: any i.
    BigInt total = cumulative[len];
    // eps = 0, j >= 1: the side condition forces i = 0.
    for (std::size_t used = un - 1; used <= len; used += un - 1) {
      total += tails[len - used];
    }
    // eps = 1: any i and j.
    for (std::size_t used = un; used <= len; used += un - 1) {
      total += cumulative[len - used];
    }
    out.push_back(total);
  }
  return out;
}

bool SeriesReport::consistent() const {
  return std::none_of(rows.begin(), rows.end(), [](const SeriesRow& r) { return r.mismatch(); });
}

SeriesReport series_report(int n, std::size_t max_length, const ExplorerConfig& config) {
  SeriesReport report;
  report.n = n;
  const auto forms = count_normal_forms(n, max_length);
  const auto avoiding = count_avoiding(n, max_length);
  const auto presentation = Presentation::cyclic(n);
  for (std::size_t len = 0; len <= max_length; ++len) {
    SeriesRow row;
    row.length = len;
    row.normal_forms = forms[len];
    row.avoiding = avoiding[len];
    const auto words = word_count(n, len);
    if (words && *words <= config.budget) {
      const auto table = build_table(presentation, len, config);
      row.explorer_classes = table.class_count();
      row.explorer_singletons = table.singleton_count();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json to_json(const SeriesReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"length", row.length},
                     {"normal_forms", row.normal_forms.str()},
                     {"avoiding", row.avoiding.str()},
                     {"mismatch", row.mismatch()}};
    j["explorer_classes"] = row.explorer_classes ? nlohmann::json(*row.explorer_classes) : nlohmann::json();
    j["explorer_singletons"] =
        row.explorer_singletons ? nlohmann::json(*row.explorer_singletons) : nlohmann::json();
    rows.push_back(std::move(j));
  }
  return {{"n", r.n}, {"consistent", r.consistent()}, {"rows", rows}};
}

}  // namespace permrel

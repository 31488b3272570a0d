#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "permrel/explorer.hpp"
#include "permrel/word.hpp"

namespace permrel {

using BigInt = boost::multiprecision::cpp_int;

/// Aho-Corasick automaton over {1..alphabet} recognising occurrences of a
/// finite set of factors. A state is forbidden when the input read so far
/// ends with one of the factors; since forbidden states are absorbing for
/// counting purposes, a word avoids every factor iff its run never enters one.
class FactorAutomaton {
 public:
  FactorAutomaton(int alphabet, const std::vector<Word>& factors);

  /// The n cyclic rotations of a_1 a_2 ... a_n.
  static FactorAutomaton rotations(int n);

  int alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return forbidden_.size(); }
  std::size_t start() const noexcept { return 0; }
  std::size_t next(std::size_t state, Letter a) const {
    return delta_[state * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(a - 1)];
  }
  bool forbidden(std::size_t state) const { return forbidden_[state]; }

  bool avoids(const Word& w) const;

 private:
  int alphabet_;
  std::vector<std::size_t> delta_;
  std::vector<bool> forbidden_;
};

/// Entry l: words of length l avoiding every rotation of a_1...a_n. Requires n >= 3.
std::vector<BigInt> count_avoiding(int n, std::size_t max_length);

/// Entry l: admissible tails of length l, i.e. words avoiding every rotation
/// that neither start with a_1 nor with a_2...a_n.
std::vector<BigInt> count_tails(int n, std::size_t max_length);

/// Entry l: NormalForm quadruples (i, eps, j, tail) of total length l.
std::vector<BigInt> count_normal_forms(int n, std::size_t max_length);

struct SeriesRow {
  std::size_t length = 0;
  BigInt normal_forms;
  BigInt avoiding;
  std::optional<std::uint64_t> explorer_classes;     // within budget only
  std::optional<std::uint64_t> explorer_singletons;  // within budget only

  bool mismatch() const {
    return (explorer_classes && BigInt(*explorer_classes) != normal_forms) ||
           (explorer_singletons && BigInt(*explorer_singletons) != avoiding);
  }
};

struct SeriesReport {
  int n = 0;
  std::vector<SeriesRow> rows;

  bool consistent() const;
};

/// Tabulates both counters and, where n^l fits the budget, the explorer's
/// class and singleton counts for H_0.
SeriesReport series_report(int n, std::size_t max_length, const ExplorerConfig& config = {});

nlohmann::json to_json(const SeriesReport& r);

}  // namespace permrel

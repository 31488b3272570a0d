#include "permrel/explorer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "permrel/errors.hpp"

namespace permrel {

std::optional<std::uint64_t> word_count(int n, std::size_t length) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      return std::nullopt;
    }
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

namespace {

constexpr std::uint64_t kIndexLimit = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_word_count(int n, std::size_t length, const ExplorerConfig& config) {
  const auto count = word_count(n, length);
  const std::uint64_t budget = std::min(config.budget, kIndexLimit);
  if (!count || *count > budget) {
    throw BudgetError(count.value_or(std::numeric_limits<std::uint64_t>::max()), budget);
  }
  return *count;
}

// Union by size with path halving.
struct DisjointSets {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit DisjointSets(std::uint64_t count) : parent(count), size(count, 1) {
    std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (size[a] < size[b]) {
      std::swap(a, b);
    }
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

CongruenceTable build_table(const Presentation& p, std::size_t length,
                            const ExplorerConfig& config) {
  const int n = p.rank();
  const std::uint64_t count = checked_word_count(n, length, config);
  const auto un = static_cast<std::uint64_t>(n);
  const auto width = static_cast<std::size_t>(n);

  CongruenceTable table(p, length);
  DisjointSets sets(count);

  if (length >= width && !p.relations().empty()) {
    // place[k] = n^(length-1-k), the weight of position k.
    std::vector<std::uint64_t> place(length);
    std::uint64_t weight = 1;
    for (std::size_t k = length; k-- > 0;) {
      place[k] = weight;
      weight *= un;
    }
    const std::size_t positions = length - width + 1;
    std::vector<std::uint64_t> lhs_value(positions, 0);
    std::vector<std::vector<std::uint64_t>> rhs_value(
        p.relations().size(), std::vector<std::uint64_t>(positions, 0));
    for (std::size_t pos = 0; pos < positions; ++pos) {
      for (std::size_t t = 0; t < width; ++t) {
        lhs_value[pos] += t * place[pos + t];
        for (std::size_t r = 0; r < p.relations().size(); ++r) {
          rhs_value[r][pos] +=
              static_cast<std::uint64_t>(p.relations()[r].second[t] - 1) * place[pos + t];
        }
      }
    }

    std::vector<std::size_t> digits(length, 0);
    for (std::uint64_t index = 0; index < count; ++index) {
      for (std::size_t pos = 0; pos < positions; ++pos) {
        bool hit = true;
        for (std::size_t t = 0; t < width && hit; ++t) {
          hit = digits[pos + t] == t;
        }
        if (!hit) {
          continue;
        }
        for (std::size_t r = 0; r < rhs_value.size(); ++r) {
          const std::uint64_t other = index - lhs_value[pos] + rhs_value[r][pos];
          sets.unite(static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(other));
        }
      }
      for (std::size_t k = length; k-- > 0;) {
        if (++digits[k] < width) {
          break;
        }
        digits[k] = 0;
      }
    }
  }

  // Relabel every class by its least member.
  auto& parent = sets.parent;
  auto& scratch = sets.size;
  for (std::uint64_t i = 0; i < count; ++i) {
    parent[i] = sets.find(static_cast<std::uint32_t>(i));
  }
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::fill(scratch.begin(), scratch.end(), kUnset);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (scratch[parent[i]] == kUnset) {
      scratch[parent[i]] = static_cast<std::uint32_t>(i);
    }
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    parent[i] = scratch[parent[i]];
  }
  std::fill(scratch.begin(), scratch.end(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    ++scratch[parent[i]];
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    if (parent[i] == i) {
      ++table.class_count_;
      if (scratch[i] == 1) {
        ++table.singleton_count_;
      }
    }
  }
  table.representative_ = std::move(parent);
  table.class_size_ = std::move(scratch);
  return table;
}

void CongruenceTable::require_word(const Word& w) const {
  if (w.size() != length_) {
    throw PreconditionError("word " + to_string(w) + " has length " + std::to_string(w.size()) +
                            ", table length is " + std::to_string(length_));
  }
  if (!letters_within(w, rank())) {
    throw PreconditionError("word " + to_string(w) + " has letters outside [1, " +
                            std::to_string(rank()) + "]");
  }
}

std::uint64_t CongruenceTable::index_of(const Word& w) const {
  require_word(w);
  std::uint64_t index = 0;
  for (Letter a : w) {
    index = index * static_cast<std::uint64_t>(rank()) + static_cast<std::uint64_t>(a - 1);
  }
  return index;
}

Word CongruenceTable::word_at(std::uint64_t index) const {
  std::vector<Letter> letters(length_);
  const auto un = static_cast<std::uint64_t>(rank());
  for (std::size_t k = length_; k-- > 0;) {
    letters[k] = static_cast<Letter>(index % un) + 1;
    index /= un;
  }
  return Word(std::move(letters));
}

std::uint64_t CongruenceTable::class_of(const Word& w) const {
  return representative_[index_of(w)];
}

Word CongruenceTable::representative(const Word& w) const { return word_at(class_of(w)); }

std::size_t CongruenceTable::class_size(const Word& w) const { return class_size_[class_of(w)]; }

bool CongruenceTable::equal(const Word& u, const Word& v) const {
  return class_of(u) == class_of(v);
}

std::vector<Word> CongruenceTable::representatives() const {
  std::vector<Word> out;
  out.reserve(class_count_);
  for (std::uint64_t i = 0; i < representative_.size(); ++i) {
    if (representative_[i] == i) {
      out.push_back(word_at(i));
    }
  }
  return out;
}

void CongruenceTable::write_csv(std::ostream& out) const {
  auto cell = [](const Word& w) {
    std::string s;
    for (Letter a : w) {
      s += std::to_string(a);
    }
    return s;
  };
  out << "word,representative\n";
  for (std::uint64_t i = 0; i < representative_.size(); ++i) {
    out << cell(word_at(i)) << ',' << cell(word_at(representative_[i])) << '\n';
  }
}

bool oracle_equal(const CongruenceTable& t, const Word& u, const Word& v) { return t.equal(u, v); }

std::vector<std::uint64_t> growth(const Presentation& p, std::size_t max_length,
                                  const ExplorerConfig& config) {
  std::vector<std::uint64_t> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    out.push_back(build_table(p, len, config).class_count());
  }
  return out;
}

bool check_commutation_after_z(const Presentation& p, int i, int j, const ExplorerConfig& config) {
  const int n = p.rank();
  if (i < 1 || j < 1 || i > n || j > n) {
    throw PreconditionError("generator index out of range");
  }
  const auto table = build_table(p, static_cast<std::size_t>(n) + 2, config);
  const Word z = central_word(n);
  return table.equal(z + Word{i, j}, z + Word{j, i});
}

bool check_sym_identity(int n, int i, int j, const ExplorerConfig& config) {
  if (!(1 <= i && i < j && j <= n)) {
    throw PreconditionError("check_sym_identity needs 1 <= i < j <= n");
  }
  return check_commutation_after_z(Presentation::symmetric(n), i, j, config);
}

bool z_is_central(const Presentation& p, const ExplorerConfig& config) {
  const int n = p.rank();
  const auto table = build_table(p, static_cast<std::size_t>(n) + 1, config);
  const Word z = central_word(n);
  for (Letter k = 1; k <= n; ++k) {
    if (!table.equal(z + Word{k}, Word{k} + z)) {
      return false;
    }
  }
  return true;
}

RhoResult rho_related(const Presentation& p, const Word& s, const Word& t, std::size_t max_power,
                      const ExplorerConfig& config) {
  if (s.size() != t.size()) {
    throw PreconditionError("rho_related needs words of equal length");
  }
  const int n = p.rank();
  if (!letters_within(s, n) || !letters_within(t, n)) {
    throw PreconditionError("letters outside [1, " + std::to_string(n) + "]");
  }
  if (!z_is_central(p, config)) {
    throw CentralityError("z = a_1...a_n is not central in this presentation");
  }
  const Word z = central_word(n);
  for (std::size_t power = 0; power <= max_power; ++power) {
    if (s == t) {
      return {RhoVerdict::Related, power};
    }
    const Word zp = permrel::power(z, power);
    const auto table = build_table(p, s.size() + zp.size(), config);
    if (table.equal(s + zp, t + zp)) {
      return {RhoVerdict::Related, power};
    }
  }
  return {RhoVerdict::Unknown, std::nullopt};
}

std::vector<std::uint64_t> rho_growth(const Presentation& p, std::size_t max_length,
                                      std::size_t power, const ExplorerConfig& config) {
  const int n = p.rank();
  const Word zp = permrel::power(central_word(n), power);
  std::vector<std::uint64_t> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    const auto table = build_table(p, len + zp.size(), config);
    const std::uint64_t suffix_weight = *word_count(n, zp.size());
    std::uint64_t suffix_index = 0;
    for (Letter a : zp) {
      suffix_index = suffix_index * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(a - 1);
    }
    const std::uint64_t words = *word_count(n, len);
    std::set<std::uint64_t> classes;
    for (std::uint64_t w = 0; w < words; ++w) {
      classes.insert(table.class_of(table.word_at(w * suffix_weight + suffix_index)));
    }
    out.push_back(classes.size());
  }
  return out;
}

std::optional<CancellationFailure> find_cancellation_failure(const Presentation& p, std::size_t length,
                                                             const ExplorerConfig& config) {
  const int n = p.rank();
  const auto base = build_table(p, length, config);
  const auto extended = build_table(p, length + 1, config);
  for (bool on_right : {true, false}) {
    for (Letter a = 1; a <= n; ++a) {
      // class of the product -> class of the first cofactor seen with it
      std::map<std::uint64_t, std::uint64_t> seen;
      for (std::uint64_t index = 0; index < base.word_count(); ++index) {
        const Word u = base.word_at(index);
        const std::uint64_t product = extended.class_of(on_right ? u + Word{a} : Word{a} + u);
        const std::uint64_t cls = base.class_of(u);
        auto [it, inserted] = seen.emplace(product, cls);
        if (!inserted && it->second != cls) {
          return CancellationFailure{base.word_at(it->second), base.word_at(cls), a, on_right};
        }
      }
    }
  }
  return std::nullopt;
}

StabilizerReduction stabilizer_reduction(const PermutationSet& h) {
  const int n = h.degree();
  if (n < 3) {
    throw PreconditionError("stabilizer_reduction needs n >= 3");
  }
  if (!h.contains(Permutation::full_cycle(n))) {
    throw PreconditionError("H must contain the cycle (1, 2, ..., n)");
  }

  std::vector<Permutation> stabilizer;
  for (const auto& chi : h.members()) {
    if (chi(1) != 1) {
      continue;
    }
    std::vector<int> images;
    for (int k = 2; k <= n; ++k) {
      images.push_back(chi(k) - 1);
    }
    stabilizer.emplace_back(std::move(images));
  }

  // Every tau in H gives a_2...a_n = a_tau(k+1)...a_tau(n) a_tau(1)...a_tau(k-1)
  // where tau(k) = 1, relabelled by a_m -> a_{m-1}.
  const Word lhs = central_word(n - 1);
  std::set<Relation> relations;
  for (const auto& tau : h.members()) {
    int k = 1;
    while (tau(k) != 1) {
      ++k;
    }
    Word rhs;
    for (int m = k + 1; m <= n; ++m) {
      rhs.push_back(tau(m) - 1);
    }
    for (int m = 1; m < k; ++m) {
      rhs.push_back(tau(m) - 1);
    }
    if (rhs != lhs) {
      relations.emplace(lhs, std::move(rhs));
    }
  }

  return {h, PermutationSet(n - 1, std::move(stabilizer)),
          std::vector<Relation>(relations.begin(), relations.end())};
}

}  // namespace permrel

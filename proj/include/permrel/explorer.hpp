#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "permrel/presentation.hpp"

namespace permrel {

struct ExplorerConfig {
  /// Largest number of words a single table may enumerate.
  std::uint64_t budget = 100'000'000;
};

/// n^length, or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> word_count(int n, std::size_t length);

/// The congruence generated by a presentation, restricted to the words of one
/// fixed length. Relations are homogeneous, so this stratum is closed under
/// relation moves and the table is exact.
///
/// Words are indexed by their base-n value with a_1 as digit 0, so index
/// order is lexicographic order and each class is represented by its
/// least-index (length-lex minimal) member.
class CongruenceTable {
 public:
  const Presentation& presentation() const noexcept { return presentation_; }
  int rank() const noexcept { return presentation_.rank(); }
  std::size_t length() const noexcept { return length_; }
  std::uint64_t word_count() const noexcept { return representative_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  /// Classes with exactly one member.
  std::size_t singleton_count() const noexcept { return singleton_count_; }

  std::uint64_t index_of(const Word& w) const;
  Word word_at(std::uint64_t index) const;

  /// Index of the class representative of w.
  std::uint64_t class_of(const Word& w) const;
  Word representative(const Word& w) const;
  std::size_t class_size(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;

  /// Representatives in increasing order.
  std::vector<Word> representatives() const;

  /// "word,representative" rows with a header line.
  void write_csv(std::ostream& out) const;

 private:
  friend CongruenceTable build_table(const Presentation&, std::size_t, const ExplorerConfig&);

  CongruenceTable(Presentation p, std::size_t length) : presentation_(std::move(p)), length_(length) {}
  void require_word(const Word& w) const;

  Presentation presentation_;
  std::size_t length_;
  std::vector<std::uint32_t> representative_;
  std::vector<std::uint32_t> class_size_;  // indexed by representative
  std::size_t class_count_ = 0;
  std::size_t singleton_count_ = 0;
};

/// Throws BudgetError when n^length exceeds the budget.
CongruenceTable build_table(const Presentation& p, std::size_t length,
                            const ExplorerConfig& config = {});

/// Same class in t. Throws PreconditionError unless |u| = |v| = t.length().
bool oracle_equal(const CongruenceTable& t, const Word& u, const Word& v);

/// Class counts for lengths 0..max_length.
std::vector<std::uint64_t> growth(const Presentation& p, std::size_t max_length,
                                  const ExplorerConfig& config = {});

/// z a_i a_j and z a_j a_i in the same class of the length-(n+2) table.
bool check_commutation_after_z(const Presentation& p, int i, int j,
                               const ExplorerConfig& config = {});
/// check_commutation_after_z for S_n(Sym_n). Requires 1 <= i < j <= n.
bool check_sym_identity(int n, int i, int j, const ExplorerConfig& config = {});

/// z a_k = a_k z for every generator, checked on the length-(n+1) table.
bool z_is_central(const Presentation& p, const ExplorerConfig& config = {});

enum class RhoVerdict { Related, Unknown };

struct RhoResult {
  RhoVerdict verdict = RhoVerdict::Unknown;
  /// Least power i with s z^i = t z^i, when related.
  std::optional<std::size_t> power;
};

/// Bounded search for s z^i = t z^i, i <= max_power. Throws
/// PreconditionError when |s| != |t|, CentralityError when z fails the
/// centrality check, BudgetError when a needed table is too large.
RhoResult rho_related(const Presentation& p, const Word& s, const Word& t,
                      std::size_t max_power, const ExplorerConfig& config = {});

/// For each length 0..max_length, the number of classes of words w under
/// w ~ w' iff w z^power = w' z^power.
std::vector<std::uint64_t> rho_growth(const Presentation& p, std::size_t max_length,
                                      std::size_t power, const ExplorerConfig& config = {});

/// Words u != v (in S_n(H)) of equal length with u a = v a (right) or
/// a u = a v (left) for a single generator a.
struct CancellationFailure {
  Word u;
  Word v;
  Letter letter = 1;
  bool on_right = true;
};

/// Searches the length-`length` stratum for a failure of one-letter
/// cancellation. Cancelling a longer factor reduces to repeated one-letter
/// cancellation, so absence here means S_n(H) is cancellative for words of
/// this length. Needs tables at `length` and `length + 1`.
std::optional<CancellationFailure> find_cancellation_failure(const Presentation& p, std::size_t length,
                                                             const ExplorerConfig& config = {});

/// Passage from S_n(H) with H containing the full cycle to the presentation
/// on n-1 generators indexed by the stabilizer of 1.
struct StabilizerReduction {
  PermutationSet h;
  /// {x in H | x(1) = 1} restricted to {2..n} and relabelled to {1..n-1}.
  PermutationSet h1;
  /// Non-trivial relations a_1...a_{n-1} = ..., deduplicated, in the
  /// relabelled alphabet.
  std::vector<Relation> induced_relations;

  Presentation induced_presentation() const { return Presentation(h1); }
};

/// Throws PreconditionError when h lacks (1, 2, ..., n) or n < 3.
StabilizerReduction stabilizer_reduction(const PermutationSet& h);

}  // namespace permrel

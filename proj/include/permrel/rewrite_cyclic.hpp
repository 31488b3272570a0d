#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permrel/word.hpp"

namespace permrel {

/// Rotation rules t_i rewrite a_{i+1}...a_n a_1...a_i to a_1...a_n.
/// Shift rules r_{j,m} rewrite a_j a_1^m a_2...a_n to a_1...a_n a_j a_1^{m-1}.
enum class RuleFamily { Rotation, Shift };

/// A rule instance without a position: T(index) or R(index, run).
struct Rule {
  RuleFamily family = RuleFamily::Rotation;
  int index = 1;  // i for T(i), j for R(j, m)
  int run = 0;    // m for R(j, m); 0 for rotations

  static Rule rotation(int i) { return {RuleFamily::Rotation, i, 0}; }
  static Rule shift(int j, int m) { return {RuleFamily::Shift, j, m}; }

  /// Length of the left-hand side: n for T, n + m for R.
  std::size_t span(int n) const {
    return static_cast<std::size_t>(n + (family == RuleFamily::Shift ? run : 0));
  }
  /// Left-hand side pattern.
  Word lhs(int n) const;
  /// Right-hand side; a permutation of lhs(n).
  Word rhs(int n) const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Order used when listing redexes at the same position: T before R, then
/// larger runs first.
bool rule_precedes(const Rule& a, const Rule& b);

std::string to_string(const Rule& r);

/// An occurrence of a rule's left-hand side in a host word.
struct Redex {
  Rule rule;
  std::size_t position = 0;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// The form a_1^i z^eps (a_2...a_n)^j tail with j >= 1 => eps = 1 or i = 0.
struct NormalForm {
  std::size_t i = 0;
  int eps = 0;
  std::size_t j = 0;
  Word tail;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Concatenates a_1^i z^eps (a_2...a_n)^j tail.
Word assemble(const NormalForm& nf, int n);

struct RuleOptions {
  /// Admits the excluded rule R(n, 1). Only used as a negative control for
  /// the overlap checker.
  bool allow_degenerate_shift = false;
};

/// Result of running a rewrite strategy to a terminal word.
struct RewriteTrace {
  Word result;
  std::size_t steps = 0;
};

/// Confluent, length-preserving rewriting system for S_n = S_n(<(1,...,n)>),
/// n >= 3. Rewrites strictly decrease words in length-lex order, so every
/// strategy terminates; the terminal word is the least representative.
class CyclicMonoid {
 public:
  /// Throws PreconditionError for n < 3.
  explicit CyclicMonoid(int n, RuleOptions options = {});

  int rank() const noexcept { return n_; }
  const RuleOptions& options() const noexcept { return options_; }

  /// z = a_1 ... a_n.
  Word z() const { return central_word(n_); }

  /// Every redex of w, sorted by position, T before R, larger m first.
  std::vector<Redex> find_redexes(const Word& w) const;
  /// Redexes starting exactly at `pos`, in the same order.
  std::vector<Redex> redexes_at(const Word& w, std::size_t pos) const;
  /// Leftmost redex at or after `from`.
  std::optional<Redex> first_redex(const Word& w, std::size_t from = 0) const;

  bool matches(const Word& w, const Redex& r) const;

  /// Replaces the redex by the rule's right-hand side. Throws
  /// PreconditionError when r does not occur in w as claimed.
  Word apply(const Word& w, const Redex& r) const;

  /// Leftmost-redex strategy to the terminal (irreducible) word.
  Word normal_form(const Word& w) const { return normal_form_trace(w).result; }
  RewriteTrace normal_form_trace(const Word& w) const;
  /// Applies a uniformly chosen redex at each step.
  RewriteTrace random_normal_form(const Word& w, std::mt19937_64& rng) const;

  bool is_irreducible(const Word& w) const { return !first_redex(w).has_value(); }

  /// Parses an irreducible word as a NormalForm. Throws PreconditionError if
  /// w is reducible.
  NormalForm decompose(const Word& w) const;

  Word multiply(const Word& u, const Word& v) const { return normal_form(u + v); }
  bool equal(const Word& u, const Word& v) const {
    return u.size() == v.size() && normal_form(u) == normal_form(v);
  }

  /// Membership in the ideal P = z S_n.
  bool is_in_P(const Word& w) const { return decompose(normal_form(w)).eps == 1; }

  /// Least i with a a_i a_i b outside P. Requires a, b outside P.
  int prime_witness(const Word& a, const Word& b) const;

 private:
  void require_letters(const Word& w) const;

  int n_;
  RuleOptions options_;
};

}  // namespace permrel

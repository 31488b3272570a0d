#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permrel {

/// A bijection of {1, ..., n} in one-line notation: images()[k-1] = p(k).
class Permutation {
 public:
  /// Throws PreconditionError unless `images` lists each of 1..n once.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The full cycle (1, 2, ..., n), i.e. one-line images 2, 3, ..., n, 1.
  static Permutation full_cycle(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Composition, right factor applied first: (p * q)(k) = p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Accepts one-line images "2,3,1" or cycle notation "(1 2 3)(4 5)"; "()" is
/// the identity. Cycles may use spaces or commas between points.
Permutation parse_permutation(std::string_view text, int n);

/// One-line notation, comma separated.
std::string to_string(const Permutation& p);

/// The set H of permutations defining S_n(H). Members are kept sorted and
/// unique; is_subgroup() reports whether the set is closed under composition
/// (for a finite set that makes it a subgroup).
class PermutationSet {
 public:
  PermutationSet(int n, std::vector<Permutation> members);

  /// The subgroup generated by `generators`.
  static PermutationSet generated_by(int n, std::span<const Permutation> generators);

  /// H_0 = <(1, 2, ..., n)>.
  static PermutationSet cyclic(int n);
  static PermutationSet symmetric(int n);
  static PermutationSet trivial(int n);

  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Permutation>& members() const noexcept { return members_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup() const noexcept { return is_subgroup_; }

  friend bool operator==(const PermutationSet& a, const PermutationSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<Permutation> members_;
  bool is_subgroup_ = false;
};

/// Closes `generators` under composition, starting from the identity.
/// Throws PreconditionError on mixed degrees.
PermutationSet close_under_group(int n, std::span<const Permutation> generators);

}  // namespace permrel

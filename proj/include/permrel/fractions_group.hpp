#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "permrel/word.hpp"

namespace permrel {

/// x_generator^exponent.
struct Syllable {
  int generator = 1;
  long exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in the free group on x_1, ..., x_{n-1}, stored as
/// syllables. Adjacent syllables always have distinct generators and no
/// exponent is zero, so equality of elements is equality of syllable lists.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `syllables`.
  explicit FreeWord(const std::vector<Syllable>& syllables);

  static FreeWord generator(int g, long exponent = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  /// Multiplies on the right by x_g^e, reducing as it goes.
  void append(Syllable s);
  FreeWord inverse() const;

  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Element (f, c^k) of F_{n-1} x Z, the group of fractions of S_n.
struct GroupElement {
  FreeWord free_part;
  long c_exp = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2);
GroupElement group_inv(const GroupElement& g);

/// Homomorphism S_n -> F x C: a_k -> x_k for k < n, a_n -> x_n c with
/// x_n = (x_1 ... x_{n-1})^{-1}. Requires n >= 3.
GroupElement phi(const Word& w, int n);

/// Generator assignment of the inverse map: x_k -> a_k, c -> a_1...a_n.
struct GeneratorImages {
  std::vector<Word> x;  // x[k-1] is the image of x_k
  Word c;
};

GeneratorImages psi_on_generators(int n);

/// phi(psi(g)) == g for every generator g of F x C.
bool verify_phi_psi_on_generators(int n);

/// Extends psi to elements with non-negative exponents, which land in the
/// monoid. Throws PreconditionError for negative exponents.
Word psi_monoid(const GroupElement& g, int n);

/// Equality in S_n decided in the group of fractions.
bool equal_via_group(const Word& u, const Word& v, int n);

/// "x2^-1 x1^-1 ; c^1"; the identity free part renders as "1".
std::string to_string(const GroupElement& g);

/// {"syllables": [[gen, exp], ...], "c": int}
nlohmann::json to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

}  // namespace permrel

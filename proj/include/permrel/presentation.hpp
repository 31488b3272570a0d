#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permrel/permutation.hpp"
#include "permrel/word.hpp"

namespace permrel {

/// One defining relation (left, right); both sides have length n.
using Relation = std::pair<Word, Word>;

/// The monoid presentation S_n(H) = < a_1..a_n | a_1...a_n = a_s(1)...a_s(n), s in H >.
class Presentation {
 public:
  explicit Presentation(PermutationSet h);

  static Presentation cyclic(int n) { return Presentation(PermutationSet::cyclic(n)); }
  static Presentation symmetric(int n) { return Presentation(PermutationSet::symmetric(n)); }
  static Presentation free(int n) { return Presentation(PermutationSet::trivial(n)); }

  int rank() const noexcept { return h_.degree(); }
  const PermutationSet& permutations() const noexcept { return h_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

 private:
  PermutationSet h_;
  std::vector<Relation> relations_;
};

/// One pair (1 2 ... n, s(1) s(2) ... s(n)) per non-identity s in H.
std::vector<Relation> relations_of(const Presentation& p);

/// Parses an H specification: "cyclic", "sym", "trivial", a ';'-separated
/// generator list ("2,3,1;2,1,3" or "(1 2 3);(1 2)") whose generated
/// subgroup is taken, or "set:" followed by such a list to use the listed
/// members as an arbitrary subset without closing.
PermutationSet parse_h_spec(std::string_view spec, int n);

/// {"n": n, "members": [[...], ...], "is_subgroup": bool}
nlohmann::json to_json(const Presentation& p);

/// Accepts {"n", "generators"} (closed to a subgroup) or {"n", "members"}
/// (taken as given). Throws ParseError on schema violations.
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace permrel

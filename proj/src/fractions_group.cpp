#include "permrel/fractions_group.hpp"

#include <algorithm>

#include "permrel/errors.hpp"

namespace permrel {

FreeWord::FreeWord(const std::vector<Syllable>& syllables) {
  for (const auto& s : syllables) {
    append(s);
  }
}

FreeWord FreeWord::generator(int g, long exponent) {
  FreeWord w;
  w.append({g, exponent});
  return w;
}

void FreeWord::append(Syllable s) {
  if (s.exponent == 0) {
    return;
  }
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) {
      syllables_.pop_back();
    }
    return;
  }
  syllables_.push_back(s);
}

FreeWord FreeWord::inverse() const {
  FreeWord inv;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    inv.syllables_.push_back({it->generator, -it->exponent});
  }
  return inv;
}

FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
  for (const auto& s : rhs.syllables_) {
    lhs.append(s);
  }
  return lhs;
}

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2) {
  return {g1.free_part * g2.free_part, g1.c_exp + g2.c_exp};
}

GroupElement group_inv(const GroupElement& g) {
  return {g.free_part.inverse(), -g.c_exp};
}

GroupElement phi(const Word& w, int n) {
  if (n < 3) {
    throw PreconditionError("phi needs n >= 3");
  }
  if (!letters_within(w, n)) {
    throw PreconditionError("word " + to_string(w) + " has letters outside [1, " +
                            std::to_string(n) + "]");
  }
  GroupElement g;
  for (Letter a : w) {
    if (a < n) {
      g.free_part.append({a, 1});
    } else {
      for (int k = n - 1; k >= 1; --k) {
        g.free_part.append({k, -1});
      }
      ++g.c_exp;
    }
  }
  return g;
}

GeneratorImages psi_on_generators(int n) {
  if (n < 3) {
    throw PreconditionError("psi needs n >= 3");
  }
  GeneratorImages images;
  for (Letter k = 1; k <= n - 1; ++k) {
    images.x.push_back(Word{k});
  }
  images.c = central_word(n);
  return images;
}

bool verify_phi_psi_on_generators(int n) {
  const auto images = psi_on_generators(n);
  for (int k = 1; k <= n - 1; ++k) {
    if (phi(images.x[static_cast<std::size_t>(k - 1)], n) !=
        GroupElement{FreeWord::generator(k), 0}) {
      return false;
    }
  }
  return phi(images.c, n) == GroupElement{FreeWord{}, 1};
}

Word psi_monoid(const GroupElement& g, int n) {
  const auto images = psi_on_generators(n);
  if (g.c_exp < 0) {
    throw PreconditionError("negative c exponent has no preimage in S_n");
  }
  Word w;
  for (const auto& s : g.free_part.syllables()) {
    if (s.exponent < 0) {
      throw PreconditionError("negative exponent has no preimage in S_n");
    }
    if (s.generator < 1 || s.generator > n - 1) {
      throw PreconditionError("free generator out of range");
    }
    w += power(images.x[static_cast<std::size_t>(s.generator - 1)],
               static_cast<std::size_t>(s.exponent));
  }
  w += power(images.c, static_cast<std::size_t>(g.c_exp));
  return w;
}

bool equal_via_group(const Word& u, const Word& v, int n) { return phi(u, n) == phi(v, n); }

std::string to_string(const GroupElement& g) {
  std::string out;
  for (const auto& s : g.free_part.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'x' + std::to_string(s.generator);
    if (s.exponent != 1) {
      out += '^' + std::to_string(s.exponent);
    }
  }
  if (out.empty()) {
    out = "1";
  }
  return out + " ; c^" + std::to_string(g.c_exp);
}

nlohmann::json to_json(const GroupElement& g) {
  nlohmann::json syllables = nlohmann::json::array();
  for (const auto& s : g.free_part.syllables()) {
    syllables.push_back({s.generator, s.exponent});
  }
  return {{"syllables", syllables}, {"c", g.c_exp}};
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  try {
    std::vector<Syllable> syllables;
    for (const auto& pair : j.at("syllables")) {
      syllables.push_back({pair.at(0).get<int>(), pair.at(1).get<long>()});
    }
    return {FreeWord(syllables), j.at("c").get<long>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group element JSON: ") + e.what());
  }
}

}  // namespace permrel

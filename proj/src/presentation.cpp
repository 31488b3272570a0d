#include "permrel/presentation.hpp"

#include "permrel/errors.hpp"

namespace permrel {

namespace {

std::vector<Relation> build_relations(const PermutationSet& h) {
  const Word lhs = central_word(h.degree());
  std::vector<Relation> out;
  for (const auto& sigma : h.members()) {
    if (sigma.is_identity()) {
      continue;
    }
    out.emplace_back(lhs, Word(sigma.images()));
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return parts;
}

std::vector<Permutation> parse_list(std::string_view text, int n) {
  std::vector<Permutation> perms;
  for (auto part : split(text, ';')) {
    if (part.find_first_not_of(" \t") == std::string_view::npos) {
      continue;
    }
    perms.push_back(parse_permutation(part, n));
  }
  return perms;
}

}  // namespace

Presentation::Presentation(PermutationSet h)
    : h_(std::move(h)), relations_(build_relations(h_)) {}

std::vector<Relation> relations_of(const Presentation& p) { return p.relations(); }

PermutationSet parse_h_spec(std::string_view spec, int n) {
  if (n < 2) {
    throw PreconditionError("rank n must be at least 2");
  }
  if (spec == "cyclic") {
    return PermutationSet::cyclic(n);
  }
  if (spec == "sym") {
    return PermutationSet::symmetric(n);
  }
  if (spec == "trivial") {
    return PermutationSet::trivial(n);
  }
  if (spec.starts_with("set:")) {
    auto members = parse_list(spec.substr(4), n);
    if (members.empty()) {
      throw ParseError("empty permutation set");
    }
    return PermutationSet(n, std::move(members));
  }
  auto generators = parse_list(spec, n);
  return close_under_group(n, generators);
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& sigma : p.permutations().members()) {
    members.push_back(sigma.images());
  }
  return {{"n", p.rank()},
          {"members", members},
          {"is_subgroup", p.permutations().is_subgroup()}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 2) {
      throw ParseError("presentation rank must be at least 2");
    }
    auto read = [n](const nlohmann::json& arr) {
      std::vector<Permutation> perms;
      for (const auto& images : arr) {
        auto values = images.get<std::vector<int>>();
        if (static_cast<int>(values.size()) != n) {
          throw ParseError("permutation of wrong degree in presentation");
        }
        perms.emplace_back(std::move(values));
      }
      return perms;
    };
    if (j.contains("generators")) {
      auto gens = read(j.at("generators"));
      return Presentation(close_under_group(n, gens));
    }
    auto members = read(j.at("members"));
    if (members.empty()) {
      throw ParseError("empty member list");
    }
    return Presentation(PermutationSet(n, std::move(members)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
}

}  // namespace permrel

#include "permrel/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "permrel/errors.hpp"

namespace permrel {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("not a permutation of 1.." +
                              std::to_string(degree()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::full_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    images[static_cast<std::size_t>(k - 1)] = k % n + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("cannot compose permutations of different degree");
  }
  std::vector<int> images(p.images_.size());
  for (int k = 1; k <= p.degree(); ++k) {
    images[static_cast<std::size_t>(k - 1)] = p(q(k));
  }
  return Permutation(std::move(images));
}

namespace {

std::vector<int> read_ints(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("malformed permutation token '" + token + "'");
    }
    values.push_back(std::stoi(token));
  }
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    throw ParseError("empty permutation");
  }
  if (text[first] != '(') {
    auto images = read_ints(text);
    if (static_cast<int>(images.size()) != n) {
      throw ParseError("permutation '" + std::string(text) + "' has " +
                       std::to_string(images.size()) + " images, expected " +
                       std::to_string(n));
    }
    try {
      return Permutation(std::move(images));
    } catch (const PreconditionError&) {
      throw ParseError("'" + std::string(text) + "' is not a permutation");
    }
  }

  // Cycle notation; later cycles are applied first, as in (1 2)(2 3).
  Permutation result = Permutation::identity(n);
  std::size_t pos = first;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') {
      throw ParseError("malformed cycle notation '" + std::string(text) + "'");
    }
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    }
    auto points = read_ints(text.substr(pos + 1, close - pos - 1));
    std::vector<int> images = Permutation::identity(n).images();
    std::set<int> distinct(points.begin(), points.end());
    if (distinct.size() != points.size()) {
      throw ParseError("repeated point in cycle '" + std::string(text) + "'");
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
      int from = points[k];
      int to = points[(k + 1) % points.size()];
      if (from < 1 || from > n) {
        throw LetterRangeError("point " + std::to_string(from) +
                               " out of range [1, " + std::to_string(n) + "]");
      }
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    result = result * Permutation(std::move(images));
    pos = close + 1;
  }
  return result;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int k = 1; k <= p.degree(); ++k) {
    if (k != 1) {
      out += ',';
    }
    out += std::to_string(p(k));
  }
  return out;
}

PermutationSet::PermutationSet(int n, std::vector<Permutation> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1) {
    throw PreconditionError("permutation degree must be positive");
  }
  for (const auto& p : members_) {
    if (p.degree() != n) {
      throw PreconditionError("member " + to_string(p) + " has degree " +
                              std::to_string(p.degree()) + ", expected " +
                              std::to_string(n));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  is_subgroup_ = !members_.empty();
  for (const auto& p : members_) {
    for (const auto& q : members_) {
      if (!is_subgroup_) {
        break;
      }
      is_subgroup_ = contains(p * q);
    }
  }
}

bool PermutationSet::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

PermutationSet PermutationSet::generated_by(
    int n, std::span<const Permutation> generators) {
  return close_under_group(n, generators);
}

PermutationSet PermutationSet::cyclic(int n) {
  const Permutation sigma = Permutation::full_cycle(n);
  return close_under_group(n, std::span(&sigma, 1));
}

PermutationSet PermutationSet::symmetric(int n) {
  std::vector<int> images = Permutation::identity(n).images();
  std::vector<Permutation> members;
  do {
    members.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return PermutationSet(n, std::move(members));
}

PermutationSet PermutationSet::trivial(int n) {
  return PermutationSet(n, {Permutation::identity(n)});
}

PermutationSet close_under_group(int n, std::span<const Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw PreconditionError("generator " + to_string(g) + " has degree " +
                              std::to_string(g.degree()) + ", expected " +
                              std::to_string(n));
    }
  }
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    Permutation p = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * p;
      if (seen.insert(next).second) {
        frontier.push_back(std::move(next));
      }
    }
  }
  return PermutationSet(n, {seen.begin(), seen.end()});
}

}  // namespace permrel

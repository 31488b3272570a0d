#include "permrel/oracles.hpp"

#include <algorithm>
#include <deque>

namespace permrel::oracle {

std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> letters(length, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t k = length;
    while (k > 0 && letters[k - 1] == n) {
      letters[k - 1] = 1;
      --k;
    }
    if (k == 0) {
      return out;
    }
    ++letters[k - 1];
  }
}

Word random_word(std::mt19937_64& rng, int n, std::size_t length) {
  std::uniform_int_distribution<Letter> letter(1, n);
  Word w;
  for (std::size_t k = 0; k < length; ++k) {
    w.push_back(letter(rng));
  }
  return w;
}

bool contains_rotation(const Word& w, int n) {
  const auto width = static_cast<std::size_t>(n);
  for (std::size_t pos = 0; pos + width <= w.size(); ++pos) {
    bool rotation = true;
    for (std::size_t t = 1; t < width && rotation; ++t) {
      rotation = w[pos + t] == w[pos + t - 1] % n + 1;
    }
    if (rotation) {
      return true;
    }
  }
  return false;
}

namespace {

bool has_prefix(const Word& w, std::size_t at, const Word& prefix) {
  if (at + prefix.size() > w.size()) {
    return false;
  }
  return std::equal(prefix.begin(), prefix.end(), w.begin() + static_cast<long>(at));
}

}  // namespace

std::vector<NormalForm> constrained_parses(const Word& w, int n) {
  const Word z = central_word(n);
  const Word block = ascending_run(2, n);
  std::vector<NormalForm> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (!has_prefix(w, 0, letter_run(1, i))) {
      break;
    }
    for (int eps = 0; eps <= 1; ++eps) {
      std::size_t pos = i;
      if (eps == 1) {
        if (!has_prefix(w, pos, z)) {
          continue;
        }
        pos += z.size();
      }
      for (std::size_t j = 0;; ++j) {
        if (j > 0) {
          if (!has_prefix(w, pos, block)) {
            break;
          }
          pos += block.size();
        }
        if (j >= 1 && !(eps == 1 || i == 0)) {
          continue;
        }
        const Word tail = w.subword(pos, w.size() - pos);
        const bool tail_ok = !contains_rotation(tail, n) && !(tail.size() > 0 && tail[0] == 1) &&
                             !has_prefix(tail, 0, block);
        if (tail_ok) {
          out.push_back({i, eps, j, tail});
        }
      }
    }
  }
  return out;
}

std::set<Word> class_by_search(const Presentation& p, const Word& w) {
  std::vector<Word> sides;
  for (const auto& [lhs, rhs] : p.relations()) {
    sides.push_back(lhs);
    sides.push_back(rhs);
  }
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

  // All sides of all relations are pairwise equal, so any occurrence of one
  // side may be replaced by any other.
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  const auto width = static_cast<std::size_t>(p.rank());
  while (!queue.empty() && !p.relations().empty()) {
    const Word current = queue.front();
    queue.pop_front();
    for (std::size_t pos = 0; pos + width <= current.size(); ++pos) {
      const Word factor = current.subword(pos, width);
      if (!std::binary_search(sides.begin(), sides.end(), factor)) {
        continue;
      }
      for (const auto& replacement : sides) {
        std::vector<Letter> letters = current.letters();
        std::copy(replacement.begin(), replacement.end(), letters.begin() + static_cast<long>(pos));
        Word next(std::move(letters));
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

std::vector<Permutation> closure_by_products(int n, const std::vector<Permutation>& generators) {
  std::set<Permutation> members(generators.begin(), generators.end());
  members.insert(Permutation::identity(n));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> snapshot(members.begin(), members.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        grew = members.insert(a * b).second || grew;
      }
    }
  }
  return {members.begin(), members.end()};
}

bool in_P_by_table(const CongruenceTable& table, const Word& w) {
  const int n = table.rank();
  if (w.size() < static_cast<std::size_t>(n)) {
    return false;
  }
  const Word z = central_word(n);
  for (const auto& s : all_words(n, w.size() - z.size())) {
    if (table.equal(w, z + s)) {
      return true;
    }
  }
  return false;
}

Word random_relation_walk(const Presentation& p, Word w, std::size_t moves, std::mt19937_64& rng) {
  const auto width = static_cast<std::size_t>(p.rank());
  std::vector<Word> sides{central_word(p.rank())};
  for (const auto& rel : p.relations()) {
    sides.push_back(rel.second);
  }
  for (std::size_t step = 0; step < moves; ++step) {
    std::vector<std::size_t> spots;
    for (std::size_t pos = 0; pos + width <= w.size(); ++pos) {
      if (std::find(sides.begin(), sides.end(), w.subword(pos, width)) != sides.end()) {
        spots.push_back(pos);
      }
    }
    if (spots.empty()) {
      return w;
    }
    const std::size_t pos = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    const Word& replacement = sides[std::uniform_int_distribution<std::size_t>(0, sides.size() - 1)(rng)];
    std::vector<Letter> letters = w.letters();
    std::copy(replacement.begin(), replacement.end(), letters.begin() + static_cast<long>(pos));
    w = Word(std::move(letters));
  }
  return w;
}

}  // namespace permrel::oracle

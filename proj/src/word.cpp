#include "permrel/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "permrel/errors.hpp"

namespace permrel {

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(),
                                                rhs.begin(), rhs.end());
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos),
                                  letters_.begin() +
                                      static_cast<long>(pos + count)));
}

Word power(const Word& w, std::size_t k) {
  Word result;
  for (std::size_t i = 0; i < k; ++i) {
    result += w;
  }
  return result;
}

Word letter_run(Letter letter, std::size_t count) {
  return Word(std::vector<Letter>(count, letter));
}

Word central_word(int n) { return ascending_run(1, n); }

Word ascending_run(Letter from, Letter to) {
  Word w;
  for (Letter a = from; a <= to; ++a) {
    w.push_back(a);
  }
  return w;
}

bool letters_within(const Word& w, int n) noexcept {
  return std::all_of(w.begin(), w.end(),
                     [n](Letter a) { return a >= 1 && a <= n; });
}

std::vector<std::size_t> multidegree(const Word& w, int n) {
  std::vector<std::size_t> degree(static_cast<std::size_t>(n), 0);
  for (Letter a : w) {
    ++degree[static_cast<std::size_t>(a - 1)];
  }
  return degree;
}

namespace {

Letter parse_letter(std::string_view digits, std::string_view token, int n) {
  Letter value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    throw ParseError("malformed letter token '" + std::string(token) + "'");
  }
  if (value < 1 || value > n) {
    throw LetterRangeError("letter '" + std::string(token) +
                           "' out of range [1, " + std::to_string(n) + "]");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text, int n) {
  const bool symbolic = text.find_first_of("a.") != std::string_view::npos;
  std::string normalized(text);
  if (symbolic) {
    std::replace(normalized.begin(), normalized.end(), '.', ' ');
  }
  std::istringstream in(normalized);
  Word w;
  std::string token;
  while (in >> token) {
    std::string_view digits = token;
    if (symbolic) {
      if (digits.size() < 2 || digits.front() != 'a') {
        throw ParseError("malformed letter token '" + token +
                         "' (expected aK)");
      }
      digits.remove_prefix(1);
    }
    w.push_back(parse_letter(digits, token, n));
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) {
    return "ε";
  }
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != 0) {
      out += ' ';
    }
    out += std::to_string(w[k]);
  }
  return out;
}

}  // namespace permrel

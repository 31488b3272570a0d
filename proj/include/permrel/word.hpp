#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace permrel {

/// Generator index; a_k is encoded as k, so letters of a rank-n word lie in
/// [1, n].
using Letter = int;

/// A finite word over the generators. The empty word is the monoid identity.
///
/// Words compare in length-lexicographic order with a_1 < a_2 < ... < a_n,
/// which is the order the cyclic rewriting system decreases along.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  Word& operator+=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  void push_back(Letter a) { letters_.push_back(a); }

  /// Factor of length `count` starting at `pos`.
  Word subword(std::size_t pos, std::size_t count) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<Letter> letters_;
};

inline Word operator+(Word lhs, const Word& rhs) {
  lhs += rhs;
  return lhs;
}

/// `w` repeated `k` times.
Word power(const Word& w, std::size_t k);

/// a_letter^count.
Word letter_run(Letter letter, std::size_t count);

/// z = a_1 a_2 ... a_n.
Word central_word(int n);

/// a_from a_{from+1} ... a_to (empty when from > to).
Word ascending_run(Letter from, Letter to);

/// True when every letter lies in [1, n].
bool letters_within(const Word& w, int n) noexcept;

/// Number of occurrences of each letter; entry k-1 counts a_k.
std::vector<std::size_t> multidegree(const Word& w, int n);

/// Parses whitespace-separated integers ("2 3 1") or dot-separated "aK"
/// tokens ("a1.a1.a2"). Blank text is the empty word.
///
/// Throws ParseError on malformed tokens and LetterRangeError for letters
/// outside [1, n].
Word parse_word(std::string_view text, int n);

/// Space-separated letters; the empty word renders as "ε".
std::string to_string(const Word& w);

}  // namespace permrel

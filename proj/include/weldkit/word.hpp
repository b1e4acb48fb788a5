#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace weldkit {

// One letter of a free-group word: generator index and exponent (+1 or -1).
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in a free group. Every mutating operation keeps the
// word reduced, so two words are equal as group elements iff they compare
// equal.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(int gen, int exp = 1) { return Word{{gen, exp}}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l);
  Word& operator*=(const Word& rhs);
  Word inverse() const;

  // Number of occurrences of `gen`, and the sum of their exponents.
  std::size_t occurrences(int gen) const;
  int exponent_sum() const;

  // Image under the substitution gen -> images[gen].
  Word substitute(const std::vector<Word>& images) const;

  // Cyclically reduced conjugate (the word with matching inverse ends
  // stripped).
  Word cyclically_reduced() const;

  // Representative of the word's class under cyclic rotation and inversion.
  Word cyclic_normal_form() const;

  std::string to_string(const std::vector<std::string>& names) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

inline Word operator*(Word lhs, const Word& rhs) {
  lhs *= rhs;
  return lhs;
}

}  // namespace weldkit

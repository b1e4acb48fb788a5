#include "weldkit/word.hpp"

#include <algorithm>
#include <sstream>

namespace weldkit {

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push_back(l);
}

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) push_back(l);
}

void Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push_back(l);
  return *this;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

std::size_t Word::occurrences(int gen) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [gen](const Letter& l) { return l.gen == gen; }));
}

int Word::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.exp;
  return s;
}

Word Word::substitute(const std::vector<Word>& images) const {
  Word out;
  for (const auto& l : letters_) {
    const Word& img = images.at(static_cast<std::size_t>(l.gen));
    out *= (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

Word Word::cyclic_normal_form() const {
  const Word base = cyclically_reduced();
  if (base.empty()) return base;
  Word best = base;
  for (const Word& w : {base, base.inverse()}) {
    const auto& ls = w.letters_;
    for (std::size_t r = 0; r < ls.size(); ++r) {
      Word cand;
      cand.letters_.reserve(ls.size());
      for (std::size_t i = 0; i < ls.size(); ++i) {
        cand.letters_.push_back(ls[(r + i) % ls.size()]);
      }
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << names.at(static_cast<std::size_t>(l.gen));
    if (l.exp < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace weldkit

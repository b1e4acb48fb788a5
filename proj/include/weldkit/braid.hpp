#pragma once

// Welded braids acting on the free group F(x_1..x_m).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/word.hpp"

namespace weldkit {

struct BraidLetter {
  bool tau = false;  // sigma_i otherwise
  int index = 1;     // 1-based, at most m - 1
  int exp = 1;       // always +1 for tau
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;
  bool operator==(const BraidWord&) const = default;
};

class BraidError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tokens s<i>, S<i> (inverse) and t<i>, whitespace separated.
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& w);

// Images of x_1..x_m (generators 0..m-1).
struct FreeGroupAuto {
  std::vector<Word> images;
  bool operator==(const FreeGroupAuto&) const = default;
};

FreeGroupAuto identity_automorphism(int strands);
// (f then g): x -> g(f(x)) with f applied first.
FreeGroupAuto then(const FreeGroupAuto& f, const FreeGroupAuto& g);

// Letters act left to right: the word w1 w2 maps x to the image of x under
// w1 followed by w2, applied as substitutions into the images of w1.
FreeGroupAuto to_automorphism(const BraidWord& w);

bool are_equal(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
BraidWord compose(const BraidWord& a, const BraidWord& b);

// Least k <= kmax with w^k trivial.
std::optional<int> order_probe(const BraidWord& w, int kmax);

std::string format_automorphism(const FreeGroupAuto& f);

BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed);

}  // namespace weldkit

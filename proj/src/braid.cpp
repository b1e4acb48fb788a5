#include "weldkit/braid.hpp"

#include <random>
#include <sstream>

namespace weldkit {

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw BraidError("strand count must be at least 1");
  BraidWord w;
  w.strands = strands;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S' && tok[0] != 't')) {
      throw BraidError("bad braid token '" + tok + "'");
    }
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BraidError("bad braid token '" + tok + "'");
    }
    if (i < 1 || i > strands - 1) {
      throw BraidError("generator index out of range in '" + tok + "'");
    }
    w.letters.push_back({tok[0] == 't', i, tok[0] == 'S' ? -1 : 1});
  }
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.tau ? 't' : (l.exp > 0 ? 's' : 'S');
    out += std::to_string(l.index);
  }
  return out;
}

FreeGroupAuto identity_automorphism(int strands) {
  FreeGroupAuto f;
  for (int i = 0; i < strands; ++i) f.images.push_back(Word::generator(i));
  return f;
}

FreeGroupAuto then(const FreeGroupAuto& f, const FreeGroupAuto& g) {
  FreeGroupAuto out;
  for (const Word& w : f.images) out.images.push_back(w.substitute(g.images));
  return out;
}

namespace {

FreeGroupAuto letter_automorphism(const BraidLetter& l, int strands) {
  FreeGroupAuto f = identity_automorphism(strands);
  const int i = l.index - 1;
  const int j = l.index;
  auto x = [](int k, int e = 1) { return Word::generator(k, e); };
  if (l.tau) {
    f.images[static_cast<std::size_t>(i)] = x(j);
    f.images[static_cast<std::size_t>(j)] = x(i);
  } else if (l.exp > 0) {
    f.images[static_cast<std::size_t>(i)] = x(i) * x(j) * x(i, -1);
    f.images[static_cast<std::size_t>(j)] = x(i);
  } else {
    f.images[static_cast<std::size_t>(i)] = x(j);
    f.images[static_cast<std::size_t>(j)] = x(j, -1) * x(i) * x(j);
  }
  return f;
}

}  // namespace

FreeGroupAuto to_automorphism(const BraidWord& w) {
  FreeGroupAuto f = identity_automorphism(w.strands);
  for (const auto& l : w.letters) f = then(letter_automorphism(l, w.strands), f);
  return f;
}

bool are_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw BraidError("strand counts differ");
  return to_automorphism(a) == to_automorphism(b);
}

BraidWord invert(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    BraidLetter l = *it;
    if (!l.tau) l.exp = -l.exp;
    out.letters.push_back(l);
  }
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw BraidError("strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::optional<int> order_probe(const BraidWord& w, int kmax) {
  const FreeGroupAuto step = to_automorphism(w);
  const FreeGroupAuto id = identity_automorphism(w.strands);
  FreeGroupAuto power = step;
  for (int k = 1; k <= kmax; ++k) {
    if (power == id) return k;
    power = then(step, power);
  }
  return std::nullopt;
}

std::string format_automorphism(const FreeGroupAuto& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.images.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  std::string out;
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    out += names[i] + " -> " + f.images[i].to_string(names) + '\n';
  }
  return out;
}

BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed) {
  if (strands < 2) throw BraidError("random braids need at least 2 strands");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  BraidWord w{strands, {}};
  for (std::size_t n = 0; n < length; ++n) {
    const int k = kind(rng);
    w.letters.push_back({k == 2, index(rng), k == 1 ? -1 : 1});
  }
  return w;
}

}  // namespace weldkit

#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/invariants.hpp"

namespace oracle {

using weldkit::ComponentKind;
using weldkit::Dir;
using weldkit::LDiagram;
using weldkit::Visit;

// Every assignment of group elements to generators, checked relator by
// relator.
inline std::uint64_t naive_hom_count(const weldkit::GroupPresentation& p, const weldkit::FiniteGroup& g) {
  const std::size_t n = p.generators.size();
  std::vector<int> value(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = g.identity();
      for (const auto& l : r.letters()) {
        const int v = value[static_cast<std::size_t>(l.gen)];
        acc = g.mul(acc, l.exp > 0 ? v : g.inv(v));
      }
      if (acc != g.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++value[i] == g.order()) value[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Permutation groups built from scratch, composition (p*q)(x) = p(q(x)).
inline std::vector<std::vector<int>> symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      table[a][b] = index[c];
    }
  }
  return table;
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return t;
}

// A pass sequence with labels attached, after some symmetry was applied.
struct Strand {
  ComponentKind kind;
  std::vector<std::pair<std::string, Visit>> passes;
};

inline Strand reversed(const Strand& s) {
  Strand r = s;
  std::reverse(r.passes.begin(), r.passes.end());
  return r;
}

// Tries to extend the crossing bijection `m` (id of a -> (id of b, visit
// swapped)) so that strand x of a maps onto strand y of b pass by pass.
inline bool match_strand(const Strand& x, const Strand& y,
                         std::map<std::string, std::pair<std::string, bool>>& m,
                         std::set<std::string>& used) {
  if (x.passes.size() != y.passes.size()) return false;
  for (std::size_t i = 0; i < x.passes.size(); ++i) {
    const auto& [ia, va] = x.passes[i];
    const auto& [ib, vb] = y.passes[i];
    const bool swapped = va != vb;
    if (auto it = m.find(ia); it != m.end()) {
      if (it->second.first != ib || it->second.second != swapped) return false;
    } else {
      if (used.contains(ib)) return false;
      m[ia] = {ib, swapped};
      used.insert(ib);
    }
  }
  return true;
}

// Brute-force isomorphism of L diagrams under component permutation,
// per-component reversal, loop rotation, crossing renaming and renaming of
// the two visits of a crossing.
inline bool isomorphic(const LDiagram& a, const LDiagram& b) {
  if (a.dimension != b.dimension || a.components.size() != b.components.size() ||
      a.crossings.size() != b.crossings.size()) {
    return false;
  }
  const std::size_t k = a.components.size();
  auto strand_of = [](const weldkit::Component& c) {
    Strand s{c.kind, {}};
    for (const auto& p : c.passes) s.passes.emplace_back(p.crossing, p.visit);
    return s;
  };
  // Component holding each crossing's through pass.
  auto through_component = [](const LDiagram& d) {
    std::map<std::string, std::size_t> out;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      for (const auto& p : d.components[c].passes) {
        if (d.crossings.at(p.crossing).through == p.visit) out[p.crossing] = c;
      }
    }
    return out;
  };
  const auto tb = through_component(b);

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool kinds_ok = true;
    for (std::size_t c = 0; c < k; ++c) {
      if (a.components[c].kind != b.components[perm[c]].kind ||
          a.components[c].passes.size() != b.components[perm[c]].passes.size()) {
        kinds_ok = false;
      }
    }
    if (!kinds_ok) continue;
    // Depth-first over orientation and rotation choices per component.
    std::vector<bool> rev(k, false);
    std::function<bool(std::size_t, std::map<std::string, std::pair<std::string, bool>>, std::set<std::string>)> go =
        [&](std::size_t c, std::map<std::string, std::pair<std::string, bool>> m, std::set<std::string> used) -> bool {
      if (c == k) {
        for (const auto& [ia, target] : m) {
          const auto& la = a.crossings.at(ia);
          const auto& lb = b.crossings.at(target.first);
          const Visit mapped = target.second ? weldkit::other(la.through) : la.through;
          if (mapped != lb.through) return false;
          // dir is read along the through strand, so it flips when that
          // strand was reversed.
          const Dir expect = rev[tb.at(target.first)] ? weldkit::flip(la.dir) : la.dir;
          if (expect != lb.dir) return false;
        }
        return true;
      }
      const Strand x = strand_of(a.components[c]);
      const Strand base = strand_of(b.components[perm[c]]);
      const std::size_t len = base.passes.size();
      const std::size_t rotations = base.kind == ComponentKind::loop && len > 0 ? len : 1;
      for (int r = 0; r < 2; ++r) {
        for (std::size_t rot = 0; rot < rotations; ++rot) {
          Strand y = r ? reversed(base) : base;
          std::rotate(y.passes.begin(), y.passes.begin() + static_cast<std::ptrdiff_t>(rot), y.passes.end());
          auto m2 = m;
          auto used2 = used;
          if (!match_strand(x, y, m2, used2)) continue;
          rev[perm[c]] = r == 1;
          if (go(c + 1, m2, used2)) return true;
        }
      }
      rev[perm[c]] = false;
      return false;
    };
    if (go(0, {}, {})) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::filesystem::path> files_with_extension(const std::filesystem::path& dir,
                                                               const std::string& ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Report lines that are invariants (diagram and presentation sizes are dropped).
inline std::string invariant_lines(const std::string& report) {
  std::istringstream in(report);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("crossings", 0) == 0 || line.rfind("generators", 0) == 0 || line.rfind("relators", 0) == 0) continue;
    out += line + '\n';
  }
  return out;
}

}  // namespace oracle

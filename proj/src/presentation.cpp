#include <algorithm>
#include <set>
#include <sstream>

#include "weldkit/invariants.hpp"

namespace weldkit {

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    os << (i ? ", " : "") << relators[i].to_string(generators);
  }
  os << " >";
  return os.str();
}

GroupPresentation wirtinger_presentation(const LDiagram& d) {
  GroupPresentation p;
  // seg[c][i]: generator index of the segment holding pass i of component c.
  std::vector<std::vector<int>> seg(d.components.size());
  std::vector<int> offset(d.components.size());
  std::vector<int> count(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    int through = 0;
    for (std::size_t i = 0; i < comp.passes.size(); ++i) {
      if (d.is_through({c, i})) ++through;
    }
    const bool loop = comp.kind == ComponentKind::loop;
    count[c] = loop ? std::max(through, 1) : through + 1;
    offset[c] = static_cast<int>(p.generators.size());
    for (int k = 0; k < count[c]; ++k) p.generators.push_back(comp.name + "." + std::to_string(k));
    int before = 0;
    for (std::size_t i = 0; i < comp.passes.size(); ++i) {
      const int s = loop && through > 0 ? before % through : before;
      seg[c].push_back(offset[c] + s);
      if (d.is_through({c, i})) ++before;
    }
  }
  auto out_segment = [&](PassRef t) {
    const int local = seg[t.component][t.index] - offset[t.component] + 1;
    return offset[t.component] + local % count[t.component];
  };

  const PassIndex idx = index_passes(d);
  for (const auto& [x, refs] : idx) {
    const CrossingLabel& label = d.crossings.at(x);
    const PassRef t = refs[label.through == Visit::first ? 0 : 1];
    const PassRef s = refs[label.through == Visit::first ? 1 : 0];
    const int in = seg[t.component][t.index];
    const int out = out_segment(t);
    const int c = seg[s.component][s.index];
    const int e = sign(label.dir);
    p.relators.push_back(Word{{out, -1}, {c, e}, {in, 1}, {c, -e}});
  }

  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    Peripheral per;
    per.component = comp.name;
    per.meridian = Word::generator(offset[c]);
    Word product;
    int writhe = 0;
    for (std::size_t i = 0; i < comp.passes.size(); ++i) {
      if (!d.is_through({c, i})) continue;
      const auto& x = comp.passes[i].crossing;
      const CrossingLabel& label = d.crossings.at(x);
      const PassRef s = idx.at(x)[label.through == Visit::first ? 1 : 0];
      const int e = sign(label.dir);
      product = Word::generator(seg[s.component][s.index], e) * product;
      writhe += e;
    }
    for (int k = 0; k < std::abs(writhe); ++k) {
      product.push_back({offset[c], writhe > 0 ? -1 : 1});
    }
    per.longitude = product;
    p.peripherals.push_back(std::move(per));
  }
  return p;
}

namespace {

constexpr std::size_t kMaxSubstitutionLength = 64;

void tidy_relators(GroupPresentation& p) {
  std::vector<Word> kept;
  std::set<Word> seen;
  for (const Word& r : p.relators) {
    Word red = r.cyclically_reduced();
    if (red.empty()) continue;
    if (!seen.insert(red.cyclic_normal_form()).second) continue;
    kept.push_back(std::move(red));
  }
  p.relators = std::move(kept);
}

// Rotation of `r` starting at position `pos`.
Word rotate(const Word& r, std::size_t pos) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < r.size(); ++i) ls.push_back(r[(pos + i) % r.size()]);
  return Word(ls);
}

bool eliminate_one(GroupPresentation& p) {
  std::vector<std::size_t> order(p.relators.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.relators[a].size() < p.relators[b].size();
  });
  for (std::size_t ri : order) {
    const Word& r = p.relators[ri];
    if (r.size() > kMaxSubstitutionLength + 1) break;
    int best = -1;
    for (const auto& l : r.letters()) {
      if (r.occurrences(l.gen) == 1) best = std::max(best, l.gen);
    }
    if (best < 0) continue;
    std::size_t pos = 0;
    while (r[pos].gen != best) ++pos;
    // r ~ g^e C, so g = C^-1 when e = 1 and g = C when e = -1.
    const Word rot = rotate(r, pos);
    const int e = rot[0].exp;
    Word rest(std::vector<Letter>(rot.letters().begin() + 1, rot.letters().end()));
    const Word value = e > 0 ? rest.inverse() : rest;

    const auto n = static_cast<int>(p.generators.size());
    std::vector<Word> images;
    for (int g = 0; g < n; ++g) {
      if (g == best) {
        images.push_back(Word{});
      } else {
        images.push_back(Word::generator(g < best ? g : g - 1));
      }
    }
    // Express the eliminated generator in the renumbered alphabet.
    images[static_cast<std::size_t>(best)] = value.substitute(images);

    GroupPresentation next;
    for (int g = 0; g < n; ++g) {
      if (g != best) next.generators.push_back(p.generators[static_cast<std::size_t>(g)]);
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i != ri) next.relators.push_back(p.relators[i].substitute(images));
    }
    for (const auto& per : p.peripherals) {
      next.peripherals.push_back(
          {per.component, per.meridian.substitute(images), per.longitude.substitute(images)});
    }
    p = std::move(next);
    return true;
  }
  return false;
}

}  // namespace

GroupPresentation simplify(const GroupPresentation& input) {
  GroupPresentation p = input;
  tidy_relators(p);
  while (eliminate_one(p)) tidy_relators(p);
  return p;
}

}  // namespace weldkit

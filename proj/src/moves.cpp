#include "weldkit/moves.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace weldkit {

namespace {

constexpr std::string_view kRuleNames[] = {"KINK+",  "KINK-", "CANCEL+", "CANCEL-", "SLIDE3",
                                           "COMMUTE", "END+", "END-",    "SFLIP"};

std::optional<std::size_t> next_pos(const Component& c, std::size_t i) {
  const std::size_t n = c.passes.size();
  if (i + 1 < n) return i + 1;
  if (c.kind == ComponentKind::loop && n >= 2) return 0;
  return std::nullopt;
}

std::optional<std::size_t> prev_pos(const Component& c, std::size_t i) {
  const std::size_t n = c.passes.size();
  if (i > 0) return i - 1;
  if (c.kind == ComponentKind::loop && n >= 2) return n - 1;
  return std::nullopt;
}

// Adjacent position pairs in traversal order. A two-pass loop has a single
// pair.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(const Component& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = c.passes.size();
  for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  if (c.kind == ComponentKind::loop && n > 2) out.emplace_back(n - 1, 0);
  return out;
}

bool is_adjacent_pair(const Component& c, std::size_t i, std::size_t j) {
  const auto pairs = adjacent_pairs(c);
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
}

std::vector<std::size_t> gaps(const Component& c) {
  const std::size_t n = c.passes.size();
  std::vector<std::size_t> out;
  const std::size_t count = c.kind == ComponentKind::arc ? n + 1 : std::max<std::size_t>(n, 1);
  for (std::size_t g = 0; g < count; ++g) out.push_back(g);
  return out;
}

PassRef other_pass(const PassIndex& idx, const Pass& p) {
  return idx.at(p.crossing)[p.visit == Visit::first ? 1 : 0];
}

PassRef through_pass(const LDiagram& d, const PassIndex& idx, const std::string& x) {
  return idx.at(x)[d.crossings.at(x).through == Visit::first ? 0 : 1];
}

// The containing pass of `x` lies in the in- or out-segment of its through
// pass: same component, no through pass strictly between them one way round.
bool sflip_admissible(const LDiagram& d, const PassIndex& idx, const std::string& x) {
  const PassRef t = through_pass(d, idx, x);
  const PassRef s = idx.at(x)[d.crossings.at(x).through == Visit::first ? 1 : 0];
  if (t.component != s.component) return false;
  const Component& c = d.components[t.component];
  for (bool forward : {true, false}) {
    std::optional<std::size_t> j = forward ? next_pos(c, t.index) : prev_pos(c, t.index);
    while (j && *j != s.index && *j != t.index) {
      if (d.is_through({t.component, *j})) break;
      j = forward ? next_pos(c, *j) : prev_pos(c, *j);
    }
    if (j && *j == s.index) return true;
  }
  return false;
}

// Signed-dir condition for SLIDE3 with top crossings x (crossing the middle
// strand) and y (crossing the bottom strand).
bool slide3_admissible(Dir dx, bool x_before_z, Dir dy, bool y_before_z) {
  const int sx = sign(dx) * (x_before_z ? 1 : -1);
  const int sy = sign(dy) * (y_before_z ? 1 : -1);
  return kSlide3Admissible[sx > 0 ? 1 : 0][sy > 0 ? 1 : 0];
}

void enumerate_slide3(const LDiagram& d, const PassIndex& idx, std::vector<MoveInstance>& out) {
  for (std::size_t tc = 0; tc < d.components.size(); ++tc) {
    const Component& top = d.components[tc];
    for (const auto& [i, j] : adjacent_pairs(top)) {
      const Pass& p = top.passes[i];
      const Pass& q = top.passes[j];
      if (p.crossing == q.crossing) continue;
      if (d.is_through({tc, i}) || d.is_through({tc, j})) continue;
      for (bool swapped : {false, true}) {
        const std::string& x = swapped ? q.crossing : p.crossing;
        const std::string& y = swapped ? p.crossing : q.crossing;
        const PassRef px = through_pass(d, idx, x);
        const PassRef py = through_pass(d, idx, y);
        const Component& mid = d.components[px.component];
        const Component& bot = d.components[py.component];
        for (bool fwd : {true, false}) {
          const auto n = fwd ? next_pos(mid, px.index) : prev_pos(mid, px.index);
          if (!n) continue;
          const PassRef nz{px.component, *n};
          const Pass& zp = d.pass(nz);
          const std::string& z = zp.crossing;
          if (z == x || z == y || d.is_through(nz)) continue;
          const PassRef pz = through_pass(d, idx, z);
          if (pz.component != py.component) continue;
          bool y_before_z;
          if (next_pos(bot, py.index) == pz.index) {
            y_before_z = true;
          } else if (prev_pos(bot, py.index) == pz.index) {
            y_before_z = false;
          } else {
            continue;
          }
          if (!slide3_admissible(d.crossings.at(x).dir, fwd, d.crossings.at(y).dir, y_before_z)) {
            continue;
          }
          MoveInstance m;
          m.rule = Rule::slide3;
          m.sites.push_back({top.name, {i, j}});
          m.sites.push_back({mid.name, fwd ? std::vector{px.index, *n} : std::vector{*n, px.index}});
          m.sites.push_back(
              {bot.name, y_before_z ? std::vector{py.index, pz.index} : std::vector{pz.index, py.index}});
          out.push_back(std::move(m));
        }
      }
    }
  }
}

[[noreturn]] void inapplicable(const MoveInstance& m, const std::string& why) {
  throw InapplicableMove("inapplicable move '" + format_move(m) + "': " + why);
}

std::size_t resolve(const LDiagram& d, const MoveInstance& m, const Site& s,
                    std::size_t expected_indices) {
  const auto c = d.find_component(s.component);
  if (!c) inapplicable(m, "no component " + s.component);
  if (s.indices.size() != expected_indices) inapplicable(m, "wrong site arity");
  return *c;
}

void check_pair(const LDiagram& d, const MoveInstance& m, std::size_t c, const Site& s) {
  const Component& comp = d.components[c];
  for (std::size_t i : s.indices) {
    if (i >= comp.passes.size()) inapplicable(m, "index out of range");
  }
  if (!is_adjacent_pair(comp, s.indices[0], s.indices[1])) inapplicable(m, "passes not adjacent");
}

void check_gap(const LDiagram& d, const MoveInstance& m, std::size_t c, std::size_t g) {
  const auto gs = gaps(d.components[c]);
  if (std::find(gs.begin(), gs.end(), g) == gs.end()) inapplicable(m, "gap out of range");
}

void erase_positions(Component& c, std::vector<std::size_t> positions) {
  std::sort(positions.rbegin(), positions.rend());
  for (std::size_t p : positions) c.passes.erase(c.passes.begin() + static_cast<std::ptrdiff_t>(p));
}

void insert_at(Component& c, std::size_t gap, const std::vector<Pass>& passes) {
  c.passes.insert(c.passes.begin() + static_cast<std::ptrdiff_t>(gap), passes.begin(), passes.end());
}

std::string second_fresh_id(const LDiagram& d, const std::string& first) {
  for (std::size_t n = 1;; ++n) {
    std::string id = std::to_string(n);
    if (id != first && !d.crossings.contains(id)) return id;
  }
}

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> parse_rule_name(std::string_view s) {
  for (Rule r : kAllRules) {
    if (rule_name(r) == s) return r;
  }
  return std::nullopt;
}

Rule inverse_rule(Rule r) {
  switch (r) {
    case Rule::kink_add: return Rule::kink_remove;
    case Rule::kink_remove: return Rule::kink_add;
    case Rule::cancel_add: return Rule::cancel_remove;
    case Rule::cancel_remove: return Rule::cancel_add;
    case Rule::end_add: return Rule::end_remove;
    case Rule::end_remove: return Rule::end_add;
    case Rule::slide3:
    case Rule::commute:
    case Rule::sflip: return r;
  }
  return r;
}

bool rule_inserts(Rule r) {
  return r == Rule::kink_add || r == Rule::cancel_add || r == Rule::end_add;
}

std::vector<MoveInstance> enumerate_moves(const LDiagram& d, const std::optional<RuleSet>& filter) {
  auto wanted = [&](Rule r) { return !filter || filter->contains(r); };
  const PassIndex idx = index_passes(d);
  std::vector<MoveInstance> out;

  if (wanted(Rule::kink_remove)) {
    for (const auto& c : d.components) {
      for (const auto& [i, j] : adjacent_pairs(c)) {
        if (c.passes[i].crossing == c.passes[j].crossing) {
          out.push_back({Rule::kink_remove, {{c.name, {i, j}}}, {}});
        }
      }
    }
  }
  if (wanted(Rule::kink_add)) {
    for (const auto& c : d.components) {
      for (std::size_t g : gaps(c)) {
        for (Visit t : {Visit::first, Visit::second}) {
          for (Dir dir : {Dir::up, Dir::down}) {
            out.push_back({Rule::kink_add, {{c.name, {g}}}, {.through = t, .dir = dir}});
          }
        }
      }
    }
  }
  if (wanted(Rule::cancel_remove)) {
    for (std::size_t xc = 0; xc < d.components.size(); ++xc) {
      const auto& c = d.components[xc];
      for (const auto& [i, j] : adjacent_pairs(c)) {
        const Pass& p = c.passes[i];
        const Pass& q = c.passes[j];
        if (p.crossing == q.crossing) continue;
        if (!d.is_through({xc, i}) || !d.is_through({xc, j})) continue;
        if (d.crossings.at(p.crossing).dir == d.crossings.at(q.crossing).dir) continue;
        const PassRef s1 = other_pass(idx, p);
        const PassRef s2 = other_pass(idx, q);
        if (s1.component != s2.component) continue;
        const auto& yc = d.components[s1.component];
        Site ys{yc.name, {}};
        if (is_adjacent_pair(yc, s1.index, s2.index)) {
          ys.indices = {s1.index, s2.index};
        } else if (is_adjacent_pair(yc, s2.index, s1.index)) {
          ys.indices = {s2.index, s1.index};
        } else {
          continue;
        }
        out.push_back({Rule::cancel_remove, {{c.name, {i, j}}, ys}, {}});
      }
    }
  }
  if (wanted(Rule::cancel_add)) {
    for (const auto& xc : d.components) {
      for (std::size_t gx : gaps(xc)) {
        for (const auto& yc : d.components) {
          for (std::size_t gy : gaps(yc)) {
            const bool same_gap = xc.name == yc.name && gx == gy;
            for (Dir dir : {Dir::up, Dir::down}) {
              for (bool swap : {false, true}) {
                MoveInstance m{Rule::cancel_add, {{xc.name, {gx}}, {yc.name, {gy}}}, {}};
                m.params.dir = dir;
                m.params.swap = swap;
                if (same_gap) {
                  for (bool yf : {false, true}) {
                    m.params.y_first = yf;
                    out.push_back(m);
                  }
                } else {
                  out.push_back(m);
                }
              }
            }
          }
        }
      }
    }
  }
  if (wanted(Rule::slide3)) enumerate_slide3(d, idx, out);
  if (wanted(Rule::commute)) {
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
      const auto& c = d.components[ci];
      for (const auto& [i, j] : adjacent_pairs(c)) {
        if (!d.is_through({ci, i}) && !d.is_through({ci, j})) {
          out.push_back({Rule::commute, {{c.name, {i, j}}}, {}});
        }
      }
    }
  }
  if (wanted(Rule::end_remove)) {
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
      const auto& c = d.components[ci];
      if (c.kind != ComponentKind::arc || c.passes.empty()) continue;
      const std::size_t last = c.passes.size() - 1;
      if (d.is_through({ci, 0})) out.push_back({Rule::end_remove, {{c.name, {0}}}, {}});
      if (last != 0 && d.is_through({ci, last})) {
        out.push_back({Rule::end_remove, {{c.name, {last}}}, {}});
      }
    }
  }
  if (wanted(Rule::end_add)) {
    for (const auto& a : d.components) {
      if (a.kind != ComponentKind::arc) continue;
      for (std::size_t end : {0u, 1u}) {
        for (const auto& yc : d.components) {
          // On an empty arc both ends coincide unless the containing pass
          // goes on the same arc.
          if (end == 1 && a.passes.empty() && yc.name != a.name) continue;
          for (std::size_t gy : gaps(yc)) {
            for (Dir dir : {Dir::up, Dir::down}) {
              out.push_back({Rule::end_add, {{a.name, {end}}, {yc.name, {gy}}}, {.dir = dir}});
            }
          }
        }
      }
    }
  }
  if (wanted(Rule::sflip)) {
    for (const auto& [x, refs] : idx) {
      if (!sflip_admissible(d, idx, x)) continue;
      out.push_back({Rule::sflip,
                     {{d.components[refs[0].component].name, {refs[0].index}},
                      {d.components[refs[1].component].name, {refs[1].index}}},
                     {}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LDiagram apply_move(const LDiagram& d, const MoveInstance& m) {
  LDiagram out = d;
  switch (m.rule) {
    case Rule::kink_remove: {
      if (m.sites.size() != 1) inapplicable(m, "expected one site");
      const std::size_t c = resolve(d, m, m.sites[0], 2);
      check_pair(d, m, c, m.sites[0]);
      const auto& passes = d.components[c].passes;
      const std::string x = passes[m.sites[0].indices[0]].crossing;
      if (passes[m.sites[0].indices[1]].crossing != x) inapplicable(m, "not a kink");
      erase_positions(out.components[c], m.sites[0].indices);
      out.crossings.erase(x);
      return out;
    }
    case Rule::kink_add: {
      if (m.sites.size() != 1 || !m.params.through || !m.params.dir) inapplicable(m, "malformed");
      const std::size_t c = resolve(d, m, m.sites[0], 1);
      check_gap(d, m, c, m.sites[0].indices[0]);
      const std::string x = fresh_crossing_id(d);
      insert_at(out.components[c], m.sites[0].indices[0], {{x, Visit::first}, {x, Visit::second}});
      out.crossings.emplace(x, CrossingLabel{*m.params.through, *m.params.dir});
      return out;
    }
    case Rule::cancel_remove: {
      if (m.sites.size() != 2) inapplicable(m, "expected two sites");
      const std::size_t xc = resolve(d, m, m.sites[0], 2);
      const std::size_t yc = resolve(d, m, m.sites[1], 2);
      check_pair(d, m, xc, m.sites[0]);
      check_pair(d, m, yc, m.sites[1]);
      const auto& xs = m.sites[0].indices;
      const auto& ys = m.sites[1].indices;
      const Pass& p = d.components[xc].passes[xs[0]];
      const Pass& q = d.components[xc].passes[xs[1]];
      if (p.crossing == q.crossing) inapplicable(m, "needs two crossings");
      if (!d.is_through({xc, xs[0]}) || !d.is_through({xc, xs[1]})) {
        inapplicable(m, "first strand must be through at both crossings");
      }
      if (d.crossings.at(p.crossing).dir == d.crossings.at(q.crossing).dir) {
        inapplicable(m, "dirs must be opposite");
      }
      std::set<std::string> ycross{d.components[yc].passes[ys[0]].crossing,
                                   d.components[yc].passes[ys[1]].crossing};
      if (ycross != std::set<std::string>{p.crossing, q.crossing}) {
        inapplicable(m, "second strand does not carry both crossings");
      }
      if (xc == yc) {
        std::vector<std::size_t> all{xs[0], xs[1], ys[0], ys[1]};
        erase_positions(out.components[xc], all);
      } else {
        erase_positions(out.components[xc], xs);
        erase_positions(out.components[yc], ys);
      }
      out.crossings.erase(p.crossing);
      out.crossings.erase(q.crossing);
      return out;
    }
    case Rule::cancel_add: {
      if (m.sites.size() != 2 || !m.params.dir || !m.params.swap) inapplicable(m, "malformed");
      const std::size_t xc = resolve(d, m, m.sites[0], 1);
      const std::size_t yc = resolve(d, m, m.sites[1], 1);
      const std::size_t gx = m.sites[0].indices[0];
      const std::size_t gy = m.sites[1].indices[0];
      check_gap(d, m, xc, gx);
      check_gap(d, m, yc, gy);
      const bool same_gap = xc == yc && gx == gy;
      if (same_gap != m.params.y_first.has_value()) inapplicable(m, "placement parameter");
      const std::string c1 = fresh_crossing_id(d);
      const std::string c2 = second_fresh_id(d, c1);
      const std::vector<Pass> xp{{c1, Visit::first}, {c2, Visit::first}};
      const std::vector<Pass> yp = *m.params.swap
                                       ? std::vector<Pass>{{c2, Visit::second}, {c1, Visit::second}}
                                       : std::vector<Pass>{{c1, Visit::second}, {c2, Visit::second}};
      if (same_gap) {
        std::vector<Pass> block = *m.params.y_first ? yp : xp;
        const auto& tail = *m.params.y_first ? xp : yp;
        block.insert(block.end(), tail.begin(), tail.end());
        insert_at(out.components[xc], gx, block);
      } else if (xc == yc) {
        if (gx > gy) {
          insert_at(out.components[xc], gx, xp);
          insert_at(out.components[yc], gy, yp);
        } else {
          insert_at(out.components[yc], gy, yp);
          insert_at(out.components[xc], gx, xp);
        }
      } else {
        insert_at(out.components[xc], gx, xp);
        insert_at(out.components[yc], gy, yp);
      }
      out.crossings.emplace(c1, CrossingLabel{Visit::first, *m.params.dir});
      out.crossings.emplace(c2, CrossingLabel{Visit::first, flip(*m.params.dir)});
      return out;
    }
    case Rule::slide3: {
      if (m.sites.size() != 3) inapplicable(m, "expected three sites");
      std::vector<MoveInstance> valid;
      enumerate_slide3(d, index_passes(d), valid);
      MoveInstance probe = m;
      probe.params = {};
      if (std::find(valid.begin(), valid.end(), probe) == valid.end()) {
        inapplicable(m, "no admissible triangle at site");
      }
      for (const Site& s : m.sites) {
        const std::size_t c = *d.find_component(s.component);
        auto& ps = out.components[c].passes;
        std::swap(ps[s.indices[0]], ps[s.indices[1]]);
      }
      return out;
    }
    case Rule::commute: {
      if (m.sites.size() != 1) inapplicable(m, "expected one site");
      const std::size_t c = resolve(d, m, m.sites[0], 2);
      check_pair(d, m, c, m.sites[0]);
      const auto& ix = m.sites[0].indices;
      if (d.is_through({c, ix[0]}) || d.is_through({c, ix[1]})) {
        inapplicable(m, "strand must be containing at both crossings");
      }
      std::swap(out.components[c].passes[ix[0]], out.components[c].passes[ix[1]]);
      return out;
    }
    case Rule::end_remove: {
      if (m.sites.size() != 1) inapplicable(m, "expected one site");
      const std::size_t c = resolve(d, m, m.sites[0], 1);
      const auto& comp = d.components[c];
      const std::size_t e = m.sites[0].indices[0];
      if (comp.kind != ComponentKind::arc) inapplicable(m, "loops have no ends");
      if (comp.passes.empty() || (e != 0 && e + 1 != comp.passes.size())) {
        inapplicable(m, "not an arc end");
      }
      if (!d.is_through({c, e})) inapplicable(m, "arc end is not the through sheet");
      const std::string x = comp.passes[e].crossing;
      for (auto& oc : out.components) {
        std::erase_if(oc.passes, [&](const Pass& p) { return p.crossing == x; });
      }
      out.crossings.erase(x);
      return out;
    }
    case Rule::end_add: {
      if (m.sites.size() != 2 || !m.params.dir) inapplicable(m, "malformed");
      const std::size_t a = resolve(d, m, m.sites[0], 1);
      const std::size_t yc = resolve(d, m, m.sites[1], 1);
      if (d.components[a].kind != ComponentKind::arc) inapplicable(m, "loops have no ends");
      const std::size_t end = m.sites[0].indices[0];
      if (end > 1) inapplicable(m, "end selector must be 0 or 1");
      check_gap(d, m, yc, m.sites[1].indices[0]);
      const std::string x = fresh_crossing_id(d);
      insert_at(out.components[yc], m.sites[1].indices[0], {{x, Visit::second}});
      auto& ap = out.components[a].passes;
      if (end == 0) {
        ap.insert(ap.begin(), Pass{x, Visit::first});
      } else {
        ap.push_back({x, Visit::first});
      }
      out.crossings.emplace(x, CrossingLabel{Visit::first, *m.params.dir});
      return out;
    }
    case Rule::sflip: {
      if (m.sites.size() != 2) inapplicable(m, "expected two sites");
      const std::size_t c0 = resolve(d, m, m.sites[0], 1);
      const std::size_t c1 = resolve(d, m, m.sites[1], 1);
      const auto i0 = m.sites[0].indices[0];
      const auto i1 = m.sites[1].indices[0];
      if (i0 >= d.components[c0].passes.size() || i1 >= d.components[c1].passes.size()) {
        inapplicable(m, "index out of range");
      }
      const Pass& p0 = d.components[c0].passes[i0];
      const Pass& p1 = d.components[c1].passes[i1];
      if (p0.crossing != p1.crossing || p0.visit != Visit::first || p1.visit != Visit::second) {
        inapplicable(m, "sites are not the two visits of one crossing");
      }
      if (!sflip_admissible(d, index_passes(d), p0.crossing)) {
        inapplicable(m, "containing pass not on an adjacent segment");
      }
      auto& label = out.crossings.at(p0.crossing);
      label.through = other(label.through);
      label.dir = flip(label.dir);
      return out;
    }
  }
  inapplicable(m, "unknown rule");
}

std::size_t crossings_after(const LDiagram& d, const MoveInstance& m) {
  const std::size_t n = d.crossing_count();
  switch (m.rule) {
    case Rule::kink_add:
    case Rule::end_add: return n + 1;
    case Rule::cancel_add: return n + 2;
    case Rule::kink_remove:
    case Rule::end_remove: return n - 1;
    case Rule::cancel_remove: return n - 2;
    default: return n;
  }
}

MoveInstance inverse_move(const LDiagram& d, const MoveInstance& m) {
  const LDiagram after = apply_move(d, m);
  const std::string target = canonical_key(d);
  for (const auto& cand : enumerate_moves(after, RuleSet{inverse_rule(m.rule)})) {
    if (canonical_key(apply_move(after, cand)) == target) return cand;
  }
  throw InapplicableMove("no inverse found for '" + format_move(m) + "'");
}

ScrambleResult scramble(const LDiagram& d, std::size_t k, std::uint64_t seed,
                        std::optional<std::size_t> max_crossings) {
  std::mt19937_64 rng(seed);
  ScrambleResult r{d, {}};
  for (std::size_t step = 0; step < k; ++step) {
    auto moves = enumerate_moves(r.diagram);
    if (max_crossings) {
      std::erase_if(moves, [&](const MoveInstance& m) {
        return crossings_after(r.diagram, m) > *max_crossings;
      });
    }
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const MoveInstance& m = moves[pick(rng)];
    r.diagram = apply_move(r.diagram, m);
    r.trace.push_back(m);
  }
  return r;
}

LDiagram replay(const LDiagram& d, const std::vector<MoveInstance>& trace) {
  LDiagram cur = d;
  for (const auto& m : trace) cur = apply_move(cur, m);
  return cur;
}

// ---------------------------------------------------------------------------
// .mvt format

std::string format_move(const MoveInstance& m) {
  std::string out(rule_name(m.rule));
  for (const auto& s : m.sites) {
    out += ' ' + s.component + ':';
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.indices[i]);
    }
  }
  const auto& p = m.params;
  if (p.through) out += std::string(" t=") + (*p.through == Visit::first ? 'a' : 'b');
  if (p.dir) out += std::string(" d=") + (*p.dir == Dir::up ? 'u' : 'd');
  if (p.swap) out += *p.swap ? " order=swap" : " order=same";
  if (p.y_first) out += *p.y_first ? " place=yx" : " place=xy";
  return out;
}

MoveInstance parse_move(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string tok;
  if (!(is >> tok)) throw ParseError(1, 1, "empty move line");
  const auto rule = parse_rule_name(tok);
  if (!rule) throw ParseError(1, 1, "unknown rule '" + tok + "'");
  MoveInstance m;
  m.rule = *rule;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "t" && (val == "a" || val == "b")) {
        m.params.through = val == "a" ? Visit::first : Visit::second;
      } else if (key == "d" && (val == "u" || val == "d")) {
        m.params.dir = val == "u" ? Dir::up : Dir::down;
      } else if (key == "order" && (val == "same" || val == "swap")) {
        m.params.swap = val == "swap";
      } else if (key == "place" && (val == "xy" || val == "yx")) {
        m.params.y_first = val == "yx";
      } else {
        throw ParseError(1, 1, "bad parameter '" + tok + "'");
      }
      continue;
    }
    const auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || !is_identifier(tok.substr(0, colon))) {
      throw ParseError(1, 1, "bad site '" + tok + "'");
    }
    Site s{tok.substr(0, colon), {}};
    std::string rest = tok.substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
      const auto comma = rest.find(',', pos);
      const std::string num = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(1, 1, "bad site index in '" + tok + "'");
      }
      s.indices.push_back(std::stoul(num));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    m.sites.push_back(std::move(s));
  }
  if (m.sites.empty()) throw ParseError(1, 1, "move without site");
  return m;
}

std::string serialize_mvt(const std::vector<MoveInstance>& trace) {
  std::string out;
  for (const auto& m : trace) out += format_move(m) + '\n';
  return out;
}

std::vector<MoveInstance> parse_mvt(std::string_view text) {
  std::vector<MoveInstance> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(parse_move(line));
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      throw ParseError(line_no, 1, msg.substr(msg.find(": ") + 2));
    }
  }
  return out;
}

}  // namespace weldkit

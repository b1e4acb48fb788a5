// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "weldkit/bands.hpp"
#include "weldkit/braid.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/moves.hpp"
#include "weldkit/search.hpp"
#include "weldkit/tube.hpp"

using namespace weldkit;

namespace {

const std::filesystem::path kFixtures = WELDKIT_FIXTURE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<FiniteGroup> gate_groups() {
  return {FiniteGroup("S3", oracle::symmetric_table(3)), FiniteGroup("S4", oracle::symmetric_table(4)),
          FiniteGroup("Z5", oracle::cyclic_table(5))};
}

std::vector<std::uint64_t> hom_counts(const LDiagram& d, const std::vector<FiniteGroup>& groups) {
  const GroupPresentation p = wirtinger_presentation(d);
  std::vector<std::uint64_t> out;
  for (const auto& g : groups) out.push_back(hom_count(p, g));
  return out;
}

RandomDiagramOptions random_shape(std::uint64_t seed) {
  switch (seed % 4) {
    case 1: return {{ComponentKind::loop}, 3};
    case 2: return {{ComponentKind::arc, ComponentKind::arc}, 2};
    case 3: return {{ComponentKind::arc, ComponentKind::loop}, 4};
    default: return {};
  }
}

WeldedArc wga(const std::string& name) { return parse_wga(oracle::read_text(kFixtures / "wga" / (name + ".wga"))); }

std::vector<LDiagram> corpus() {
  std::vector<LDiagram> out;
  for (const auto& f : oracle::files_with_extension(kFixtures / "ldg", ".ldg")) out.push_back(parse_ldg(oracle::read_text(f)));
  for (const auto& f : oracle::files_with_extension(kFixtures / "wga", ".wga")) out.push_back(tube(parse_wga(oracle::read_text(f))));
  for (const auto& f : oracle::files_with_extension(kFixtures / "bnd", ".bnd")) out.push_back(to_ldiagram(parse_bnd(oracle::read_text(f))));
  return out;
}

Outcome move_soundness() {
  const auto groups = gate_groups();
  std::size_t instances = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LDiagram d = random_diagram(seed % 7, random_shape(seed), seed);
    const auto before = hom_counts(d, groups);
    for (const auto& m : enumerate_moves(d)) {
      ++instances;
      if (hom_counts(apply_move(d, m), groups) != before) {
        return {false, "seed " + std::to_string(seed) + " move " + format_move(m)};
      }
    }
  }
  return {true, std::to_string(instances) + " move instances"};
}

Outcome scramble_recovery() {
  std::size_t worst = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const LDiagram base = random_diagram(seed % 4, random_shape(seed), 1000 + seed);
    const std::size_t k = 1 + seed % 4;
    const auto s = scramble(base, k, seed, 7);
    const auto r = search_equiv(s.diagram, base, SearchBudget{7, 200'000, 2 * k});
    if (r.verdict != Verdict::path_found) {
      return {false, "seed " + std::to_string(seed) + ": " + verdict_name(r.verdict)};
    }
    if (r.path->size() > 2 * k || canonical_key(replay(s.diagram, *r.path)) != canonical_key(base)) {
      return {false, "seed " + std::to_string(seed) + ": bad path"};
    }
    worst = std::max(worst, r.stats.states_visited);
  }
  return {true, "peak states " + std::to_string(worst)};
}

Outcome trefoil_separation() {
  const FiniteGroup s3("S3", oracle::symmetric_table(3));
  const GroupPresentation t = wirtinger_presentation(tube(wga("trefoil")));
  const GroupPresentation u = wirtinger_presentation(parse_ldg("ldg v1 dim=2\ncomp A arc:\n"));
  const auto ht = hom_count(t, s3);
  const auto hu = hom_count(u, s3);
  const auto nt = oracle::naive_hom_count(t, s3);
  const auto nu = oracle::naive_hom_count(u, s3);
  const auto r = is_trivial(tube(wga("trefoil")), SearchBudget{});
  std::ostringstream d;
  d << "trefoil " << ht << "/" << nt << ", unknot " << hu << "/" << nu << ", trivial " << verdict_name(r.verdict);
  return {ht == 12 && nt == 12 && hu == 6 && nu == 6 && r.verdict == Verdict::distinguished, d.str()};
}

Outcome tube_fiber() {
  InvariantOptions opts;
  opts.groups = gate_groups();
  opts.alexander = false;
  std::ostringstream d;
  bool ok = true;
  for (const char* name : {"trefoil", "virtual2", "mixed3"}) {
    const WeldedArc w = wga(name);
    const LDiagram a = tube(w);
    const LDiagram b = tube(total_reverse_virtualization(w));
    const bool same = oracle::invariant_lines(invariant_report(a, opts)) ==
                      oracle::invariant_lines(invariant_report(b, opts));
    const SearchBudget budget{a.crossing_count() + 3, 200'000, 12};
    const auto r = search_equiv(a, b, budget);
    // The same question after disguising the reversed side by moves.
    const LDiagram c = scramble(b, 3, 17, budget.max_crossings).diagram;
    const auto r2 = search_equiv(a, c, budget);
    const bool found = r.verdict == Verdict::path_found && r.path->size() <= 12 &&
                       r2.verdict == Verdict::path_found && r2.path->size() <= 12;
    ok = ok && same && found;
    d << name << ": " << (same ? "profiles equal" : "profiles differ") << ", " << verdict_name(r.verdict);
    if (r.path) d << " in " << r.path->size();
    d << ", scrambled " << verdict_name(r2.verdict);
    if (r2.path) d << " in " << r2.path->size();
    d << "; ";
  }
  return {ok, d.str()};
}

Outcome fnm_round_trip() {
  std::size_t checked = 0;
  for (const LDiagram& d : corpus()) {
    const std::string key = canonical_key(d);
    for (int m = 2; m <= 6; ++m) {
      const bool has_loop = std::any_of(d.components.begin(), d.components.end(),
                                        [](const Component& c) { return c.kind == ComponentKind::loop; });
      if (m == 2 && has_loop && !d.allow_torus) continue;
      if (canonical_key(reinterpret_dimension(reinterpret_dimension(d, m), d.dimension)) != key) {
        return {false, key};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " round trips"};
}

Outcome band_moves() {
  InvariantOptions opts;
  opts.groups = gate_groups();
  auto report = [&](const BandPresentation& b) {
    return oracle::invariant_lines(invariant_report(to_ldiagram(b), opts));
  };
  std::size_t slides = 0;
  std::size_t passes = 0;
  std::size_t trivial = 0;
  std::size_t skipped = 0;
  const auto files = oracle::files_with_extension(kFixtures / "bnd", ".bnd");
  for (const auto& f : files) {
    const BandPresentation b = parse_bnd(oracle::read_text(f));
    const std::string base = report(b);
    auto same = [&](const BandPresentation& x) { return report(x) == base; };
    for (const int pos : {0, b.balls}) {
      const BandPresentation added = trivial_addition(b, pos);
      const int back = pos == 0 ? 0 : added.balls - 1;
      const BandPresentation removed = trivial_deletion(added, back);
      if (!same(added) || !same(removed) || removed != b) return {false, f.filename().string() + " trivial"};
      trivial += 2;
    }
    for (const auto& i : b.bands) {
      for (const auto& j : b.bands) {
        if (i.name == j.name) continue;
        for (const BandEnd end : {BandEnd::from, BandEnd::to}) {
          BandPresentation s;
          try {
            s = band_slide(b, i.name, j.name, end);
          } catch (const BandError&) {
            continue;
          }
          if (!is_path_like(s)) {
            ++skipped;
            continue;
          }
          if (!same(s) || band_unslide(s, i.name, j.name, end) != b) {
            return {false, f.filename().string() + " slide " + i.name + " over " + j.name};
          }
          ++slides;
        }
        for (std::size_t pos = 0; pos <= i.through.size(); ++pos) {
          const BandPresentation p = band_pass(b, i.name, j.name, pos);
          if (!same(p) || band_unpass(p, i.name, j.name, pos) != b) {
            return {false, f.filename().string() + " pass " + i.name + " through " + j.name};
          }
          ++passes;
        }
      }
    }
  }
  std::ostringstream d;
  d << files.size() << " fixtures, " << slides << " slides, " << passes << " passes, " << trivial
    << " trivial additions/deletions, " << skipped << " slides leaving path shape";
  return {files.size() >= 10 && slides > 0 && passes > 0, d.str()};
}

Outcome motion_group() {
  const std::pair<const char*, const char*> relations[] = {
      {"s1 s2 s1", "s2 s1 s2"}, {"s1 s3", "s3 s1"},     {"t1 t2 t1", "t2 t1 t2"}, {"t1 t3", "t3 t1"},
      {"t1 t1", ""},            {"s1 t3", "t3 s1"},     {"t1 s2 t1", "t2 s1 t2"}, {"s1 s2 t1", "t2 s1 s2"},
      {"s1 t2 t1", "t2 t1 s2"},
  };
  for (const auto& [x, y] : relations) {
    if (!are_equal(parse_braid(x, 4), parse_braid(y, 4))) return {false, std::string(x) + " = " + y};
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BraidWord w = random_braid(4, seed % 13, seed);
    if (!are_equal(compose(w, invert(w)), BraidWord{4, {}})) return {false, "inverse of " + format_braid(w)};
  }
  const auto t1 = order_probe(parse_braid("t1", 3), 8);
  const auto s1 = order_probe(parse_braid("s1", 3), 8);
  std::ostringstream d;
  d << "tau_1 order " << (t1 ? std::to_string(*t1) : "none") << ", sigma_1 " << (s1 ? std::to_string(*s1) : "> 8");
  return {t1 == 2 && !s1, d.str()};
}

template <class T>
bool round_trip(const std::filesystem::path& f, T (*parse)(std::string_view), std::string (*serialize)(const T&)) {
  const T x = parse(oracle::read_text(f));
  const std::string text = serialize(x);
  return parse(text) == x && serialize(parse(text)) == text;
}

Outcome format_round_trips() {
  std::size_t n = 0;
  for (const auto& f : oracle::files_with_extension(kFixtures, ".ldg")) {
    if (!round_trip<LDiagram>(f, parse_ldg, serialize_ldg)) return {false, f.string()};
    ++n;
  }
  for (const auto& f : oracle::files_with_extension(kFixtures, ".wga")) {
    if (!round_trip<WeldedArc>(f, parse_wga, serialize_wga)) return {false, f.string()};
    ++n;
  }
  for (const auto& f : oracle::files_with_extension(kFixtures, ".bnd")) {
    if (!round_trip<BandPresentation>(f, parse_bnd, serialize_bnd)) return {false, f.string()};
    ++n;
  }
  for (const auto& f : oracle::files_with_extension(kFixtures, ".mvt")) {
    const auto moves = parse_mvt(oracle::read_text(f));
    const std::string text = serialize_mvt(moves);
    if (parse_mvt(text) != moves || serialize_mvt(parse_mvt(text)) != text) return {false, f.string()};
    ++n;
  }
  return {n > 0, std::to_string(n) + " fixtures"};
}

Outcome oracle_equivalence() {
  std::vector<LDiagram> diagrams = corpus();
  for (std::uint64_t seed = 0; seed < 300; ++seed) diagrams.push_back(random_diagram(seed % 7, random_shape(seed), 5000 + seed));
  std::vector<FiniteGroup> groups = gate_groups();
  groups.emplace_back("Z3", oracle::cyclic_table(3));
  std::size_t checked = 0;
  for (const LDiagram& d : diagrams) {
    const GroupPresentation p = simplify(wirtinger_presentation(d));
    if (p.generators.size() > 3) continue;
    for (const auto& g : groups) {
      if (hom_count(p, g) != oracle::naive_hom_count(p, g)) return {false, p.to_string() + " to " + g.name()};
    }
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " presentations"};
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
    double seconds;  // runtime limit, 0 for none
  };
  const Criterion criteria[] = {
      {"move soundness", move_soundness, 120},
      {"scramble recovery", scramble_recovery, 300},
      {"trefoil separation", trefoil_separation, 0},
      {"tube fiber", tube_fiber, 0},
      {"dimension round trip", fnm_round_trip, 0},
      {"band move invariance", band_moves, 0},
      {"motion group", motion_group, 60},
      {"format round trips", format_round_trips, 0},
      {"oracle equivalence", oracle_equivalence, 0},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, check, limit] : criteria) {
    ++index;
    if (!selected.empty() && !selected.contains(index)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      o.ok = false;
      o.detail += ", over the time limit";
    }
    all = all && o.ok;
    std::printf("%s %d %s (%.2fs): %s\n", o.ok ? "PASS" : "FAIL", index, name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weldkit/diagram.hpp"

using namespace weldkit;

namespace {

const char* kU0 = "ldg v1 dim=2\ncomp A arc:\n";
const char* kK1 = "ldg v1 dim=2\ncomp A arc: 1a 1b\nx 1 t=a d=u\n";

// Random relabelling of ids, component order, directions and loop starts.
LDiagram scramble_symmetries(const LDiagram& d, std::mt19937_64& rng) {
  LDiagram out = d;
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    if (rng() % 2) out = reverse_component(out, c);
    auto& comp = out.components[c];
    if (comp.kind == ComponentKind::loop && !comp.passes.empty()) {
      std::rotate(comp.passes.begin(), comp.passes.begin() + static_cast<std::ptrdiff_t>(rng() % comp.passes.size()),
                  comp.passes.end());
    }
  }
  std::shuffle(out.components.begin(), out.components.end(), rng);
  std::vector<std::string> ids;
  for (const auto& [id, label] : out.crossings) ids.push_back(id);
  std::vector<std::string> fresh = ids;
  std::shuffle(fresh.begin(), fresh.end(), rng);
  for (auto& id : fresh) id = "r" + id;
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < ids.size(); ++i) rename[ids[i]] = fresh[i];
  LDiagram renamed = out;
  renamed.crossings.clear();
  for (auto& comp : renamed.components) {
    for (auto& p : comp.passes) p.crossing = rename[p.crossing];
  }
  for (const auto& [id, label] : out.crossings) renamed.crossings[rename[id]] = label;
  return renamed;
}

}  // namespace

TEST_CASE("parse the basic diagrams") {
  const LDiagram u0 = parse_ldg(kU0);
  CHECK(u0.components.size() == 1);
  CHECK(u0.crossing_count() == 0);
  CHECK(serialize_ldg(u0) == kU0);
  const LDiagram k1 = parse_ldg(kK1);
  CHECK(k1.crossing_count() == 1);
  CHECK(serialize_ldg(k1).find("x 1 t=a d=u") != std::string::npos);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1b 1a\nx 1 t=a d=u\n"), DiagramError);
  try {
    parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1b 1a\nx 1 t=a d=u\n");
  } catch (const DiagramError& e) {
    CHECK(std::string(e.what()).find("crossing multiplicity") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1b\n"), DiagramError);
  CHECK_THROWS_AS(parse_ldg("ldg v1 dim=2\ncomp A loop: 1a 1b\nx 1 t=a d=u\n"), DiagramError);
  CHECK_NOTHROW(parse_ldg("ldg v1 dim=2 allow-torus\ncomp A loop: 1a 1b\nx 1 t=a d=u\n"));
  CHECK_NOTHROW(parse_ldg("ldg v1 dim=3\ncomp A loop: 1a 1b\nx 1 t=a d=u\n"));
  CHECK_THROWS_AS(parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1b\nx 1 t=a d=u\nx 1 t=b d=u\n"), ParseError);
  CHECK_THROWS_AS(parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1c\n"), ParseError);
  CHECK_THROWS_AS(parse_ldg("comp A arc:\n"), ParseError);
  try {
    parse_ldg("ldg v1 dim=2\ncomp A arc:\nx 1 t=q d=u\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("validate reports violations as data") {
  CHECK(validate(parse_ldg(kU0)).empty());
  LDiagram d = parse_ldg(kK1);
  d.crossings.clear();
  CHECK(validate(d).size() == 1);
  LDiagram loop = parse_ldg_unchecked("ldg v1 dim=2\ncomp A loop: 1a 1b\nx 1 t=a d=u\n");
  CHECK(validate(loop).size() == 1);
}

TEST_CASE("canonical form examples") {
  const LDiagram k1 = parse_ldg(kK1);
  const LDiagram k7 = parse_ldg("ldg v1 dim=2\ncomp A arc: 7a 7b\nx 7 t=a d=u\n");
  CHECK(canonical_key(k1) == canonical_key(k7));
  CHECK(canonical_key(reverse_component(k1, 0)) == canonical_key(k1));
  const LDiagram k1d = parse_ldg("ldg v1 dim=2\ncomp A arc: 1a 1b\nx 1 t=a d=d\n");
  CHECK(canonical_key(k1d) != canonical_key(k1));
  CHECK_FALSE(oracle::isomorphic(k1, k1d));
  CHECK(canonical_key(canonical_form(k1)) == canonical_key(k1));
}

TEST_CASE("canonical form is invariant under random symmetries") {
  std::mt19937_64 rng(11);
  const std::vector<std::vector<ComponentKind>> shapes{
      {ComponentKind::arc}, {ComponentKind::arc, ComponentKind::arc}, {ComponentKind::arc, ComponentKind::loop},
      {ComponentKind::loop}};
  for (int i = 0; i < 200; ++i) {
    RandomDiagramOptions opts;
    opts.components = shapes[static_cast<std::size_t>(i) % shapes.size()];
    opts.dimension = 3;
    const LDiagram d = random_diagram(static_cast<std::size_t>(i % 6), opts, static_cast<std::uint64_t>(i));
    REQUIRE(validate(d).empty());
    const LDiagram s = scramble_symmetries(d, rng);
    CHECK(oracle::isomorphic(d, s));
    CHECK(canonical_key(s) == canonical_key(d));
    const LDiagram c = canonical_form(d);
    CHECK(canonical_form(c) == c);
    CHECK(serialize_ldg(c) == canonical_key(d));
  }
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  // Pairs of small random diagrams: equal keys exactly when isomorphic.
  int equal_pairs = 0;
  for (int i = 0; i < 300; ++i) {
    RandomDiagramOptions opts;
    opts.components = i % 3 == 0 ? std::vector<ComponentKind>{ComponentKind::arc, ComponentKind::loop}
                                  : std::vector<ComponentKind>{ComponentKind::arc};
    opts.dimension = 3;
    const std::size_t n = static_cast<std::size_t>(i % 3);
    const LDiagram a = random_diagram(n, opts, static_cast<std::uint64_t>(1000 + i));
    const LDiagram b = random_diagram(n, opts, static_cast<std::uint64_t>(5000 + i));
    const bool iso = oracle::isomorphic(a, b);
    CHECK(iso == (canonical_key(a) == canonical_key(b)));
    equal_pairs += iso;
  }
  CHECK(equal_pairs > 0);
}

TEST_CASE("round trip and random diagrams") {
  CHECK(serialize_ldg(random_diagram(3, {}, 1)) == serialize_ldg(random_diagram(3, {}, 1)));
  CHECK(validate(random_diagram(3, {}, 1)).empty());
  CHECK(validate(random_diagram(3, {}, 2)).empty());
  CHECK(canonical_key(random_diagram(0, {}, 5)) == canonical_key(parse_ldg(kU0)));
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomDiagramOptions opts;
    opts.components = {ComponentKind::arc, ComponentKind::loop};
    const LDiagram d = random_diagram(s % 7, opts, s);
    CHECK(validate(d).empty());
    CHECK(parse_ldg(serialize_ldg(d)) == d);
  }
}

TEST_CASE("natural id order") {
  IdLess less;
  CHECK(less("2", "10"));
  CHECK(less("10", "a"));
  CHECK_FALSE(less("10", "2"));
  CHECK(fresh_crossing_id(parse_ldg(kK1)) == "2");
}

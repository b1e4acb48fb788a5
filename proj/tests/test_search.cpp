#include <doctest.h>

#include "oracles.hpp"
#include "weldkit/search.hpp"

using namespace weldkit;

namespace {

LDiagram fixture(const char* name) {
  return parse_ldg(oracle::read_text(std::filesystem::path(WELDKIT_FIXTURE_DIR) / "ldg" / name));
}

// Replaying the reported path must land on the target class.
void check_path(const LDiagram& a, const LDiagram& b, const SearchResult& r) {
  REQUIRE(r.verdict == Verdict::path_found);
  REQUIRE(r.path.has_value());
  CHECK(oracle::isomorphic(canonical_form(replay(a, *r.path)), canonical_form(b)));
}

}  // namespace

TEST_CASE("kink is trivial in one move") {
  const LDiagram k1 = fixture("K1.ldg");
  const auto r = is_trivial(k1, SearchBudget{});
  check_path(k1, fixture("U0.ldg"), r);
  CHECK(r.path->size() == 1);
  CHECK(r.path->front().rule == Rule::kink_remove);
}

TEST_CASE("identical diagrams need no moves") {
  const LDiagram t = fixture("T.ldg");
  const auto r = search_equiv(t, t, SearchBudget{});
  check_path(t, t, r);
  CHECK(r.path->empty());
}

TEST_CASE("trefoil tube is distinguished from the unknot") {
  const auto r = is_trivial(fixture("T.ldg"), SearchBudget{});
  CHECK(r.verdict == Verdict::distinguished);
  CHECK_FALSE(r.path.has_value());
  CHECK(r.reason.find("S3") != std::string::npos);
}

TEST_CASE("structural mismatch is distinguished") {
  LDiagram a = fixture("U0.ldg");
  LDiagram b = a;
  b.dimension = 3;
  CHECK(search_equiv(a, b, SearchBudget{}).verdict == Verdict::distinguished);
  LDiagram c = a;
  c.components.push_back({"B", ComponentKind::arc, {}});
  CHECK(search_equiv(a, c, SearchBudget{}).verdict == Verdict::distinguished);
}

TEST_CASE("scrambled diagrams are recovered") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const LDiagram base = random_diagram(seed % 3, {}, seed);
    const auto s = scramble(base, 2, seed * 7 + 1, 6);
    const auto r = search_equiv(s.diagram, base, SearchBudget{6, 200'000, 4});
    check_path(s.diagram, base, r);
    CHECK(r.path->size() <= 4);
  }
}

TEST_CASE("tight budget reports exhaustion") {
  const LDiagram base = fixture("U0.ldg");
  const auto s = scramble(base, 3, 11, 5);
  if (canonical_key(s.diagram) != canonical_key(base)) {
    const auto r = search_equiv(s.diagram, base, SearchBudget{5, 200'000, 0});
    CHECK(r.verdict == Verdict::exhausted);
  }
}

TEST_CASE("parallel search matches sequential search") {
  const LDiagram base = fixture("T.ldg");
  const auto s = scramble(base, 2, 5, 8);
  SearchOptions one;
  SearchOptions two;
  two.jobs = 3;
  const auto r1 = search_equiv(s.diagram, base, SearchBudget{}, one);
  const auto r2 = search_equiv(s.diagram, base, SearchBudget{}, two);
  CHECK(format_result(r1) == format_result(r2));
  REQUIRE(r1.path.has_value());
  REQUIRE(r2.path.has_value());
  CHECK(serialize_mvt(*r1.path) == serialize_mvt(*r2.path));
}

TEST_CASE("result formatting") {
  const auto r = is_trivial(fixture("K1.ldg"), SearchBudget{});
  const std::string text = format_result(r);
  CHECK(text.rfind("verdict=path-found\n", 0) == 0);
  CHECK(text.find("path_length=1\n") != std::string::npos);
}

#pragma once

// Welded arcs and their tubes.

#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/search.hpp"

namespace weldkit {

struct WeldedPass {
  std::string crossing;
  bool over = true;
  int sign = 1;  // +1 or -1
  bool operator==(const WeldedPass&) const = default;
};

struct WeldedArc {
  std::vector<WeldedPass> passes;
  bool operator==(const WeldedArc&) const = default;
};

class WeldedArcError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Empty iff every crossing occurs once over and once under with one sign.
std::vector<std::string> validate(const WeldedArc& w);

// `wga v1` then `arc: O<id><+|-> U<id><+|-> ...`.
WeldedArc parse_wga(std::string_view text);
std::string serialize_wga(const WeldedArc& w);

// One arc component A, passes in order. The through sheet is the under
// pass; sign + gives dir d, sign - gives dir u.
LDiagram tube(const WeldedArc& w, int dimension = 2);

enum class SMoveVariant {
  negate_sign,       // reverse, keep roles, negate signs (default)
  swap_negate,       // reverse, swap over/under, negate signs
  swap_keep,         // reverse, swap over/under, keep signs
};

// -W*: the pass sequence reversed with the S-move analogue at every crossing.
WeldedArc total_reverse_virtualization(const WeldedArc& w,
                                       SMoveVariant variant = SMoveVariant::negate_sign);

// Same diagram with dimension tag m.
LDiagram reinterpret_dimension(const LDiagram& d, int m);

enum class FiberVerdict { same_fiber_evidence, distinguished, inconclusive };
std::string fiber_verdict_name(FiberVerdict v);

struct FiberResult {
  FiberVerdict verdict = FiberVerdict::inconclusive;
  SearchResult search;
  std::string reason;
};

// Compares invariant reports of the tubes, then searches for a move path.
FiberResult fiber_check(const WeldedArc& w1, const WeldedArc& w2, const SearchBudget& budget,
                        const SearchOptions& opts = {});

}  // namespace weldkit

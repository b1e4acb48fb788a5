#pragma once

// Local rewrite rules on abstract labelled Gauss codes.
//
// Sites are pass positions in traversal order. Pairs listed in a site are
// adjacent on their component, read in traversal order (for loops the pair
// (last, 0) is adjacent). Gap sites name an insertion point: gap g on a
// component sits before pass g.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"

namespace weldkit {

enum class Rule : std::uint8_t {
  kink_add,       // KINK+
  kink_remove,    // KINK-
  cancel_add,     // CANCEL+
  cancel_remove,  // CANCEL-
  slide3,         // SLIDE3
  commute,        // COMMUTE
  end_add,        // END+
  end_remove,     // END-
  sflip,          // SFLIP
};

inline constexpr Rule kAllRules[] = {Rule::kink_add,  Rule::kink_remove, Rule::cancel_add,
                                     Rule::cancel_remove, Rule::slide3,  Rule::commute,
                                     Rule::end_add,   Rule::end_remove,  Rule::sflip};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule_name(std::string_view s);
Rule inverse_rule(Rule r);
bool rule_inserts(Rule r);

using RuleSet = std::set<Rule>;

struct Site {
  std::string component;
  std::vector<std::size_t> indices;
  auto operator<=>(const Site&) const = default;
};

// Parameters of insertion rules. Unused fields stay empty.
struct MoveParams {
  std::optional<Visit> through;  // KINK+: which inserted visit is through
  std::optional<Dir> dir;        // KINK+, END+, CANCEL+ (dir of the first crossing)
  std::optional<bool> swap;      // CANCEL+: containing passes in reverse order
  std::optional<bool> y_first;   // CANCEL+ into one gap: containing pair first
  auto operator<=>(const MoveParams&) const = default;
};

struct MoveInstance {
  Rule rule = Rule::kink_add;
  std::vector<Site> sites;
  MoveParams params;
  auto operator<=>(const MoveInstance&) const = default;
};

class InapplicableMove : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every applicable instance, optionally restricted to `filter`, in a
// deterministic order.
std::vector<MoveInstance> enumerate_moves(const LDiagram& d,
                                          const std::optional<RuleSet>& filter = std::nullopt);

// Throws InapplicableMove if the site or pattern does not match `d`.
LDiagram apply_move(const LDiagram& d, const MoveInstance& m);

// An instance on apply_move(d, m) that restores d up to canonical form.
MoveInstance inverse_move(const LDiagram& d, const MoveInstance& m);

// Number of crossings after applying `m`, without applying it.
std::size_t crossings_after(const LDiagram& d, const MoveInstance& m);

struct ScrambleResult {
  LDiagram diagram;
  std::vector<MoveInstance> trace;
};

// k moves, each drawn uniformly from the applicable instances. Moves whose
// result would exceed `max_crossings` are excluded when a cap is given.
ScrambleResult scramble(const LDiagram& d, std::size_t k, std::uint64_t seed,
                        std::optional<std::size_t> max_crossings = std::nullopt);

LDiagram replay(const LDiagram& d, const std::vector<MoveInstance>& trace);

// .mvt trace format: one instance per line,
//   <rule> <component>:<index>[,<index>...] ... [key=value ...]
std::string format_move(const MoveInstance& m);
MoveInstance parse_move(std::string_view line);
std::string serialize_mvt(const std::vector<MoveInstance>& trace);
std::vector<MoveInstance> parse_mvt(std::string_view text);

// SLIDE3 admissibility. The top strand is the containing sheet at crossings
// x and y; x's through pass is adjacent to the containing pass of z, y's to
// the through pass of z. Each of x, y gets a signed dir: its dir, negated when
// its through pass comes after z's pass on that strand. The table is indexed
// by [signed dir of x is up][signed dir of y is up].
inline constexpr bool kSlide3Admissible[2][2] = {{true, false}, {false, true}};

}  // namespace weldkit

#pragma once

// Bidirectional breadth-first search over canonical forms of L diagrams.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/moves.hpp"

namespace weldkit {

struct SearchBudget {
  std::size_t max_crossings = 8;
  std::size_t max_states = 200'000;
  // Total depth of the two half-searches.
  std::size_t max_depth = 12;
};

enum class Verdict { path_found, distinguished, exhausted };
std::string verdict_name(Verdict v);

struct SearchStats {
  std::size_t states_expanded = 0;
  std::size_t states_visited = 0;
  std::size_t frontier_peak = 0;
  std::size_t depth = 0;
};

struct SearchResult {
  Verdict verdict = Verdict::exhausted;
  // Present iff path_found; replays the source onto the target.
  std::optional<std::vector<MoveInstance>> path;
  SearchStats stats;
  // Which invariant differed, for distinguished.
  std::string reason;
};

struct SearchOptions {
  // Groups for the hom-count gate; nullopt loads S3, S4 and Z5 from the
  // default group directory.
  std::optional<std::vector<FiniteGroup>> gate_groups;
  std::optional<RuleSet> rules;
  unsigned jobs = 1;
  HomCountLimits limits;
};

std::vector<FiniteGroup> default_gate_groups();

SearchResult search_equiv(const LDiagram& a, const LDiagram& b, const SearchBudget& budget,
                          const SearchOptions& opts = {});

// Crossing-free diagram with the same components as `d`.
LDiagram trivial_like(const LDiagram& d);
SearchResult is_trivial(const LDiagram& d, const SearchBudget& budget, const SearchOptions& opts = {});

// key=value lines.
std::string format_result(const SearchResult& r);

}  // namespace weldkit

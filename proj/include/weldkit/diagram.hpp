#pragma once

// Abstract labelled Gauss codes for ribbon knot diagrams.
//
// A diagram is a list of components (arcs or loops), each a sequence of
// passes through 4-valent crossings. Every crossing is visited exactly twice;
// its label says which visit is the through sheet and from which side of the
// containing sheet it penetrates, measured along the through strand's
// reading direction. Reversing a component therefore flips `dir` at every
// crossing whose through pass lies on it.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weldkit {

enum class Visit : std::uint8_t { first, second };
enum class Dir : std::uint8_t { up, down };
enum class ComponentKind : std::uint8_t { arc, loop };

constexpr Visit other(Visit v) { return v == Visit::first ? Visit::second : Visit::first; }
constexpr Dir flip(Dir d) { return d == Dir::up ? Dir::down : Dir::up; }
// +1 for up, -1 for down: the exponent of the conjugating generator.
constexpr int sign(Dir d) { return d == Dir::up ? 1 : -1; }

// Natural ordering of crossing ids: all-digit ids numerically, ahead of
// everything else, which sorts as plain strings.
struct IdLess {
  bool operator()(std::string_view a, std::string_view b) const;
  using is_transparent = void;
};

struct Pass {
  std::string crossing;
  Visit visit = Visit::first;
  bool operator==(const Pass&) const = default;
};

struct CrossingLabel {
  Visit through = Visit::first;
  Dir dir = Dir::up;
  bool operator==(const CrossingLabel&) const = default;
};

struct Component {
  std::string name;
  ComponentKind kind = ComponentKind::arc;
  std::vector<Pass> passes;
  bool operator==(const Component&) const = default;
};

// Location of one pass inside a diagram.
struct PassRef {
  std::size_t component = 0;
  std::size_t index = 0;
  bool operator==(const PassRef&) const = default;
};

struct LDiagram {
  int dimension = 2;
  bool allow_torus = false;
  std::vector<Component> components;
  std::map<std::string, CrossingLabel, IdLess> crossings;

  bool operator==(const LDiagram&) const = default;

  std::size_t crossing_count() const { return crossings.size(); }
  std::size_t pass_count() const;
  std::optional<std::size_t> find_component(std::string_view name) const;
  const Pass& pass(PassRef r) const { return components[r.component].passes[r.index]; }
  bool is_through(PassRef r) const;
};

// Positions of the first and second visit of every crossing.
using PassIndex = std::map<std::string, std::array<PassRef, 2>, IdLess>;
PassIndex index_passes(const LDiagram& d);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DiagramError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_identifier(std::string_view s);

// Reads a .ldg document and validates it; throws ParseError on syntax
// problems and DiagramError on invariant violations.
LDiagram parse_ldg(std::string_view text);
// Syntax-only parse; the result may violate diagram invariants.
LDiagram parse_ldg_unchecked(std::string_view text);
std::string serialize_ldg(const LDiagram& d);

// Empty iff every diagram invariant holds.
std::vector<std::string> validate(const LDiagram& d);

// Same diagram read backwards along component `c`.
LDiagram reverse_component(const LDiagram& d, std::size_t c);

// Representative of the diagram's class under component reordering,
// crossing renaming, per-component reversal and loop rotation; it is the
// candidate with the lexicographically least serialization. Components are
// renamed C0, C1, ... and crossings 1, 2, ... in first-occurrence order.
LDiagram canonical_form(const LDiagram& d);
// serialize_ldg(canonical_form(d)), computed without building the diagram
// twice; used as a search key.
std::string canonical_key(const LDiagram& d);

// Smallest positive integer id not used by `d`.
std::string fresh_crossing_id(const LDiagram& d);

struct RandomDiagramOptions {
  std::vector<ComponentKind> components{ComponentKind::arc};
  int dimension = 2;
};

// Uniformly shuffled passes distributed over the requested components, with
// random labels. Loops in dimension 2 set the allow-torus flag.
LDiagram random_diagram(std::size_t crossings, const RandomDiagramOptions& opts,
                        std::uint64_t seed);

}  // namespace weldkit

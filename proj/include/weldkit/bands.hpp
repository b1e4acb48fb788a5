#pragma once

// Band presentations: balls joined by bands that may pass through balls.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"

namespace weldkit {

struct BandPassage {
  int ball = 0;
  Dir dir = Dir::up;
  bool operator==(const BandPassage&) const = default;
};

struct Band {
  std::string name;
  int from = 0;
  int to = 1;
  std::vector<BandPassage> through;  // read from `from` to `to`
  bool operator==(const Band&) const = default;
};

struct BandPresentation {
  int dimension = 2;
  int balls = 0;
  std::vector<Band> bands;
  // The balls are assumed to form an unlink; nothing here can check it.
  bool properly_ribbon = true;
  bool operator==(const BandPresentation&) const = default;
};

class BandError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> validate(const BandPresentation& b);

// Bands join balls i and i+1, once each, for every i.
bool is_arc_like(const BandPresentation& b);
// The band graph is a path through all balls.
bool is_path_like(const BandPresentation& b);
// Renumbers the balls of a path-like presentation along the path, starting
// at the end ball with the smaller index, and orients every band forward.
BandPresentation normalize_arc_like(const BandPresentation& b);

// `bnd v1 dim=<n>`, `balls: <k>`, then
// `band <name> from <i> to <j> through: (<ball><u|d>)*`.
BandPresentation parse_bnd(std::string_view text);
std::string serialize_bnd(const BandPresentation& b);

// One arc A through the balls in path order; a crossing per passage, the
// band pass being through. Containing passes inside a ball are ordered by
// band then by position along the band.
LDiagram to_ldiagram(const BandPresentation& b);

// Adds a ball with an empty band at `position`, which is 0 or the ball count.
BandPresentation trivial_addition(const BandPresentation& b, int position);
// Removes end ball `position` and its empty band; nothing may pass through it.
BandPresentation trivial_deletion(const BandPresentation& b, int position);

enum class BandEnd { from, to };

// Moves the chosen end of band `moving` across band `guide`, which must
// have an endpoint at that ball; `moving` picks up the guide's passages.
BandPresentation band_slide(const BandPresentation& b, const std::string& moving,
                            const std::string& guide, BandEnd end);
// Undoes band_slide(.., moving, guide, end): the end goes back across the
// guide and the guide's passages are removed.
BandPresentation band_unslide(const BandPresentation& b, const std::string& moving,
                              const std::string& guide, BandEnd end);

// Band `moving` passes through band `other` at `position`: a passage pair
// (s, u), (s, d) is inserted, s being the `from` ball of `other`.
BandPresentation band_pass(const BandPresentation& b, const std::string& moving,
                           const std::string& other, std::size_t position);
// Removes the pair inserted by band_pass.
BandPresentation band_unpass(const BandPresentation& b, const std::string& moving,
                             const std::string& other, std::size_t position);

}  // namespace weldkit

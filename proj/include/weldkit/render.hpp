#pragma once

#include <string>

#include "weldkit/diagram.hpp"

namespace weldkit {

// Core graph in DOT: a node per crossing labelled "t=<a|b> d=<u|d>", start
// and end nodes for every arc, and an edge per step along each component.
std::string render_dot(const LDiagram& d);

}  // namespace weldkit

#include "weldkit/render.hpp"

#include <sstream>

namespace weldkit {

std::string render_dot(const LDiagram& d) {
  std::ostringstream os;
  os << "graph core {\n";
  for (const auto& [id, label] : d.crossings) {
    os << "  \"x" << id << "\" [label=\"t=" << (label.through == Visit::first ? 'a' : 'b')
       << " d=" << (label.dir == Dir::up ? 'u' : 'd') << "\"];\n";
  }
  for (const auto& c : d.components) {
    if (c.kind == ComponentKind::arc) {
      os << "  \"" << c.name << ".start\" [shape=point];\n";
      os << "  \"" << c.name << ".end\" [shape=point];\n";
    }
  }
  for (const auto& c : d.components) {
    std::vector<std::string> nodes;
    if (c.kind == ComponentKind::arc) nodes.push_back(c.name + ".start");
    for (const auto& p : c.passes) nodes.push_back("x" + p.crossing);
    if (c.kind == ComponentKind::arc) {
      nodes.push_back(c.name + ".end");
    } else if (!c.passes.empty()) {
      nodes.push_back("x" + c.passes.front().crossing);
    } else {
      os << "  // empty loop " << c.name << '\n';
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      os << "  \"" << nodes[i] << "\" -- \"" << nodes[i + 1] << "\" [label=\"" << c.name << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace weldkit

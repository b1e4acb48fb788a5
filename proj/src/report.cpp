#include <algorithm>
#include <sstream>

#include "weldkit/invariants.hpp"

namespace weldkit {

std::string invariant_report(const LDiagram& d, const InvariantOptions& opts) {
  const GroupPresentation raw = wirtinger_presentation(d);
  const GroupPresentation simple = simplify(raw);
  std::ostringstream os;
  os << "crossings = " << d.crossing_count() << '\n';
  os << "components = " << d.components.size() << '\n';
  os << "generators = " << simple.generators.size() << '\n';
  os << "relators = " << simple.relators.size() << '\n';

  std::vector<const FiniteGroup*> groups;
  for (const auto& g : opts.groups) groups.push_back(&g);
  std::sort(groups.begin(), groups.end(), [](const FiniteGroup* a, const FiniteGroup* b) {
    return a->name() < b->name();
  });
  for (const FiniteGroup* g : groups) {
    try {
      if (opts.profiles) {
        const PeripheralProfile profile = peripheral_hom_profile(raw, *g, opts.limits);
        std::uint64_t total = 0;
        for (const auto& [key, count] : profile) total += count;
        os << "hom " << g->name() << " = " << total << '\n';
        os << "profile " << g->name() << " = " << format_profile(profile, *g) << '\n';
      } else {
        os << "hom " << g->name() << " = " << hom_count(raw, *g, opts.limits) << '\n';
      }
    } catch (const ResourceLimitExceeded&) {
      os << "hom " << g->name() << " = limit-exceeded\n";
    }
  }
  if (opts.alexander) {
    try {
      os << "alexander = " << alexander_polynomial(simple).to_string() << '\n';
    } catch (const UnsupportedPresentation&) {
      os << "alexander = unsupported\n";
    }
  }
  return os.str();
}

}  // namespace weldkit

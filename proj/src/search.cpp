#include "weldkit/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace weldkit {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::path_found: return "path-found";
    case Verdict::distinguished: return "distinguished";
    case Verdict::exhausted: return "exhausted";
  }
  return "exhausted";
}

std::vector<FiniteGroup> default_gate_groups() {
  std::vector<FiniteGroup> out;
  for (const char* name : {"S3", "S4", "Z5"}) {
    out.push_back(load_named_group(default_group_dir(), name));
  }
  return out;
}

LDiagram trivial_like(const LDiagram& d) {
  LDiagram t;
  t.dimension = d.dimension;
  t.allow_torus = d.allow_torus;
  for (const auto& c : d.components) t.components.push_back({c.name, c.kind, {}});
  return t;
}

namespace {

std::vector<ComponentKind> kinds(const LDiagram& d) {
  std::vector<ComponentKind> out;
  for (const auto& c : d.components) out.push_back(c.kind);
  std::sort(out.begin(), out.end());
  return out;
}

// Empty when no gate invariant differs.
std::string gate(const LDiagram& a, const LDiagram& b, const SearchOptions& opts) {
  if (a.dimension != b.dimension) return "dimension differs";
  if (kinds(a) != kinds(b)) return "component kinds differ";
  const auto groups = opts.gate_groups ? *opts.gate_groups : default_gate_groups();
  const auto pa = wirtinger_presentation(a);
  const auto pb = wirtinger_presentation(b);
  for (const auto& g : groups) {
    try {
      const auto ha = hom_count(pa, g, opts.limits);
      const auto hb = hom_count(pb, g, opts.limits);
      if (ha != hb) {
        return "hom " + g.name() + " " + std::to_string(ha) + " vs " + std::to_string(hb);
      }
    } catch (const ResourceLimitExceeded&) {
    }
  }
  return {};
}

struct Node {
  std::string parent;  // empty for the root
  std::size_t depth = 0;
};

struct Side {
  std::unordered_map<std::string, Node> visited;
  // Canonical keys with one representative diagram each, sorted by key.
  std::vector<std::pair<std::string, LDiagram>> frontier;
  std::size_t depth = 0;
};

using Neighbours = std::vector<std::pair<std::string, LDiagram>>;

Neighbours expand(const LDiagram& d, const SearchBudget& budget, const SearchOptions& opts) {
  Neighbours out;
  for (const auto& m : enumerate_moves(d, opts.rules)) {
    if (crossings_after(d, m) > budget.max_crossings) continue;
    LDiagram next = canonical_form(apply_move(d, m));
    std::string key = serialize_ldg(next);
    out.emplace_back(std::move(key), std::move(next));
  }
  return out;
}

std::vector<Neighbours> expand_all(const Side& side, const SearchBudget& budget,
                                   const SearchOptions& opts) {
  std::vector<Neighbours> out(side.frontier.size());
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || side.frontier.size() < 2) {
    for (std::size_t i = 0; i < side.frontier.size(); ++i) {
      out[i] = expand(side.frontier[i].second, budget, opts);
    }
    return out;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < side.frontier.size(); i += jobs) {
        out[i] = expand(side.frontier[i].second, budget, opts);
      }
    });
  }
  for (auto& t : workers) t.join();
  return out;
}

// Keys from the side's root to `key`.
std::vector<std::string> chain(const Side& side, const std::string& key) {
  std::vector<std::string> out;
  for (std::string k = key; !k.empty(); k = side.visited.at(k).parent) out.push_back(k);
  std::reverse(out.begin(), out.end());
  return out;
}

// Concrete moves from `a` through the given canonical keys.
std::vector<MoveInstance> realize(const LDiagram& a, const std::vector<std::string>& keys,
                                  const SearchOptions& opts) {
  std::vector<MoveInstance> path;
  LDiagram cur = a;
  for (std::size_t i = 1; i < keys.size(); ++i) {
    bool found = false;
    for (const auto& m : enumerate_moves(cur, opts.rules)) {
      LDiagram next = apply_move(cur, m);
      if (canonical_key(next) == keys[i]) {
        path.push_back(m);
        cur = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("search: cannot realize a recorded step");
  }
  return path;
}

}  // namespace

SearchResult search_equiv(const LDiagram& a, const LDiagram& b, const SearchBudget& budget,
                          const SearchOptions& opts) {
  SearchResult result;
  if (std::string why = gate(a, b, opts); !why.empty()) {
    result.verdict = Verdict::distinguished;
    result.reason = why;
    return result;
  }
  Side sides[2];
  const LDiagram roots[2] = {canonical_form(a), canonical_form(b)};
  for (int s = 0; s < 2; ++s) {
    std::string key = serialize_ldg(roots[s]);
    sides[s].visited.emplace(key, Node{});
    sides[s].frontier.emplace_back(key, roots[s]);
  }
  auto finish = [&](const std::string& meet) {
    std::vector<std::string> keys = chain(sides[0], meet);
    std::vector<std::string> back = chain(sides[1], meet);
    keys.insert(keys.end(), back.rbegin() + 1, back.rend());
    result.verdict = Verdict::path_found;
    result.path = realize(a, keys, opts);
    result.stats.depth = keys.size() - 1;
    result.stats.states_visited = sides[0].visited.size() + sides[1].visited.size();
    return result;
  };
  if (sides[1].visited.contains(sides[0].frontier[0].first)) return finish(sides[0].frontier[0].first);

  while (true) {
    result.stats.frontier_peak =
        std::max({result.stats.frontier_peak, sides[0].frontier.size(), sides[1].frontier.size()});
    if (sides[0].depth + sides[1].depth >= budget.max_depth) break;
    int s = -1;
    for (int c = 0; c < 2; ++c) {
      if (sides[c].frontier.empty()) continue;
      if (s < 0 || sides[c].frontier.size() < sides[s].frontier.size()) s = c;
    }
    if (s < 0) break;
    Side& side = sides[s];
    const Side& other = sides[1 - s];
    const auto neighbours = expand_all(side, budget, opts);
    result.stats.states_expanded += side.frontier.size();
    std::map<std::string, LDiagram> next;
    for (std::size_t i = 0; i < side.frontier.size(); ++i) {
      for (const auto& [key, diagram] : neighbours[i]) {
        if (side.visited.contains(key)) continue;
        side.visited.emplace(key, Node{side.frontier[i].first, side.depth + 1});
        if (other.visited.contains(key)) {
          side.depth += 1;
          return finish(key);
        }
        next.emplace(key, diagram);
        if (sides[0].visited.size() + sides[1].visited.size() > budget.max_states) {
          result.stats.states_visited = sides[0].visited.size() + sides[1].visited.size();
          return result;
        }
      }
    }
    side.frontier.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
    side.depth += 1;
  }
  result.stats.states_visited = sides[0].visited.size() + sides[1].visited.size();
  return result;
}

SearchResult is_trivial(const LDiagram& d, const SearchBudget& budget, const SearchOptions& opts) {
  return search_equiv(d, trivial_like(d), budget, opts);
}

std::string format_result(const SearchResult& r) {
  std::ostringstream os;
  os << "verdict=" << verdict_name(r.verdict) << '\n';
  if (!r.reason.empty()) os << "reason=" << r.reason << '\n';
  if (r.path) os << "path_length=" << r.path->size() << '\n';
  os << "states_expanded=" << r.stats.states_expanded << '\n';
  os << "states_visited=" << r.stats.states_visited << '\n';
  os << "frontier_peak=" << r.stats.frontier_peak << '\n';
  return os.str();
}

}  // namespace weldkit

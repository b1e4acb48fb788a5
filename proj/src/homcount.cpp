#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "weldkit/invariants.hpp"

namespace weldkit {

namespace {

class HomSearch {
 public:
  // Called once per homomorphism orbit representative with its weight.
  using Leaf = std::function<void(const std::vector<int>&, std::uint64_t)>;

  HomSearch(const GroupPresentation& p, const FiniteGroup& g, const HomCountLimits& limits)
      : p_(p), g_(g), limits_(limits), n_(static_cast<int>(p.generators.size())) {
    if (p.generators.size() * static_cast<std::size_t>(g.order()) > limits.max_generators_times_order) {
      throw ResourceLimitExceeded("hom count: " + std::to_string(p.generators.size()) +
                                  " generators into " + g.name() + " exceeds the size limit");
    }
    for (const Word& r : p.relators) {
      std::vector<int> gens;
      for (const auto& l : r.letters()) gens.push_back(l.gen);
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      relator_gens_.push_back(std::move(gens));
    }
    parent_.resize(static_cast<std::size_t>(n_));
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const Word& r : p.relators) detect_conjugacy(r.cyclically_reduced());
  }

  void run(const Leaf& leaf) {
    std::vector<int> value(static_cast<std::size_t>(n_), -1);
    leaf_ = &leaf;
    dfs(value, 1);
  }

 private:
  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      a = parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
    }
    return a;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

  // x^e u^f y^-e u^-f in some rotation, or x y^-1: x and y are conjugate.
  void detect_conjugacy(const Word& r) {
    if (r.size() == 2 && r[0].exp == -r[1].exp) {
      unite(r[0].gen, r[1].gen);
      return;
    }
    if (r.size() != 4) return;
    for (std::size_t k = 0; k < 4; ++k) {
      const Letter& x = r[k];
      const Letter& u = r[(k + 1) % 4];
      const Letter& y = r[(k + 2) % 4];
      const Letter& v = r[(k + 3) % 4];
      if (u.gen == v.gen && u.exp == -v.exp && x.exp == -y.exp && x.gen != u.gen && y.gen != u.gen) {
        unite(x.gen, y.gen);
        return;
      }
    }
  }

  int eval(const Word& w, const std::vector<int>& value) const {
    int acc = g_.identity();
    for (const auto& l : w.letters()) {
      const int v = value[static_cast<std::size_t>(l.gen)];
      acc = g_.mul(acc, l.exp > 0 ? v : g_.inv(v));
    }
    return acc;
  }

  // Solves forced generators; false on a violated relator.
  bool propagate(std::vector<int>& value) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < p_.relators.size(); ++i) {
        int unknown = -1;
        int unknown_count = 0;
        for (int gen : relator_gens_[i]) {
          if (value[static_cast<std::size_t>(gen)] < 0) {
            unknown = gen;
            ++unknown_count;
          }
        }
        const Word& r = p_.relators[i];
        if (unknown_count == 0) {
          if (eval(r, value) != g_.identity()) return false;
          continue;
        }
        if (unknown_count > 1 || r.occurrences(unknown) != 1) continue;
        // r = A g^e B, so g^e = A^-1 B^-1.
        int a = g_.identity();
        int b = g_.identity();
        int e = 1;
        bool after = false;
        for (const auto& l : r.letters()) {
          if (l.gen == unknown) {
            e = l.exp;
            after = true;
            continue;
          }
          const int v = value[static_cast<std::size_t>(l.gen)];
          int& acc = after ? b : a;
          acc = g_.mul(acc, l.exp > 0 ? v : g_.inv(v));
        }
        const int ge = g_.mul(g_.inv(a), g_.inv(b));
        value[static_cast<std::size_t>(unknown)] = e > 0 ? ge : g_.inv(ge);
        changed = true;
      }
    }
    return true;
  }

  std::vector<int> domain(int gen, const std::vector<int>& value) {
    const int root = find(gen);
    for (int other = 0; other < n_; ++other) {
      const int v = value[static_cast<std::size_t>(other)];
      if (v >= 0 && find(other) == root) return g_.class_members(g_.class_of(v));
    }
    std::vector<int> all(static_cast<std::size_t>(g_.order()));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  // Relators that become solvable, and relators touched, once `gen` is set.
  std::pair<int, int> reach(int gen, const std::vector<int>& value) const {
    int enables = 0;
    int touches = 0;
    for (std::size_t i = 0; i < relator_gens_.size(); ++i) {
      const auto& gens = relator_gens_[i];
      if (!std::binary_search(gens.begin(), gens.end(), gen)) continue;
      ++touches;
      int unknown = 0;
      for (int x : gens) unknown += value[static_cast<std::size_t>(x)] < 0;
      enables += unknown == 2;
    }
    return {enables, touches};
  }

  void dfs(std::vector<int> value, std::uint64_t weight) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceLimitExceeded("hom count into " + g_.name() + ": node limit exceeded");
    }
    if (!propagate(value)) return;
    // Prefer generators that unlock propagation, then small domains.
    int best = -1;
    std::vector<int> best_domain;
    std::pair<int, int> best_reach;
    for (int gen = 0; gen < n_; ++gen) {
      if (value[static_cast<std::size_t>(gen)] >= 0) continue;
      std::vector<int> dom = domain(gen, value);
      const auto r = reach(gen, value);
      const bool better = best < 0 || (r.first > 0) > (best_reach.first > 0) ||
                          ((r.first > 0) == (best_reach.first > 0) &&
                           (dom.size() < best_domain.size() ||
                            (dom.size() == best_domain.size() && r > best_reach)));
      if (better) {
        best = gen;
        best_domain = std::move(dom);
        best_reach = r;
      }
    }
    if (best < 0) {
      (*leaf_)(value, weight);
      return;
    }
    const bool fresh = std::all_of(value.begin(), value.end(), [](int v) { return v < 0; });
    if (fresh) {
      // Conjugation permutes homomorphisms, so one value per class suffices.
      for (int cls = 0; cls < g_.class_count(); ++cls) {
        const auto& members = g_.class_members(cls);
        value[static_cast<std::size_t>(best)] = members.front();
        dfs(value, weight * members.size());
      }
      return;
    }
    for (int v : best_domain) {
      value[static_cast<std::size_t>(best)] = v;
      dfs(value, weight);
    }
  }

  const GroupPresentation& p_;
  const FiniteGroup& g_;
  HomCountLimits limits_;
  int n_;
  std::vector<std::vector<int>> relator_gens_;
  std::vector<int> parent_;
  std::uint64_t nodes_ = 0;
  const Leaf* leaf_ = nullptr;
};

int eval_word(const Word& w, const FiniteGroup& g, const std::vector<int>& value) {
  int acc = g.identity();
  for (const auto& l : w.letters()) {
    const int v = value[static_cast<std::size_t>(l.gen)];
    acc = g.mul(acc, l.exp > 0 ? v : g.inv(v));
  }
  return acc;
}

// Few generators after simplification make plain backtracking cheap; the
// raw presentation keeps its short relators and conjugacy structure.
GroupPresentation search_form(const GroupPresentation& p) {
  GroupPresentation q = simplify(p);
  return q.generators.size() <= 3 ? q : p;
}

}  // namespace

std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g, const HomCountLimits& limits) {
  std::uint64_t count = 0;
  HomSearch(search_form(p), g, limits).run([&](const std::vector<int>&, std::uint64_t w) { count += w; });
  return count;
}

PeripheralProfile peripheral_hom_profile(const GroupPresentation& p, const FiniteGroup& g,
                                         const HomCountLimits& limits) {
  PeripheralProfile profile;
  const GroupPresentation q = search_form(p);
  HomSearch(q, g, limits).run([&](const std::vector<int>& value, std::uint64_t w) {
    std::vector<std::pair<int, int>> key;
    for (const auto& per : q.peripherals) {
      key.emplace_back(g.class_of(eval_word(per.meridian, g, value)),
                       g.class_of(eval_word(per.longitude, g, value)));
    }
    std::sort(key.begin(), key.end());
    profile[key] += w;
  });
  return profile;
}

std::string format_profile(const PeripheralProfile& profile, const FiniteGroup& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, count] : profile) {
    os << (first ? "" : " ");
    first = false;
    for (std::size_t i = 0; i < key.size(); ++i) {
      os << (i ? "|" : "") << g.class_label(key[i].first) << ':' << g.class_label(key[i].second);
    }
    os << '*' << count;
  }
  return os.str();
}

}  // namespace weldkit

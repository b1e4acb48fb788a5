#include "weldkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace weldkit {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

char visit_char(Visit v) { return v == Visit::first ? 'a' : 'b'; }
char dir_char(Dir d) { return d == Dir::up ? 'u' : 'd'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

}  // namespace

bool IdLess::operator()(std::string_view a, std::string_view b) const {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da) {
    const auto sa = strip_zeros(a);
    const auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::size_t LDiagram::pass_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.passes.size();
  return n;
}

std::optional<std::size_t> LDiagram::find_component(std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name == name) return i;
  }
  return std::nullopt;
}

bool LDiagram::is_through(PassRef r) const {
  const Pass& p = pass(r);
  return crossings.at(p.crossing).through == p.visit;
}

PassIndex index_passes(const LDiagram& d) {
  PassIndex idx;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& passes = d.components[c].passes;
    for (std::size_t i = 0; i < passes.size(); ++i) {
      idx[passes[i].crossing][passes[i].visit == Visit::first ? 0 : 1] = {c, i};
    }
  }
  return idx;
}

// ---------------------------------------------------------------------------
// .ldg text format

LDiagram parse_ldg_unchecked(std::string_view text) {
  LDiagram d;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::set<std::string> names;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    auto fail = [&](const Token& t, const std::string& msg) -> ParseError {
      return ParseError(line_no, t.column, msg);
    };

    if (!have_header) {
      if (toks[0].text != "ldg") throw fail(toks[0], "expected header 'ldg v1 dim=<n>'");
      if (toks.size() < 3 || toks.size() > 4) throw fail(toks[0], "malformed header");
      if (toks[1].text != "v1") throw fail(toks[1], "unsupported version");
      const auto dim = toks[2].text;
      if (dim.substr(0, 4) != "dim=" || !all_digits(dim.substr(4))) {
        throw fail(toks[2], "expected dim=<n>");
      }
      int n = 0;
      std::from_chars(dim.data() + 4, dim.data() + dim.size(), n);
      d.dimension = n;
      if (toks.size() == 4) {
        if (toks[3].text != "allow-torus") throw fail(toks[3], "unknown header flag");
        d.allow_torus = true;
      }
      have_header = true;
      continue;
    }

    if (toks[0].text == "comp") {
      if (toks.size() < 3) throw fail(toks[0], "expected 'comp <name> <arc|loop>:'");
      if (!is_identifier(toks[1].text)) throw fail(toks[1], "invalid component name");
      Component comp;
      comp.name = std::string(toks[1].text);
      if (toks[2].text == "arc:") {
        comp.kind = ComponentKind::arc;
      } else if (toks[2].text == "loop:") {
        comp.kind = ComponentKind::loop;
      } else {
        throw fail(toks[2], "expected 'arc:' or 'loop:'");
      }
      if (!names.insert(comp.name).second) {
        throw fail(toks[1], "duplicate component name " + comp.name);
      }
      for (std::size_t i = 3; i < toks.size(); ++i) {
        const auto t = toks[i].text;
        const char v = t.back();
        const auto id = t.substr(0, t.size() - 1);
        if (t.size() < 2 || (v != 'a' && v != 'b') || !is_identifier(id)) {
          throw fail(toks[i], "malformed pass '" + std::string(t) + "'");
        }
        comp.passes.push_back({std::string(id), v == 'a' ? Visit::first : Visit::second});
      }
      d.components.push_back(std::move(comp));
    } else if (toks[0].text == "x") {
      if (toks.size() != 4) throw fail(toks[0], "expected 'x <id> t=<a|b> d=<u|d>'");
      if (!is_identifier(toks[1].text)) throw fail(toks[1], "invalid crossing id");
      CrossingLabel label;
      const auto t = toks[2].text;
      if (t == "t=a") {
        label.through = Visit::first;
      } else if (t == "t=b") {
        label.through = Visit::second;
      } else {
        throw fail(toks[2], "expected t=a or t=b");
      }
      const auto dd = toks[3].text;
      if (dd == "d=u") {
        label.dir = Dir::up;
      } else if (dd == "d=d") {
        label.dir = Dir::down;
      } else {
        throw fail(toks[3], "expected d=u or d=d");
      }
      if (!d.crossings.emplace(std::string(toks[1].text), label).second) {
        throw fail(toks[1], "duplicate crossing id " + std::string(toks[1].text));
      }
    } else {
      throw fail(toks[0], "unknown declaration '" + std::string(toks[0].text) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, 1, "missing header");
  return d;
}

LDiagram parse_ldg(std::string_view text) {
  LDiagram d = parse_ldg_unchecked(text);
  const auto problems = validate(d);
  if (!problems.empty()) throw DiagramError(problems.front());
  return d;
}

std::string serialize_ldg(const LDiagram& d) {
  std::string out = "ldg v1 dim=" + std::to_string(d.dimension);
  if (d.allow_torus) out += " allow-torus";
  out += '\n';
  for (const auto& c : d.components) {
    out += "comp " + c.name + (c.kind == ComponentKind::arc ? " arc:" : " loop:");
    for (const auto& p : c.passes) {
      out += ' ';
      out += p.crossing;
      out += visit_char(p.visit);
    }
    out += '\n';
  }
  for (const auto& [id, label] : d.crossings) {
    out += "x " + id + " t=" + visit_char(label.through) + " d=" + dir_char(label.dir) + '\n';
  }
  return out;
}

std::vector<std::string> validate(const LDiagram& d) {
  std::vector<std::string> out;
  if (d.dimension < 2) out.push_back("dimension must be at least 2");
  std::set<std::string> names;
  std::map<std::string, std::array<int, 2>, IdLess> visits;
  for (const auto& c : d.components) {
    if (!is_identifier(c.name)) out.push_back("invalid component name '" + c.name + "'");
    if (!names.insert(c.name).second) out.push_back("duplicate component name " + c.name);
    if (c.kind == ComponentKind::loop && d.dimension == 2 && !d.allow_torus) {
      out.push_back("loop component " + c.name + " in dimension 2 requires allow-torus");
    }
    for (const auto& p : c.passes) {
      ++visits[p.crossing][p.visit == Visit::first ? 0 : 1];
    }
  }
  for (const auto& [id, n] : visits) {
    if (n[0] + n[1] != 2) {
      out.push_back("crossing multiplicity: " + id + " used " + std::to_string(n[0] + n[1]) +
                    " times");
    } else if (n[0] != 1) {
      out.push_back("duplicate visit: crossing " + id + " needs one 'a' and one 'b' pass");
    }
    if (!d.crossings.contains(id)) out.push_back("missing label: crossing " + id);
  }
  for (const auto& [id, label] : d.crossings) {
    if (!is_identifier(id)) out.push_back("invalid crossing id '" + id + "'");
    if (!visits.contains(id)) out.push_back("unused label: crossing " + id);
  }
  return out;
}

LDiagram reverse_component(const LDiagram& d, std::size_t c) {
  LDiagram out = d;
  auto& passes = out.components.at(c).passes;
  std::reverse(passes.begin(), passes.end());
  for (const auto& p : passes) {
    auto& label = out.crossings.at(p.crossing);
    if (label.through == p.visit) label.dir = flip(label.dir);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct Variant {
  std::size_t comp;
  bool reversed;
  std::size_t rotation;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const LDiagram& d) : d_(d) {
    for (const auto& [id, label] : d.crossings) {
      ids_.emplace(id, static_cast<int>(labels_.size()));
      labels_.push_back(label);
    }
    code_.resize(d.components.size());
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      for (const auto& p : d.components[c].passes) {
        code_[c].push_back({ids_.at(p.crossing), p.visit});
      }
    }
  }

  void run() {
    State s;
    s.rename.assign(labels_.size(), -1);
    s.first_visit.assign(labels_.size(), Visit::first);
    s.reversed.assign(d_.components.size(), false);
    s.used.assign(d_.components.size(), false);
    s.text = "ldg v1 dim=" + std::to_string(d_.dimension) +
             (d_.allow_torus ? " allow-torus" : "") + "\n";
    search(s);
  }

  const std::string& key() const { return best_text_; }

  LDiagram diagram() const {
    LDiagram out;
    out.dimension = d_.dimension;
    out.allow_torus = d_.allow_torus;
    std::vector<std::string> names(labels_.size());
    for (std::size_t k = 0; k < best_.order.size(); ++k) {
      const Variant& v = best_.order[k];
      Component comp;
      comp.name = "C" + std::to_string(k);
      comp.kind = d_.components[v.comp].kind;
      for (std::size_t i : sequence(v)) {
        const auto [x, visit] = code_[v.comp][i];
        const int nid = best_.rename[static_cast<std::size_t>(x)];
        comp.passes.push_back({std::to_string(nid), visit == best_.first_visit[static_cast<std::size_t>(x)]
                                                        ? Visit::first
                                                        : Visit::second});
      }
      out.components.push_back(std::move(comp));
    }
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      out.crossings.emplace(std::to_string(best_.rename[x]), final_label(best_, x));
    }
    return out;
  }

 private:
  struct State {
    std::vector<int> rename;
    std::vector<Visit> first_visit;
    std::vector<bool> reversed;
    std::vector<bool> used;
    std::vector<Variant> order;
    int next = 1;
    std::string text;
  };

  std::vector<std::size_t> sequence(const Variant& v) const {
    const std::size_t n = code_[v.comp].size();
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!v.reversed) {
        seq[i] = (v.rotation + i) % n;
      } else {
        seq[i] = (v.rotation + n - i) % n;
      }
    }
    return seq;
  }

  std::vector<Variant> variants(std::size_t c) const {
    std::vector<Variant> out;
    const std::size_t n = code_[c].size();
    if (d_.components[c].kind == ComponentKind::arc) {
      out.push_back({c, false, 0});
      if (n > 0) out.push_back({c, true, n - 1});
    } else {
      if (n == 0) out.push_back({c, false, 0});
      for (std::size_t r = 0; r < n; ++r) {
        out.push_back({c, false, r});
        out.push_back({c, true, r});
      }
    }
    return out;
  }

  // Line for the component at slot `slot`, updating the renaming in `s`.
  std::string emit(State& s, const Variant& v, std::size_t slot) const {
    std::string line = "comp C" + std::to_string(slot) +
                       (d_.components[v.comp].kind == ComponentKind::arc ? " arc:" : " loop:");
    for (std::size_t i : sequence(v)) {
      const auto [x, visit] = code_[v.comp][i];
      const auto ux = static_cast<std::size_t>(x);
      char vc = 'b';
      if (s.rename[ux] < 0) {
        s.rename[ux] = s.next++;
        s.first_visit[ux] = visit;
        vc = 'a';
      }
      line += ' ';
      line += std::to_string(s.rename[ux]);
      line += vc;
    }
    line += '\n';
    return line;
  }

  CrossingLabel final_label(const State& s, std::size_t x) const {
    const CrossingLabel& orig = labels_[x];
    CrossingLabel out;
    out.through = orig.through == s.first_visit[x] ? Visit::first : Visit::second;
    // Which component holds the through pass decides whether dir flips.
    out.dir = orig.dir;
    for (std::size_t c = 0; c < code_.size(); ++c) {
      for (const auto& [y, visit] : code_[c]) {
        if (static_cast<std::size_t>(y) == x && visit == orig.through) {
          if (s.reversed[c]) out.dir = flip(out.dir);
        }
      }
    }
    return out;
  }

  void finish(State& s) {
    // Labels sorted by new id, which is numeric order of first occurrence.
    std::vector<std::size_t> by_new(labels_.size());
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      by_new[static_cast<std::size_t>(s.rename[x] - 1)] = x;
    }
    std::string text = s.text;
    for (std::size_t x : by_new) {
      const auto label = final_label(s, x);
      text += "x " + std::to_string(s.rename[x]) + " t=" + visit_char(label.through) +
              " d=" + dir_char(label.dir) + '\n';
    }
    if (!have_best_ || text < best_text_) {
      best_text_ = std::move(text);
      best_ = s;
      have_best_ = true;
    }
  }

  void search(State& s) {
    const std::size_t slot = s.order.size();
    if (slot == code_.size()) {
      finish(s);
      return;
    }
    std::string best_line;
    std::vector<std::pair<Variant, State>> ties;
    for (std::size_t c = 0; c < code_.size(); ++c) {
      if (s.used[c]) continue;
      for (const Variant& v : variants(c)) {
        State next = s;
        std::string line = emit(next, v, slot);
        if (ties.empty() || line < best_line) {
          ties.clear();
          best_line = line;
        } else if (line != best_line) {
          continue;
        }
        next.used[c] = true;
        next.reversed[c] = v.reversed;
        next.order.push_back(v);
        next.text += line;
        ties.emplace_back(v, std::move(next));
      }
    }
    for (auto& [v, next] : ties) search(next);
  }

  const LDiagram& d_;
  std::unordered_map<std::string, int> ids_;
  std::vector<CrossingLabel> labels_;
  std::vector<std::vector<std::pair<int, Visit>>> code_;
  State best_;
  std::string best_text_;
  bool have_best_ = false;
};

}  // namespace

LDiagram canonical_form(const LDiagram& d) {
  Canonicalizer c(d);
  c.run();
  return c.diagram();
}

std::string canonical_key(const LDiagram& d) {
  Canonicalizer c(d);
  c.run();
  return c.key();
}

std::string fresh_crossing_id(const LDiagram& d) {
  for (std::size_t n = 1;; ++n) {
    std::string id = std::to_string(n);
    if (!d.crossings.contains(id)) return id;
  }
}

LDiagram random_diagram(std::size_t crossings, const RandomDiagramOptions& opts,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LDiagram d;
  d.dimension = opts.dimension;
  const auto ncomp = opts.components.size();
  for (std::size_t c = 0; c < ncomp; ++c) {
    d.components.push_back({std::string(1, static_cast<char>('A' + c % 26)) +
                                (c >= 26 ? std::to_string(c / 26) : ""),
                            opts.components[c],
                            {}});
    if (opts.components[c] == ComponentKind::loop && d.dimension == 2) d.allow_torus = true;
  }
  if (ncomp == 0) return d;
  std::vector<Pass> passes;
  for (std::size_t x = 1; x <= crossings; ++x) {
    passes.push_back({std::to_string(x), Visit::first});
    passes.push_back({std::to_string(x), Visit::second});
  }
  std::shuffle(passes.begin(), passes.end(), rng);
  std::uniform_int_distribution<std::size_t> pick(0, ncomp - 1);
  for (auto& p : passes) d.components[pick(rng)].passes.push_back(std::move(p));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t x = 1; x <= crossings; ++x) {
    d.crossings.emplace(std::to_string(x),
                        CrossingLabel{coin(rng) ? Visit::first : Visit::second,
                                      coin(rng) ? Dir::up : Dir::down});
  }
  return d;
}

}  // namespace weldkit

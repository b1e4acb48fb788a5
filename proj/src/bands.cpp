#include "weldkit/bands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace weldkit {

namespace {

std::vector<BandPassage> reversed(const std::vector<BandPassage>& ps) {
  std::vector<BandPassage> out(ps.rbegin(), ps.rend());
  for (auto& p : out) p.dir = flip(p.dir);
  return out;
}

Band reoriented(const Band& band) {
  return {band.name, band.to, band.from, reversed(band.through)};
}

std::size_t band_index(const BandPresentation& b, const std::string& name) {
  for (std::size_t i = 0; i < b.bands.size(); ++i) {
    if (b.bands[i].name == name) return i;
  }
  throw BandError("no band named " + name);
}

std::string fresh_band_name(const BandPresentation& b) {
  std::set<std::string> used;
  for (const auto& band : b.bands) used.insert(band.name);
  for (int k = 1;; ++k) {
    std::string name = "b" + std::to_string(k);
    if (!used.contains(name)) return name;
  }
}

// Path order of the balls, or empty when the band graph is not a path.
std::vector<int> path_order(const BandPresentation& b) {
  if (b.balls < 1 || static_cast<int>(b.bands.size()) != b.balls - 1) return {};
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(b.balls));
  for (const auto& band : b.bands) {
    if (band.from == band.to) return {};
    adj[static_cast<std::size_t>(band.from)].push_back(band.to);
    adj[static_cast<std::size_t>(band.to)].push_back(band.from);
  }
  int start = -1;
  for (int i = 0; i < b.balls; ++i) {
    if (adj[static_cast<std::size_t>(i)].size() > 2) return {};
    if (start < 0 && adj[static_cast<std::size_t>(i)].size() <= 1) start = i;
  }
  if (start < 0) return {};
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int n : adj[static_cast<std::size_t>(cur)]) {
      if (n != prev) next = n;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  if (static_cast<int>(order.size()) != b.balls) return {};
  return order;
}

}  // namespace

std::vector<std::string> validate(const BandPresentation& b) {
  std::vector<std::string> out;
  if (b.dimension < 2) out.push_back("dimension must be at least 2");
  if (b.balls < 1) out.push_back("at least one ball is required");
  std::set<std::string> names;
  auto check_ball = [&](int ball, const std::string& where) {
    if (ball < 0 || ball >= b.balls) {
      out.push_back("dangling ball reference " + std::to_string(ball) + " in band " + where);
    }
  };
  for (const auto& band : b.bands) {
    if (!is_identifier(band.name)) out.push_back("invalid band name '" + band.name + "'");
    if (!names.insert(band.name).second) out.push_back("duplicate band name " + band.name);
    check_ball(band.from, band.name);
    check_ball(band.to, band.name);
    for (const auto& p : band.through) check_ball(p.ball, band.name);
  }
  return out;
}

bool is_arc_like(const BandPresentation& b) {
  if (b.balls < 1 || static_cast<int>(b.bands.size()) != b.balls - 1) return false;
  std::vector<int> seen(static_cast<std::size_t>(b.balls), 0);
  for (const auto& band : b.bands) {
    const int lo = std::min(band.from, band.to);
    if (std::abs(band.from - band.to) != 1 || lo < 0 || lo + 1 >= b.balls) return false;
    if (seen[static_cast<std::size_t>(lo)]++ > 0) return false;
  }
  return true;
}

bool is_path_like(const BandPresentation& b) { return !path_order(b).empty(); }

BandPresentation normalize_arc_like(const BandPresentation& b) {
  const auto order = path_order(b);
  if (order.empty()) throw BandError("band graph is not a path");
  std::vector<int> label(static_cast<std::size_t>(b.balls));
  for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  BandPresentation out = b;
  out.bands.clear();
  for (Band band : b.bands) {
    band.from = label[static_cast<std::size_t>(band.from)];
    band.to = label[static_cast<std::size_t>(band.to)];
    for (auto& p : band.through) p.ball = label[static_cast<std::size_t>(p.ball)];
    if (band.from > band.to) band = reoriented(band);
    out.bands.push_back(std::move(band));
  }
  std::sort(out.bands.begin(), out.bands.end(),
            [](const Band& x, const Band& y) { return x.from < y.from; });
  return out;
}

BandPresentation parse_bnd(std::string_view text) {
  BandPresentation b;
  bool have_header = false;
  bool have_balls = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto to_int = [&](const std::string& s, std::size_t col) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
      throw ParseError(line_no, col, "expected a number, got '" + s + "'");
    }
    return std::stoi(s);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const auto col = [&](std::size_t i) { return line.find(toks[i]) + 1; };
    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "bnd" || toks[1] != "v1" || toks[2].rfind("dim=", 0) != 0) {
        throw ParseError(line_no, col(0), "expected header 'bnd v1 dim=<n>'");
      }
      b.dimension = to_int(toks[2].substr(4), col(2) + 4);
      have_header = true;
    } else if (toks[0] == "balls:") {
      if (have_balls || toks.size() != 2) throw ParseError(line_no, col(0), "expected one 'balls: <k>' line");
      b.balls = to_int(toks[1], col(1));
      have_balls = true;
    } else if (toks[0] == "band") {
      if (toks.size() < 7 || toks[2] != "from" || toks[4] != "to" || toks[6] != "through:") {
        throw ParseError(line_no, col(0), "expected 'band <name> from <i> to <j> through: ...'");
      }
      Band band{toks[1], to_int(toks[3], col(3)), to_int(toks[5], col(5)), {}};
      for (std::size_t i = 7; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.size() < 2 || (t.back() != 'u' && t.back() != 'd')) {
          throw ParseError(line_no, col(i), "malformed passage '" + t + "'");
        }
        band.through.push_back({to_int(t.substr(0, t.size() - 1), col(i)), t.back() == 'u' ? Dir::up : Dir::down});
      }
      b.bands.push_back(std::move(band));
    } else {
      throw ParseError(line_no, col(0), "unknown declaration '" + toks[0] + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, 1, "missing header");
  if (!have_balls) throw ParseError(line_no, 1, "missing 'balls:' line");
  const auto problems = validate(b);
  if (!problems.empty()) throw BandError(problems.front());
  return b;
}

std::string serialize_bnd(const BandPresentation& b) {
  std::ostringstream os;
  os << "bnd v1 dim=" << b.dimension << '\n' << "balls: " << b.balls << '\n';
  for (const auto& band : b.bands) {
    os << "band " << band.name << " from " << band.from << " to " << band.to << " through:";
    for (const auto& p : band.through) os << ' ' << p.ball << (p.dir == Dir::up ? 'u' : 'd');
    os << '\n';
  }
  return os.str();
}

LDiagram to_ldiagram(const BandPresentation& input) {
  if (!is_path_like(input)) throw BandError("band presentation is not arc-like");
  const BandPresentation b = normalize_arc_like(input);
  // Crossing ids in band order, then passage order.
  std::vector<std::vector<std::string>> ids(b.bands.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> in_ball(static_cast<std::size_t>(b.balls));
  int next_id = 1;
  for (std::size_t i = 0; i < b.bands.size(); ++i) {
    for (std::size_t k = 0; k < b.bands[i].through.size(); ++k) {
      ids[i].push_back(std::to_string(next_id++));
      in_ball[static_cast<std::size_t>(b.bands[i].through[k].ball)].emplace_back(i, k);
    }
  }
  LDiagram d;
  d.dimension = b.dimension;
  Component comp{"A", ComponentKind::arc, {}};
  std::map<std::string, int> visits;
  auto add_pass = [&](const std::string& id) {
    const Visit v = visits[id]++ == 0 ? Visit::first : Visit::second;
    comp.passes.push_back({id, v});
    return v;
  };
  for (int ball = 0; ball < b.balls; ++ball) {
    for (const auto& [i, k] : in_ball[static_cast<std::size_t>(ball)]) add_pass(ids[i][k]);
    if (ball + 1 == b.balls) break;
    const auto& band = b.bands[static_cast<std::size_t>(ball)];
    for (std::size_t k = 0; k < band.through.size(); ++k) {
      const Visit v = add_pass(ids[static_cast<std::size_t>(ball)][k]);
      d.crossings[ids[static_cast<std::size_t>(ball)][k]] = {v, band.through[k].dir};
    }
  }
  d.components.push_back(std::move(comp));
  return d;
}

BandPresentation trivial_addition(const BandPresentation& b, int position) {
  if (position != 0 && position != b.balls) {
    throw BandError("trivial addition needs position 0 or " + std::to_string(b.balls));
  }
  BandPresentation out = b;
  const std::string name = fresh_band_name(b);
  out.balls += 1;
  if (position == 0) {
    for (auto& band : out.bands) {
      band.from += 1;
      band.to += 1;
      for (auto& p : band.through) p.ball += 1;
    }
    out.bands.insert(out.bands.begin(), Band{name, 0, 1, {}});
  } else {
    out.bands.push_back(Band{name, position - 1, position, {}});
  }
  return out;
}

BandPresentation trivial_deletion(const BandPresentation& b, int position) {
  if (b.balls < 2 || (position != 0 && position != b.balls - 1)) {
    throw BandError("trivial deletion needs an end ball");
  }
  std::vector<std::size_t> attached;
  for (std::size_t i = 0; i < b.bands.size(); ++i) {
    const auto& band = b.bands[i];
    if (band.from == position || band.to == position) attached.push_back(i);
    for (const auto& p : band.through) {
      if (p.ball == position) throw BandError("band " + band.name + " passes through the ball");
    }
  }
  if (attached.size() != 1 || !b.bands[attached[0]].through.empty()) {
    throw BandError("ball " + std::to_string(position) + " must carry exactly one empty band");
  }
  BandPresentation out = b;
  out.bands.erase(out.bands.begin() + static_cast<std::ptrdiff_t>(attached[0]));
  out.balls -= 1;
  if (position == 0) {
    for (auto& band : out.bands) {
      band.from -= 1;
      band.to -= 1;
      for (auto& p : band.through) p.ball -= 1;
    }
  }
  return out;
}

namespace {

// The guide's passages read from ball `s` to its other end `t`.
std::pair<int, std::vector<BandPassage>> across(const Band& guide, int s) {
  if (guide.from == s) return {guide.to, guide.through};
  if (guide.to == s) return {guide.from, reversed(guide.through)};
  throw BandError("band " + guide.name + " has no end at ball " + std::to_string(s));
}

}  // namespace

BandPresentation band_slide(const BandPresentation& b, const std::string& moving,
                            const std::string& guide, BandEnd end) {
  const std::size_t mi = band_index(b, moving);
  const std::size_t gi = band_index(b, guide);
  if (mi == gi) throw BandError("a band cannot slide over itself");
  BandPresentation out = b;
  Band& m = out.bands[mi];
  const int s = end == BandEnd::from ? m.from : m.to;
  const auto [t, profile] = across(b.bands[gi], s);
  if (end == BandEnd::from) {
    // The new start is t; the band first runs back along the guide.
    std::vector<BandPassage> through = reversed(profile);
    through.insert(through.end(), m.through.begin(), m.through.end());
    m.from = t;
    m.through = std::move(through);
  } else {
    m.through.insert(m.through.end(), profile.begin(), profile.end());
    m.to = t;
  }
  return out;
}

BandPresentation band_unslide(const BandPresentation& b, const std::string& moving,
                              const std::string& guide, BandEnd end) {
  const std::size_t mi = band_index(b, moving);
  const std::size_t gi = band_index(b, guide);
  if (mi == gi) throw BandError("a band cannot slide over itself");
  BandPresentation out = b;
  Band& m = out.bands[mi];
  const int t = end == BandEnd::from ? m.from : m.to;
  const auto [s, back] = across(b.bands[gi], t);  // passages from t to s
  const std::vector<BandPassage> forward = reversed(back);
  auto fail = [&] { return BandError("band " + moving + " does not carry the passages of " + guide); };
  if (end == BandEnd::from) {
    if (m.through.size() < back.size() || !std::equal(back.begin(), back.end(), m.through.begin())) throw fail();
    m.through.erase(m.through.begin(), m.through.begin() + static_cast<std::ptrdiff_t>(back.size()));
    m.from = s;
  } else {
    if (m.through.size() < forward.size() ||
        !std::equal(forward.begin(), forward.end(), m.through.end() - static_cast<std::ptrdiff_t>(forward.size()))) {
      throw fail();
    }
    m.through.resize(m.through.size() - forward.size());
    m.to = s;
  }
  return out;
}

BandPresentation band_pass(const BandPresentation& b, const std::string& moving,
                           const std::string& other, std::size_t position) {
  const std::size_t mi = band_index(b, moving);
  const int s = b.bands[band_index(b, other)].from;
  BandPresentation out = b;
  auto& through = out.bands[mi].through;
  if (position > through.size()) throw BandError("pass position out of range");
  through.insert(through.begin() + static_cast<std::ptrdiff_t>(position),
                 {BandPassage{s, Dir::up}, BandPassage{s, Dir::down}});
  return out;
}

BandPresentation band_unpass(const BandPresentation& b, const std::string& moving,
                             const std::string& other, std::size_t position) {
  const std::size_t mi = band_index(b, moving);
  const int s = b.bands[band_index(b, other)].from;
  BandPresentation out = b;
  auto& through = out.bands[mi].through;
  if (position + 2 > through.size() || through[position] != BandPassage{s, Dir::up} ||
      through[position + 1] != BandPassage{s, Dir::down}) {
    throw BandError("no pass of " + other + " at that position");
  }
  through.erase(through.begin() + static_cast<std::ptrdiff_t>(position),
                through.begin() + static_cast<std::ptrdiff_t>(position) + 2);
  return out;
}

}  // namespace weldkit

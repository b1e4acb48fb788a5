#include "weldkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "weldkit/bands.hpp"
#include "weldkit/braid.hpp"
#include "weldkit/diagram.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/moves.hpp"
#include "weldkit/render.hpp"
#include "weldkit/search.hpp"
#include "weldkit/tube.hpp"

namespace weldkit {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<FiniteGroup> load_groups(const std::string& names, const std::string& dir) {
  const std::filesystem::path base = dir.empty() ? default_group_dir() : std::filesystem::path(dir);
  std::vector<FiniteGroup> out;
  for (const auto& n : split_names(names)) out.push_back(load_named_group(base, n));
  return out;
}

struct SearchFlags {
  SearchBudget budget;
  unsigned jobs = 1;
  std::string trace;
  std::string groups = "S3,S4,Z5";
  std::string group_dir;

  void attach(CLI::App* app) {
    app->add_option("--max-crossings", budget.max_crossings, "crossing cap for insertions")->capture_default_str();
    app->add_option("--max-depth", budget.max_depth, "total path length bound")->capture_default_str();
    app->add_option("--max-states", budget.max_states, "visited-state bound")->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app->add_option("--trace", trace, "write the path as .mvt to this file");
    app->add_option("--groups", groups, "gate groups, comma separated")->capture_default_str();
    app->add_option("--group-dir", group_dir, "directory of .grp files");
  }

  SearchOptions options() const {
    SearchOptions o;
    o.gate_groups = load_groups(groups, group_dir);
    o.jobs = jobs;
    return o;
  }

  int report(const SearchResult& r, std::ostream& out) const {
    std::istringstream stats(format_result(r));
    for (std::string line; std::getline(stats, line);) out << "# " << line << '\n';
    if (r.path) {
      const std::string mvt = serialize_mvt(*r.path);
      out << mvt;
      if (!trace.empty()) write_file(trace, mvt);
    }
    return r.verdict == Verdict::path_found ? 0 : 1;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"weldkit: L diagrams, welded arcs, band presentations and welded braids"};
  app.require_subcommand(1);
  int status = 0;

  std::string file;
  std::string file2;

  auto* validate_cmd = app.add_subcommand("validate", "check a .ldg file");
  validate_cmd->add_option("file", file, ".ldg file")->required();
  validate_cmd->callback([&] {
    const LDiagram d = parse_ldg_unchecked(read_file(file));
    const auto problems = validate(d);
    for (const auto& p : problems) out << p << '\n';
    if (problems.empty()) out << "ok\n";
    status = problems.empty() ? 0 : 1;
  });

  auto* canon_cmd = app.add_subcommand("canon", "print the canonical form");
  canon_cmd->add_option("file", file, ".ldg file")->required();
  canon_cmd->callback([&] { out << canonical_key(parse_ldg(read_file(file))); });

  std::string groups = "S3,S4,Z5";
  std::string group_dir;
  bool no_profile = false;
  bool no_alexander = false;
  auto* inv_cmd = app.add_subcommand("invariants", "invariant report");
  inv_cmd->add_option("file", file, ".ldg file")->required();
  inv_cmd->add_option("--groups", groups, "groups, comma separated")->capture_default_str();
  inv_cmd->add_option("--group-dir", group_dir, "directory of .grp files");
  inv_cmd->add_flag("--no-profile", no_profile, "skip peripheral profiles");
  inv_cmd->add_flag("--no-alexander", no_alexander, "skip the Alexander polynomial");
  inv_cmd->callback([&] {
    const LDiagram d = parse_ldg(read_file(file));
    InvariantOptions opts;
    opts.groups = load_groups(groups, group_dir);
    opts.profiles = !no_profile;
    opts.alexander = !no_alexander;
    out << invariant_report(d, opts);
  });

  std::size_t moves = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;
  std::string trace;
  auto* scr_cmd = app.add_subcommand("scramble", "apply random moves");
  scr_cmd->add_option("file", file, ".ldg file")->required();
  scr_cmd->add_option("--moves", moves, "number of moves")->required();
  scr_cmd->add_option("--seed", seed, "random seed")->required();
  scr_cmd->add_option("--max-crossings", cap, "crossing cap");
  scr_cmd->add_option("--trace", trace, "write the moves as .mvt to this file");
  scr_cmd->callback([&] {
    const auto r = scramble(parse_ldg(read_file(file)), moves, seed, cap);
    out << serialize_ldg(r.diagram);
    if (!trace.empty()) write_file(trace, serialize_mvt(r.trace));
  });

  SearchFlags sflags;
  auto* search_cmd = app.add_subcommand("search", "look for a move path between two diagrams");
  search_cmd->add_option("a", file, "source .ldg")->required();
  search_cmd->add_option("b", file2, "target .ldg")->required();
  sflags.attach(search_cmd);
  search_cmd->callback([&] {
    const LDiagram a = parse_ldg(read_file(file));
    const LDiagram b = parse_ldg(read_file(file2));
    status = sflags.report(search_equiv(a, b, sflags.budget, sflags.options()), out);
  });

  auto* trivial_cmd = app.add_subcommand("trivial", "look for a path to the crossing-free diagram");
  trivial_cmd->add_option("file", file, ".ldg file")->required();
  sflags.attach(trivial_cmd);
  trivial_cmd->callback([&] {
    status = sflags.report(is_trivial(parse_ldg(read_file(file)), sflags.budget, sflags.options()), out);
  });

  int dim = 2;
  auto* tube_cmd = app.add_subcommand("tube", "tube of a welded arc");
  tube_cmd->add_option("file", file, ".wga file")->required();
  tube_cmd->add_option("--dim", dim, "dimension tag")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  tube_cmd->callback([&] { out << serialize_ldg(tube(parse_wga(read_file(file)), dim)); });

  std::string variant = "negate-sign";
  auto* trv_cmd = app.add_subcommand("trv", "total reverse virtualization of a welded arc");
  trv_cmd->add_option("file", file, ".wga file")->required();
  trv_cmd->add_option("--variant", variant, "negate-sign | swap-negate | swap-keep")
      ->capture_default_str()
      ->check(CLI::IsMember({"negate-sign", "swap-negate", "swap-keep"}));
  trv_cmd->callback([&] {
    const SMoveVariant v = variant == "swap-negate" ? SMoveVariant::swap_negate
                           : variant == "swap-keep" ? SMoveVariant::swap_keep
                                                    : SMoveVariant::negate_sign;
    out << serialize_wga(total_reverse_virtualization(parse_wga(read_file(file)), v));
  });

  int to_dim = 3;
  auto* dim_cmd = app.add_subcommand("dim", "reinterpret the dimension tag");
  dim_cmd->add_option("file", file, ".ldg file")->required();
  dim_cmd->add_option("--to", to_dim, "target dimension")->required();
  dim_cmd->callback([&] { out << serialize_ldg(reinterpret_dimension(parse_ldg(read_file(file)), to_dim)); });

  auto* band_cmd = app.add_subcommand("band2ldg", "L diagram of an arc-like band presentation");
  band_cmd->add_option("file", file, ".bnd file")->required();
  band_cmd->callback([&] { out << serialize_ldg(to_ldiagram(parse_bnd(read_file(file)))); });

  int strands = 0;
  std::vector<std::string> eq;
  std::string order_word;
  std::string auto_word;
  std::string invert_word;
  int kmax = 8;
  auto* braid_cmd = app.add_subcommand("braid", "welded braid word problem");
  braid_cmd->add_option("--strands", strands, "strand count")->required()->check(CLI::PositiveNumber);
  auto* eq_opt = braid_cmd->add_option("--eq", eq, "two words to compare")->expected(2);
  auto* order_opt = braid_cmd->add_option("--order", order_word, "word whose order to probe");
  braid_cmd->add_option("--kmax", kmax, "order probe bound")->capture_default_str()->check(CLI::PositiveNumber);
  auto* auto_opt = braid_cmd->add_option("--auto", auto_word, "print the automorphism of a word");
  auto* inv_opt = braid_cmd->add_option("--invert", invert_word, "print the inverse word");
  braid_cmd->callback([&] {
    const int chosen = (eq_opt->count() > 0) + (order_opt->count() > 0) + (auto_opt->count() > 0) +
                       (inv_opt->count() > 0);
    if (chosen != 1) throw UsageError("braid needs exactly one of --eq, --order, --auto, --invert");
    if (eq_opt->count() > 0) {
      const bool same = are_equal(parse_braid(eq[0], strands), parse_braid(eq[1], strands));
      out << (same ? "equal" : "not-equal") << '\n';
      status = same ? 0 : 1;
    } else if (order_opt->count() > 0) {
      const auto k = order_probe(parse_braid(order_word, strands), kmax);
      if (k) {
        out << "order = " << *k << '\n';
      } else {
        out << "order exceeds " << kmax << '\n';
        status = 1;
      }
    } else if (auto_opt->count() > 0) {
      out << format_automorphism(to_automorphism(parse_braid(auto_word, strands)));
    } else {
      out << format_braid(invert(parse_braid(invert_word, strands))) << '\n';
    }
  });

  auto* render_cmd = app.add_subcommand("render", "core graph as DOT");
  render_cmd->add_option("file", file, ".ldg file")->required();
  render_cmd->callback([&] { out << render_dot(parse_ldg(read_file(file))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const ResourceLimitExceeded& e) {
    err << "weldkit: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "weldkit: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace weldkit

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "weldkit/invariants.hpp"

#ifndef WELDKIT_DATA_DIR
#define WELDKIT_DATA_DIR "data"
#endif

namespace weldkit {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw GroupSpecError(name_ + ": empty group");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw GroupSpecError(name_ + ": table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw GroupSpecError(name_ + ": entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw GroupSpecError(name_ + ": no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw GroupSpecError(name_ + ": not associative");
        }
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw GroupSpecError(name_ + ": missing inverse");
  }
  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[static_cast<std::size_t>(a)] >= 0) continue;
    const int cls = static_cast<int>(classes_.size());
    classes_.emplace_back();
    for (int g = 0; g < n; ++g) {
      const int c = mul(mul(g, a), inv(g));
      if (class_of_[static_cast<std::size_t>(c)] < 0) {
        class_of_[static_cast<std::size_t>(c)] = cls;
        classes_.back().push_back(c);
      }
    }
    std::sort(classes_.back().begin(), classes_.back().end());
  }
}

std::string FiniteGroup::class_label(int cls) const {
  if (class_of(identity_) == cls) return "e";
  return "c" + std::to_string(cls);
}

FiniteGroup parse_grp(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::string> tokens;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 4 || tokens[0] != "group" || tokens[2] != "order") {
    throw GroupSpecError("expected 'group <name> order <k>'");
  }
  std::size_t k = 0;
  try {
    k = std::stoul(tokens[3]);
  } catch (const std::exception&) {
    throw GroupSpecError("bad order '" + tokens[3] + "'");
  }
  if (tokens.size() != 4 + k * k) {
    throw GroupSpecError(tokens[1] + ": expected " + std::to_string(k * k) + " table entries");
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k * k; ++i) {
    try {
      table[i / k][i % k] = std::stoi(tokens[4 + i]);
    } catch (const std::exception&) {
      throw GroupSpecError(tokens[1] + ": bad entry '" + tokens[4 + i] + "'");
    }
  }
  return FiniteGroup(tokens[1], std::move(table));
}

std::string serialize_grp(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << g.name() << " order " << g.order() << '\n';
  for (const auto& row : g.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

FiniteGroup load_group(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw GroupSpecError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grp(ss.str());
}

FiniteGroup load_named_group(const std::filesystem::path& dir, const std::string& name) {
  return load_group(dir / (name + ".grp"));
}

std::filesystem::path default_group_dir() {
  if (const char* env = std::getenv("WELDKIT_GROUP_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::path(WELDKIT_DATA_DIR) / "groups";
}

}  // namespace weldkit

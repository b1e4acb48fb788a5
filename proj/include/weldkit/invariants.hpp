#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/word.hpp"

namespace weldkit {

// ---------------------------------------------------------------------------
// Finite groups given by multiplication tables

class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Conjugacy classes, numbered by their least element; the identity's
  // class is labelled "e", the others "c<k>".
  int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& class_members(int cls) const { return classes_[static_cast<std::size_t>(cls)]; }
  std::string class_label(int cls) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

class GroupSpecError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// .grp format: `group <name> order <k>` then k rows of element indices.
FiniteGroup parse_grp(std::string_view text);
std::string serialize_grp(const FiniteGroup& g);
FiniteGroup load_group(const std::filesystem::path& file);
// Loads <dir>/<name>.grp.
FiniteGroup load_named_group(const std::filesystem::path& dir, const std::string& name);
// $WELDKIT_GROUP_DIR if set, otherwise the data directory of the build.
std::filesystem::path default_group_dir();

// ---------------------------------------------------------------------------
// Group presentations

struct Peripheral {
  std::string component;
  Word meridian;
  Word longitude;
  bool operator==(const Peripheral&) const = default;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // One meridian/longitude pair per diagram component.
  std::vector<Peripheral> peripherals;

  const Word& meridian() const { return peripherals.at(0).meridian; }
  const Word& longitude() const { return peripherals.at(0).longitude; }
  std::string to_string() const;
  bool operator==(const GroupPresentation&) const = default;
};

// Upper Wirtinger presentation. Generators are the segments of each
// component between consecutive through passes; each crossing with
// containing segment c, through in-segment g and out-segment g' contributes
// g' = c g c^-1 (dir u) or g' = c^-1 g c (dir d). The meridian is the
// segment at the start of the component. The longitude is
// c_k^e_k ... c_1^e_1 * meridian^-(e_1 + ... + e_k) over the through passes
// in traversal order, which maps the start meridian to the end meridian.
GroupPresentation wirtinger_presentation(const LDiagram& d);

// Deterministic Tietze pass: cyclic reduction, removal of trivial and
// duplicate relators, and elimination of generators that occur exactly once
// in some relator (shortest relators first, highest generator first).
GroupPresentation simplify(const GroupPresentation& p);

// ---------------------------------------------------------------------------
// Homomorphisms to finite groups

struct HomCountLimits {
  std::size_t max_generators_times_order = 4096;
  std::uint64_t max_nodes = 500'000'000;
};

class ResourceLimitExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact number of homomorphisms from the presented group to `g`.
std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g,
                        const HomCountLimits& limits = {});

// For each homomorphism, the sorted list of (class of meridian image, class
// of longitude image) over components; the multiset of those lists.
using PeripheralProfile = std::map<std::vector<std::pair<int, int>>, std::uint64_t>;
PeripheralProfile peripheral_hom_profile(const GroupPresentation& p, const FiniteGroup& g,
                                         const HomCountLimits& limits = {});
std::string format_profile(const PeripheralProfile& profile, const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Alexander polynomial

class UnsupportedPresentation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer coefficients, lowest degree first.
struct AlexanderPolynomial {
  std::vector<long long> coefficients;
  std::string to_string() const;
  bool operator==(const AlexanderPolynomial&) const = default;
};

// Generator of the first elementary ideal of the Fox-calculus Alexander
// matrix, every generator mapped to t. Normalized to lowest degree 0 and a
// positive leading coefficient. Single-component presentations only.
AlexanderPolynomial alexander_polynomial(const GroupPresentation& p);

// ---------------------------------------------------------------------------
// Report

struct InvariantOptions {
  std::vector<FiniteGroup> groups;
  bool profiles = true;
  bool alexander = true;
  HomCountLimits limits;
};

// Deterministic key=value lines; groups are reported sorted by name.
std::string invariant_report(const LDiagram& d, const InvariantOptions& opts);

}  // namespace weldkit

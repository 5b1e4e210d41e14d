#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linmatch/error.hpp"

namespace linmatch {

/// Direct product of cyclic groups Z_m1 x ... x Z_mk.
struct GroupSpec {
  std::vector<std::int64_t> moduli;

  explicit GroupSpec(std::vector<std::int64_t> mods);

  /// Parses "Z4", "Z4xZ6", "4x6".
  static GroupSpec parse(const std::string& text);

  std::uint64_t order() const;
  std::size_t rank() const { return moduli.size(); }
  std::string describe() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.moduli == b.moduli; }
};

using GroupElem = std::vector<std::int64_t>;

GroupElem group_add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b);

/// Nonempty finite subset of the group, canonicalized on construction:
/// coordinates reduced into [0, m), elements strictly sorted. Duplicates
/// after reduction are rejected.
class GroupSubset {
 public:
  GroupSubset(GroupSpec spec, std::vector<GroupElem> elements);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupElem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const GroupElem& e) const;

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.spec_ == b.spec_ && a.elems_ == b.elems_;
  }

 private:
  GroupSpec spec_;
  std::vector<GroupElem> elems_;
};

/// An explicit bijection A -> B as a pair list; verifiable independently of
/// how it was found.
struct GroupMatching {
  std::vector<std::pair<GroupElem, GroupElem>> pairs;
};

/// True iff phi is a bijection A -> B with a + phi(a) not in A for every a.
bool is_matching(const GroupSubset& a, const GroupSubset& b, const GroupMatching& phi);

/// Deterministic matching search: bipartite compatibility graph (a adjacent
/// to b iff a + b not in A) with Kuhn's augmenting paths, vertices in sorted
/// order and lowest-index edges first. Returns a matching iff it is perfect.
std::optional<GroupMatching> find_matching(const GroupSubset& a, const GroupSubset& b);

/// Oracle: enumerate all |A|! bijections; |A| <= 9.
bool exhaustive_matching_exists(const GroupSubset& a, const GroupSubset& b);

}  // namespace linmatch

#include "linmatch/group_matching.hpp"

#include <algorithm>
#include <numeric>

namespace linmatch {

namespace {

constexpr std::uint64_t kMaxGroupOrder = 1'000'000'000;  // desk-scale guard
constexpr std::size_t kMaxExhaustive = 9;                // 9! permutations

void check_compatible(const GroupSubset& a, const GroupSubset& b) {
  require(a.spec() == b.spec(), errc::spec_mismatch, "subsets live in different groups");
  require(a.size() == b.size(), errc::size_mismatch, "subsets have different sizes");
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> mods) : moduli(std::move(mods)) {
  require(!moduli.empty(), errc::invalid_argument, "group needs at least one modulus");
  std::uint64_t ord = 1;
  for (std::int64_t m : moduli) {
    require(m >= 2, errc::invalid_argument, "every modulus must be >= 2");
    ord *= static_cast<std::uint64_t>(m);
    require(ord <= kMaxGroupOrder, errc::too_large, "group order exceeds 10^9");
  }
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::vector<std::int64_t> mods;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find_first_of("xX*", start);
    std::string tok = text.substr(start, sep == std::string::npos ? text.size() - start : sep - start);
    if (!tok.empty() && (tok[0] == 'Z' || tok[0] == 'z')) tok.erase(0, 1);
    try {
      mods.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "cannot parse group '" + text + "'");
    }
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return GroupSpec(std::move(mods));
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t ord = 1;
  for (std::int64_t m : moduli) ord *= static_cast<std::uint64_t>(m);
  return ord;
}

std::string GroupSpec::describe() const {
  std::string out;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(moduli[i]);
  }
  return out;
}

GroupElem group_add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b) {
  GroupElem out(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i) out[i] = (a[i] + b[i]) % spec.moduli[i];
  return out;
}

GroupSubset::GroupSubset(GroupSpec spec, std::vector<GroupElem> elements) : spec_(std::move(spec)) {
  require(!elements.empty(), errc::invalid_argument, "subset must be nonempty");
  for (GroupElem& e : elements) {
    require(e.size() == spec_.rank(), errc::invalid_argument,
            "element arity does not match the group rank");
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::int64_t m = spec_.moduli[i];
      e[i] %= m;
      if (e[i] < 0) e[i] += m;
    }
  }
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  require(dup == elements.end(), errc::invalid_argument, "duplicate element in subset");
  elems_ = std::move(elements);
}

bool GroupSubset::contains(const GroupElem& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool is_matching(const GroupSubset& a, const GroupSubset& b, const GroupMatching& phi) {
  check_compatible(a, b);
  if (phi.pairs.size() != a.size()) return false;

  std::vector<GroupElem> firsts, seconds;
  firsts.reserve(phi.pairs.size());
  seconds.reserve(phi.pairs.size());
  for (const auto& [x, y] : phi.pairs) {
    firsts.push_back(x);
    seconds.push_back(y);
  }
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end());
  if (firsts != a.elements() || seconds != b.elements()) return false;

  for (const auto& [x, y] : phi.pairs) {
    if (a.contains(group_add(a.spec(), x, y))) return false;
  }
  return true;
}

namespace {

struct Kuhn {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<int>& match_right;
  std::vector<bool> visited;

  bool augment(std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<GroupMatching> find_matching(const GroupSubset& a, const GroupSubset& b) {
  check_compatible(a, b);
  const std::size_t n = a.size();

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.contains(group_add(a.spec(), a.elements()[i], b.elements()[j]))) adj[i].push_back(j);
    }
  }

  std::vector<int> match_right(n, -1);
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u) {
    Kuhn k{adj, match_right, std::vector<bool>(n, false)};
    if (k.augment(u)) ++matched;
  }
  if (matched != n) return std::nullopt;

  std::vector<int> match_left(n, -1);
  for (std::size_t v = 0; v < n; ++v)
    if (match_right[v] >= 0) match_left[static_cast<std::size_t>(match_right[v])] = static_cast<int>(v);

  GroupMatching phi;
  for (std::size_t i = 0; i < n; ++i)
    phi.pairs.emplace_back(a.elements()[i], b.elements()[static_cast<std::size_t>(match_left[i])]);
  return phi;
}

bool exhaustive_matching_exists(const GroupSubset& a, const GroupSubset& b) {
  check_compatible(a, b);
  require(a.size() <= kMaxExhaustive, errc::too_large,
          "exhaustive oracle is capped at " + std::to_string(kMaxExhaustive) + " elements");
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (a.contains(group_add(a.spec(), a.elements()[i], b.elements()[perm[i]]))) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace linmatch

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "linmatch/group_matching.hpp"
#include "linmatch/rng.hpp"

using namespace linmatch;

namespace {

GroupSubset zn_set(std::int64_t n, const std::vector<std::int64_t>& vals) {
  std::vector<GroupElem> elems;
  for (std::int64_t v : vals) elems.push_back({v});
  return GroupSubset(GroupSpec({n}), std::move(elems));
}

GroupMatching pairs(const std::vector<std::pair<std::int64_t, std::int64_t>>& p) {
  GroupMatching phi;
  for (auto [a, b] : p) phi.pairs.emplace_back(GroupElem{a}, GroupElem{b});
  return phi;
}

/// All nonempty k-subsets of {0..n-1}, as sorted value lists.
std::vector<std::vector<std::int64_t>> subsets_of_size(std::int64_t n, std::size_t k) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("group spec parsing and validation") {
  CHECK(GroupSpec::parse("Z4").moduli == std::vector<std::int64_t>{4});
  CHECK(GroupSpec::parse("Z4xZ6").moduli == std::vector<std::int64_t>{4, 6});
  CHECK(GroupSpec::parse("4x6").order() == 24);
  CHECK_THROWS_AS(GroupSpec({1}), Error);
  CHECK_THROWS_AS(GroupSpec({}), Error);
  CHECK_THROWS_AS(GroupSpec({100000, 100000}), Error);  // order 10^10 > 10^9
}

TEST_CASE("subset canonicalization") {
  GroupSubset s(GroupSpec({5}), {{7}, {-1}, {0}});
  CHECK(s.elements() == std::vector<GroupElem>{{0}, {2}, {4}});
  CHECK(s.contains({2}));
  CHECK_FALSE(s.contains({1}));
  CHECK_THROWS_AS(GroupSubset(GroupSpec({5}), {{1}, {6}}), Error);  // duplicate after reduction
  CHECK_THROWS_AS(GroupSubset(GroupSpec({5}), {}), Error);
  CHECK_THROWS_AS(GroupSubset(GroupSpec({5}), {{1, 2}}), Error);  // arity mismatch
}

TEST_CASE("is_matching: named cases") {
  CHECK(is_matching(zn_set(5, {1}), zn_set(5, {2}), pairs({{1, 2}})));  // 1+2=3 not in A
  CHECK_FALSE(is_matching(zn_set(4, {0, 2}), zn_set(4, {1, 2}),
                          pairs({{0, 1}, {2, 2}})));  // 2+2=0 in A
  CHECK(is_matching(zn_set(5, {0, 1}), zn_set(5, {2, 3}), pairs({{0, 2}, {1, 3}})));
  // not a bijection onto B
  CHECK_FALSE(is_matching(zn_set(5, {0, 1}), zn_set(5, {2, 3}), pairs({{0, 2}, {1, 2}})));
  CHECK_THROWS_AS(is_matching(zn_set(4, {1}), zn_set(5, {2}), pairs({{1, 2}})), Error);
  CHECK_THROWS_AS(is_matching(zn_set(5, {1, 2}), zn_set(5, {2}), pairs({{1, 2}})), Error);
}

TEST_CASE("find_matching: named cases") {
  CHECK_FALSE(find_matching(zn_set(4, {0, 2}), zn_set(4, {1, 2})).has_value());
  CHECK_FALSE(find_matching(zn_set(4, {0, 2}), zn_set(4, {2, 3})).has_value());

  auto phi = find_matching(zn_set(7, {0, 1, 3}), zn_set(7, {1, 2, 4}));
  REQUIRE(phi.has_value());
  CHECK(is_matching(zn_set(7, {0, 1, 3}), zn_set(7, {1, 2, 4}), *phi));
  CHECK(exhaustive_matching_exists(zn_set(7, {0, 1, 3}), zn_set(7, {1, 2, 4})));

  auto single = find_matching(zn_set(5, {1}), zn_set(5, {2}));
  REQUIRE(single.has_value());
  CHECK(single->pairs == pairs({{1, 2}}).pairs);
}

TEST_CASE("find_matching is deterministic") {
  auto a = zn_set(7, {0, 1, 3});
  auto b = zn_set(7, {1, 2, 4});
  auto p1 = find_matching(a, b);
  auto p2 = find_matching(a, b);
  REQUIRE(p1.has_value());
  CHECK(p1->pairs == p2->pairs);
}

TEST_CASE("exhaustive oracle: named cases and cap") {
  CHECK_FALSE(exhaustive_matching_exists(zn_set(4, {0, 2}), zn_set(4, {1, 2})));
  CHECK(exhaustive_matching_exists(zn_set(5, {0, 1}), zn_set(5, {2, 3})));
  // singleton A=B={a} with a+a not in A
  CHECK(exhaustive_matching_exists(zn_set(5, {2}), zn_set(5, {2})));  // 2+2=4 not in {2}
  GroupSpec big({11});
  std::vector<GroupElem> ten;
  for (std::int64_t v = 0; v < 10; ++v) ten.push_back({v});
  GroupSubset a(big, ten), b(big, ten);
  CHECK_THROWS_AS(exhaustive_matching_exists(a, b), Error);
}

TEST_CASE("search result always passes verification (random)") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t n = 3 + static_cast<std::int64_t>(rng.below(7));  // Z_3..Z_9
    std::size_t k = 1 + rng.below(7);                              // up to |A| = 7
    if (static_cast<std::int64_t>(k) > n) continue;
    // sample two k-subsets
    auto sample = [&](std::size_t count) {
      std::vector<std::int64_t> vals;
      while (vals.size() < count) {
        std::int64_t v = static_cast<std::int64_t>(rng.below(n));
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
      }
      return vals;
    };
    GroupSubset a = zn_set(n, sample(k));
    GroupSubset b = zn_set(n, sample(k));
    auto phi = find_matching(a, b);
    if (phi) CHECK(is_matching(a, b, *phi));
    // oracle equivalence within |A| <= 7
    CHECK(phi.has_value() == exhaustive_matching_exists(a, b));
  }
}

TEST_CASE("for prime moduli all 0-free targets are matchable") {
  // Brute-force sweep, no theorem assumed: for p in {3,5,7}, every pair of
  // equal-size subsets with 0 not in B admits a matching.
  for (std::int64_t p : {3, 5, 7}) {
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p); ++k) {
      auto as = subsets_of_size(p, k);
      // B never contains 0: choose from {1..p-1}
      std::vector<std::vector<std::int64_t>> bs;
      for (auto& b : subsets_of_size(p - 1, k)) {
        std::vector<std::int64_t> shifted;
        for (std::int64_t v : b) shifted.push_back(v + 1);
        bs.push_back(shifted);
      }
      for (const auto& a_vals : as) {
        for (const auto& b_vals : bs) {
          GroupSubset a = zn_set(p, a_vals);
          GroupSubset b = zn_set(p, b_vals);
          auto phi = find_matching(a, b);
          REQUIRE(phi.has_value());
          CHECK(is_matching(a, b, *phi));
        }
      }
    }
  }
}

TEST_CASE("0 in B makes matchings impossible") {
  // phi must send some a to 0 and a+0 stays in A.
  CHECK_FALSE(find_matching(zn_set(5, {1, 2}), zn_set(5, {0, 3})).has_value());
  CHECK_FALSE(exhaustive_matching_exists(zn_set(5, {1, 2}), zn_set(5, {0, 3})));
}

TEST_CASE("product group matching") {
  GroupSpec z2z2({2, 2});
  GroupSubset a(z2z2, {{0, 1}, {1, 0}});
  GroupSubset b(z2z2, {{0, 1}, {1, 1}});
  auto phi = find_matching(a, b);
  if (phi) CHECK(is_matching(a, b, *phi));
  CHECK(phi.has_value() == exhaustive_matching_exists(a, b));
}

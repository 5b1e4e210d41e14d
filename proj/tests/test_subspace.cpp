#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linmatch/subspace.hpp"

using namespace linmatch;

namespace {

PrimeExtensionPtr gf(std::uint64_t p, std::size_t n) {
  PrimeField f(p);
  return Extension<PrimeField>::make(f, find_irreducible(f, n));
}

/// Gaussian binomial [n choose d]_q, the number of d-dimensional subspaces.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t d) {
  // prod_{i<d} (q^n - q^i) / (q^d - q^i)
  __int128 num = 1, den = 1;
  auto qpow = [&](std::size_t e) {
    __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (std::size_t i = 0; i < d; ++i) {
    num *= qpow(n) - qpow(i);
    den *= qpow(d) - qpow(i);
  }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t ordered_basis_count(std::uint64_t q, std::size_t d) {
  std::uint64_t total = 1, qpow = 1, size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= q;
  for (std::size_t i = 0; i < d; ++i) {
    total *= size - qpow;
    qpow *= q;
  }
  return total;
}

}  // namespace

TEST_CASE("subspace counts match Gaussian binomials") {
  auto f16 = gf(2, 4);
  CHECK(all_subspaces(f16, 1).size() == gaussian_binomial(2, 4, 1));  // 15
  CHECK(all_subspaces(f16, 2).size() == gaussian_binomial(2, 4, 2));  // 35
  CHECK(all_subspaces(f16, 3).size() == gaussian_binomial(2, 4, 3));  // 15
  CHECK(all_subspaces(f16, 4).size() == 1);

  auto f27 = gf(3, 3);
  CHECK(all_subspaces(f27, 1).size() == gaussian_binomial(3, 3, 1));  // 13
  CHECK(all_subspaces(f27, 2).size() == gaussian_binomial(3, 3, 2));  // 13

  // tower: GF(4)-lines in GF(4)^2
  ExtensionField<PrimeField> f4{gf(2, 2)};
  auto tower = Extension<ExtensionField<PrimeField>>::make(f4, find_irreducible(f4, 2));
  CHECK(all_subspaces(tower, 1).size() == 5);
}

TEST_CASE("enumerated subspaces are distinct and canonical") {
  auto f8 = gf(2, 3);
  auto spaces = all_subspaces(f8, 2);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    CHECK(spaces[i].dim() == 2);
    CHECK(mat_eq(spaces[i].rows(), rref(Mat<Fp>(spaces[i].rows()))));
    for (std::size_t j = i + 1; j < spaces.size(); ++j) CHECK_FALSE(spaces[i] == spaces[j]);
  }
}

TEST_CASE("membership, containment, and the one test") {
  auto f16 = gf(2, 4);
  auto alpha = f16->generator();
  Subspace<PrimeField> s = Subspace<PrimeField>::span(f16, {alpha, alpha * alpha});
  CHECK(s.dim() == 2);
  CHECK(s.contains(alpha));
  CHECK(s.contains(alpha + alpha * alpha));
  CHECK_FALSE(s.contains(f16->one()));
  CHECK_FALSE(s.contains_one());
  Subspace<PrimeField> line = Subspace<PrimeField>::span(f16, {alpha});
  CHECK(s.contains(line));
  CHECK_FALSE(line.contains(s));
  Subspace<PrimeField> with_one = Subspace<PrimeField>::span(f16, {f16->one()});
  CHECK(with_one.contains_one());
}

TEST_CASE("subspace elements enumerate the whole span exactly once") {
  auto f8 = gf(2, 3);
  for (const auto& s : all_subspaces(f8, 2)) {
    auto elems = s.elements();
    CHECK(elems.size() == 4);
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) CHECK(elems[i] < elems[i + 1]);
    for (const auto& e : elems) CHECK(s.contains(e));
    CHECK(Subspace<PrimeField>::span(f8, elems) == s);
  }
}

TEST_CASE("ordered basis validation") {
  auto f8 = gf(2, 3);
  auto alpha = f8->generator();
  Subspace<PrimeField> s = Subspace<PrimeField>::span(f8, {alpha, alpha * alpha});
  CHECK_NOTHROW(OrderedBasis<PrimeField>(s, {alpha, alpha * alpha}));
  CHECK_NOTHROW(OrderedBasis<PrimeField>(s, {alpha + alpha * alpha, alpha}));
  // dependent vectors
  CHECK_THROWS_AS(OrderedBasis<PrimeField>(s, {alpha, alpha}), Error);
  // spans a different subspace
  CHECK_THROWS_AS(OrderedBasis<PrimeField>(s, {alpha, f8->one()}), Error);
  // wrong cardinality
  CHECK_THROWS_AS(OrderedBasis<PrimeField>(s, {alpha}), Error);
}

TEST_CASE("basis tuple enumeration counts") {
  auto f8 = gf(2, 3);
  auto spaces2 = all_subspaces(f8, 2);
  for (const auto& s : spaces2) {
    auto full = basis_tuples(s, false);
    CHECK(full.size() == ordered_basis_count(2, 2));  // 6
    auto classes = basis_tuples(s, true);
    CHECK(classes.size() == ordered_basis_count(2, 2) / 2);  // /(1^2 * 2!) = 3
    for (const auto& tuple : full) CHECK_NOTHROW(OrderedBasis<PrimeField>(s, tuple));
  }
  auto whole = all_subspaces(f8, 3).at(0);
  CHECK(basis_tuples(whole, false).size() == ordered_basis_count(2, 3));       // 168
  CHECK(basis_tuples(whole, true).size() == ordered_basis_count(2, 3) / 6);    // 28

  // over GF(3): scaling matters, orbit size (q-1)^d d! = 4*2 = 8
  auto f9 = gf(3, 2);
  auto plane = all_subspaces(f9, 2).at(0);
  CHECK(basis_tuples(plane, false).size() == ordered_basis_count(3, 2));       // 48
  CHECK(basis_tuples(plane, true).size() == ordered_basis_count(3, 2) / 8);    // 6
}

TEST_CASE("random subspaces and bases are reproducible") {
  auto f16 = gf(2, 4);
  Rng r1(123), r2(123);
  auto s1 = random_subspace(f16, 2, r1);
  auto s2 = random_subspace(f16, 2, r2);
  CHECK(s1 == s2);
  auto b1 = random_basis(s1, r1);
  auto b2 = random_basis(s2, r2);
  CHECK(b1.vectors == b2.vectors);

  RationalField q;
  auto rc = Extension<RationalField>::make(q, parse_poly(q, "-2,0,0,1"));
  Rng r3(55);
  auto rs = random_subspace(rc, 2, r3);
  CHECK(rs.dim() == 2);
  auto rb = random_basis(rs, r3);
  CHECK(rb.vectors.size() == 2);
}

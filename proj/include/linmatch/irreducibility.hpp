#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/fp.hpp"
#include "linmatch/numtheory.hpp"
#include "linmatch/polynomial.hpp"
#include "linmatch/rational.hpp"

namespace linmatch {

namespace detail {

/// g -> g^q mod f, where q is the base field size.
template <FieldScalar K>
Poly<K> frobenius_step(const Poly<K>& g, std::uint64_t q, const Poly<K>& f, const K& proto) {
  return pow_mod(g, q, f, proto);
}

}  // namespace detail

/// Rabin's irreducibility test over a finite base field of size q:
/// f (degree n) is irreducible iff x^(q^n) = x mod f and, for every prime
/// divisor t of n, gcd(x^(q^(n/t)) - x, f) = 1.
template <FieldDomain F>
bool poly_is_irreducible(const F& field, const Poly<typename F::Scalar>& f)
  requires(F::is_finite)
{
  using K = typename F::Scalar;
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial,
          "irreducibility requires degree >= 1");
  const K proto = field.one();
  const std::uint64_t q = field.size();
  const Poly<K> monic = make_monic(f);
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  if (n == 1) return true;

  const Poly<K> x = Poly<K>::x(proto);
  // Powers x^(q^d) mod f for d = 1..n, one Frobenius step at a time.
  std::vector<Poly<K>> frob(n + 1, Poly<K>());
  frob[0] = poly_mod(x, monic);
  for (std::size_t d = 1; d <= n; ++d) frob[d] = detail::frobenius_step(frob[d - 1], q, monic, proto);

  if (!(frob[n] == frob[0])) return false;
  for (std::uint64_t t : prime_factors(n)) {
    const std::size_t d = n / t;
    Poly<K> g = monic_gcd(frob[d] - frob[0], monic);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace detail {

inline std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
  __int128 r = static_cast<__int128>(a) * b;
  require(r <= INT64_MAX && r >= INT64_MIN, errc::overflow, "integer overflow clearing denominators");
  return static_cast<std::int64_t>(r);
}

/// Scale a rational polynomial to integer coefficients (content untouched;
/// irreducibility over Q ignores constant factors).
inline std::vector<std::int64_t> integer_coeffs(const Poly<Rational>& f) {
  std::int64_t l = 1;
  for (const Rational& c : f.coeffs()) l = checked_mul_i64(l / std::gcd(l, c.den()), c.den());
  std::vector<std::int64_t> out;
  out.reserve(f.coeffs().size());
  for (const Rational& c : f.coeffs()) out.push_back(checked_mul_i64(c.num(), l / c.den()));
  return out;
}

inline std::vector<std::int64_t> positive_divisors(std::int64_t v) {
  std::uint64_t n = static_cast<std::uint64_t>(v < 0 ? -v : v);
  std::vector<std::int64_t> out;
  for (std::uint64_t d : divisors_ascending(n)) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

inline bool has_rational_root(const std::vector<std::int64_t>& c) {
  // Candidates p/q with p | c[0], q | lead (rational root theorem).
  const std::size_t n = c.size() - 1;
  if (c[0] == 0) return true;  // x divides
  for (std::int64_t p : positive_divisors(c[0])) {
    for (std::int64_t q : positive_divisors(c[n])) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational r(sign ? -p : p, q);
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + Rational(c[i]);
        if (acc.is_zero()) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Irreducibility over Q, decided by the criteria actually needed here:
/// degree 1 is irreducible; degrees 2-3 reduce to the rational-root test; any
/// degree with a rational root is reducible; otherwise a degree-preserving
/// reduction mod a small prime that is irreducible certifies irreducibility.
/// Everything else is reported as undecidable rather than guessed.
inline bool poly_is_irreducible(const RationalField&, const Poly<Rational>& f) {
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial,
          "irreducibility requires degree >= 1");
  const int n = f.degree();
  if (n == 1) return true;

  std::vector<std::int64_t> c = detail::integer_coeffs(f);
  if (detail::has_rational_root(c)) return false;
  if (n <= 3) return true;

  static const std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                          31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (std::uint64_t p : kPrimes) {
    if (c.back() % static_cast<std::int64_t>(p) == 0) continue;  // degree must survive
    PrimeField gf(p);
    Vec<Fp> red;
    red.reserve(c.size());
    for (std::int64_t ci : c) red.push_back(gf.make(ci));
    if (poly_is_irreducible(gf, Poly<Fp>(std::move(red)))) return true;
  }
  fail(errc::not_decidable,
       "no implemented criterion decides irreducibility of " + poly_text(f) + " over Q");
}

/// Smallest monic irreducible of the given degree over a finite field, where
/// candidates x^n + c_(n-1) x^(n-1) + ... + c_0 are ordered by ascending value
/// of sum c_i q^i (the usual table order). Deterministic, so every run builds
/// the same field.
template <FieldDomain F>
Poly<typename F::Scalar> find_irreducible(const F& field, std::size_t degree)
  requires(F::is_finite)
{
  using K = typename F::Scalar;
  require(degree >= 1, errc::invalid_argument, "degree must be >= 1");
  const std::uint64_t q = field.size();
  std::vector<std::uint64_t> digits(degree, 0);
  for (;;) {
    Vec<K> coeffs;
    coeffs.reserve(degree + 1);
    for (std::uint64_t d : digits) coeffs.push_back(field.element(d));
    coeffs.push_back(field.one());
    Poly<K> cand(std::move(coeffs));
    if (poly_is_irreducible(field, cand)) return cand;
    // Increment the little-endian counter; existence of an irreducible of
    // every degree guarantees this terminates before wrapping.
    std::size_t i = 0;
    while (i < degree && ++digits[i] == q) digits[i++] = 0;
    require(i < degree, errc::internal, "no irreducible polynomial found");
  }
}

inline Poly<Fp> find_irreducible(std::uint64_t p, std::size_t degree) {
  return find_irreducible(PrimeField(p), degree);
}

}  // namespace linmatch

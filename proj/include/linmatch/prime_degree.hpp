#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/extension.hpp"

namespace linmatch {

/// Degrees of a polynomial family (deg f, deg g_1, ..., deg g_n).
struct DegreeSystem {
  std::vector<std::uint64_t> degrees;

  explicit DegreeSystem(std::vector<std::uint64_t> d) : degrees(std::move(d)) {
    require(!degrees.empty(), errc::invalid_argument, "degree system must be nonempty");
    for (std::uint64_t deg : degrees)
      require(deg >= 1, errc::invalid_argument, "every degree must be >= 1");
  }

  std::uint64_t gcd() const {
    std::uint64_t g = 0;
    for (std::uint64_t d : degrees) g = std::gcd(g, d);
    return g;
  }
};

/// Nonnegative coefficients k with sum k_i * d_i prime; the total is
/// recomputed and primality-checked on construction.
struct PrimeCombo {
  std::vector<std::uint64_t> coefficients;
  std::uint64_t total = 0;

  PrimeCombo(const DegreeSystem& sys, std::vector<std::uint64_t> coeffs);
};

/// Smallest prime total representable as a nonnegative combination of the
/// degrees, with the lexicographically smallest coefficient vector among its
/// representations. Requires gcd 1; the search asks totals in increasing
/// order against a coin-problem reachability table and is capped (the cap is
/// generous: representable totals eventually cover a full residue system, so
/// a prime appears quickly at desk scale).
PrimeCombo prime_combination(const DegreeSystem& sys, std::uint64_t max_total = 1'000'000);

/// Root existence by exhaustive evaluation / rational-root candidates.
bool has_root(const Poly<Fp>& f, const PrimeField& field);
bool has_root(const Poly<Fp>& f, const PrimeExtensionPtr& field,
              std::uint64_t field_bound = std::uint64_t{1} << 20);
bool has_root(const Poly<Rational>& f);

/// An irreducible polynomial of prime degree over GF(p): the canonical
/// irreducible quadratic. Witnesses that GF(p) is not algebraically closed.
Poly<Fp> prime_degree_irreducible_witness(std::uint64_t p);

}  // namespace linmatch

#include "linmatch/prime_degree.hpp"

#include <algorithm>

#include "linmatch/irreducibility.hpp"
#include "linmatch/numtheory.hpp"

namespace linmatch {

PrimeCombo::PrimeCombo(const DegreeSystem& sys, std::vector<std::uint64_t> coeffs)
    : coefficients(std::move(coeffs)) {
  require(coefficients.size() == sys.degrees.size(), errc::invalid_argument,
          "coefficient count does not match the degree system");
  for (std::size_t i = 0; i < coefficients.size(); ++i) total += coefficients[i] * sys.degrees[i];
  require(is_prime_u64(total), errc::internal, "combination total is not prime");
}

namespace {

/// reach[i][t]: t is a nonnegative combination of degrees[i..]; reach[len]
/// recognizes only 0.
std::vector<std::vector<std::uint8_t>> reach_tables(const std::vector<std::uint64_t>& degrees,
                                                    std::uint64_t cap) {
  const std::size_t len = degrees.size();
  std::vector<std::vector<std::uint8_t>> reach(len + 1, std::vector<std::uint8_t>(cap + 1, 0));
  reach[len][0] = 1;
  for (std::size_t i = len; i-- > 0;) {
    const std::uint64_t d = degrees[i];
    for (std::uint64_t t = 0; t <= cap; ++t) {
      reach[i][t] = reach[i + 1][t] || (t >= d && reach[i][t - d]);
    }
  }
  return reach;
}

}  // namespace

PrimeCombo prime_combination(const DegreeSystem& sys, std::uint64_t max_total) {
  require(sys.gcd() == 1, errc::gcd_not_one,
          "degree gcd is " + std::to_string(sys.gcd()) + "; the construction needs gcd 1");

  std::uint64_t cap = std::min<std::uint64_t>(4096, max_total);
  for (;;) {
    auto reach = reach_tables(sys.degrees, cap);
    for (std::uint64_t t = 2; t <= cap; ++t) {
      if (!reach[0][t] || !is_prime_u64(t)) continue;
      // Lexicographically smallest vector: greedily minimize each
      // coefficient subject to the suffix staying representable.
      std::vector<std::uint64_t> k(sys.degrees.size(), 0);
      std::uint64_t rem = t;
      for (std::size_t i = 0; i < sys.degrees.size(); ++i) {
        while (!reach[i + 1][rem]) {
          require(rem >= sys.degrees[i], errc::internal, "reachability table is inconsistent");
          rem -= sys.degrees[i];
          ++k[i];
        }
      }
      require(rem == 0, errc::internal, "combination reconstruction left a remainder");
      return PrimeCombo(sys, std::move(k));
    }
    if (cap == max_total) break;
    cap = std::min<std::uint64_t>(cap * 16, max_total);
  }
  fail(errc::bound_exceeded,
       "no representable prime total up to the cap " + std::to_string(max_total));
}

bool has_root(const Poly<Fp>& f, const PrimeField& field) {
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial, "root test needs degree >= 1");
  require(field.p <= (std::uint64_t{1} << 20), errc::bound_exceeded,
          "field too large for exhaustive root search");
  for (std::uint64_t v = 0; v < field.p; ++v) {
    if (eval(f, field.element(v)).is_zero()) return true;
  }
  return false;
}

bool has_root(const Poly<Fp>& f, const PrimeExtensionPtr& field, std::uint64_t field_bound) {
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial, "root test needs degree >= 1");
  std::uint64_t size = 1;
  const std::uint64_t q = field->base().p;
  for (std::size_t i = 0; i < field->degree(); ++i) {
    require(size <= field_bound / q, errc::bound_exceeded,
            "field too large for exhaustive root search");
    size *= q;
  }
  require(size <= field_bound, errc::bound_exceeded, "field too large for exhaustive root search");
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Element<PrimeField> x = field->element(idx);
    Element<PrimeField> acc = field->zero();
    for (int i = f.degree(); i >= 0; --i) {
      acc = acc * x + field->from_base(f.coeffs()[static_cast<std::size_t>(i)]);
    }
    if (acc.is_zero()) return true;
  }
  return false;
}

bool has_root(const Poly<Rational>& f) {
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial, "root test needs degree >= 1");
  return detail::has_rational_root(detail::integer_coeffs(f));
}

Poly<Fp> prime_degree_irreducible_witness(std::uint64_t p) {
  // Degree 2 is the smallest prime, and an irreducible quadratic exists over
  // every finite field.
  return find_irreducible(p, 2);
}

}  // namespace linmatch

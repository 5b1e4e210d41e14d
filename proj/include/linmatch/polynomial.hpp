#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/linalg.hpp"

namespace linmatch {

/// Dense univariate polynomial over a field scalar, little-endian coefficients
/// (index i is the coefficient of x^i). Canonical form: no trailing zeros,
/// the zero polynomial is the empty list.
template <FieldScalar K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
  static Poly x(const K& proto) { return Poly(std::vector<K>{proto.zero(), proto.one()}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K coeff(std::size_t i, const K& proto) const { return i < c_.size() ? c_[i] : proto.zero(); }

  const K& lead() const {
    require(!c_.empty(), errc::zero_polynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == c_.back().one(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const K z = a.c_[0].zero();
    std::vector<K> out(std::max(a.c_.size(), b.c_.size()), z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<K> out;
    out.reserve(c_.size());
    for (const K& x : c_) out.push_back(-x);
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const K z = a.c_[0].zero();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(const K& s, const Poly& p) {
    std::vector<K> out;
    out.reserve(p.c_.size());
    for (const K& x : p.c_) out.push_back(s * x);
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

template <FieldScalar K>
Poly<K> make_monic(const Poly<K>& f) {
  require(!f.is_zero(), errc::zero_polynomial, "cannot normalize zero polynomial");
  return f.lead().inverse() * f;
}

/// Quotient and remainder; the divisor's leading coefficient is inverted, so
/// this works for any nonzero divisor over a field.
template <FieldScalar K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  const K z = b.lead().zero();
  const K lead_inv = b.lead().inverse();
  std::vector<K> rem(a.coeffs());
  std::vector<K> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), z);
  for (int d = a.degree(); d >= b.degree(); --d) {
    K c = rem[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    K q = c * lead_inv;
    quot[static_cast<std::size_t>(d - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j) {
      std::size_t idx = static_cast<std::size_t>(d - b.degree() + j);
      rem[idx] = rem[idx] - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <FieldScalar K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

/// Monic gcd by the Euclidean algorithm.
template <FieldScalar K>
Poly<K> monic_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return make_monic(a);
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g.
template <FieldScalar K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> extended_gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) return {Poly<K>(), Poly<K>(), Poly<K>()};
  const Poly<K> one = Poly<K>::constant((a.is_zero() ? b : a).lead().one());
  Poly<K> u0 = one, u1;
  Poly<K> v0, v1 = one;
  Poly<K> r0 = a, r1 = b;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1; r1 = r;
    Poly<K> nu = u0 - q * u1; u0 = u1; u1 = nu;
    Poly<K> nv = v0 - q * v1; v0 = v1; v1 = nv;
  }
  return {r0, u0, v0};
}

template <FieldScalar K>
Poly<K> pow_mod(Poly<K> base, std::uint64_t e, const Poly<K>& mod, const K& proto) {
  Poly<K> result = Poly<K>::constant(proto.one());
  result = poly_mod(result, mod);
  base = poly_mod(base, mod);
  while (e) {
    if (e & 1) result = poly_mod(result * base, mod);
    base = poly_mod(base * base, mod);
    e >>= 1;
  }
  return result;
}

template <FieldScalar K>
K eval(const Poly<K>& f, const K& x) {
  K acc = x.zero();
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeffs()[static_cast<std::size_t>(i)];
  return acc;
}

// --- text format: comma-separated little-endian coefficients ("1,1,1" = x^2+x+1) ---

template <FieldScalar K>
std::string poly_text(const Poly<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += f.coeffs()[i].str();
  }
  return out;
}

template <FieldDomain F>
Poly<typename F::Scalar> parse_poly(const F& field, std::string_view text) {
  std::vector<typename F::Scalar> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                              : comma - start);
    require(!tok.empty(), errc::invalid_argument, "empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(field.parse_scalar(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly<typename F::Scalar>(std::move(coeffs));
}

template <FieldScalar K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& f) {
  return os << poly_text(f);
}

}  // namespace linmatch

#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/fp.hpp"
#include "linmatch/irreducibility.hpp"
#include "linmatch/linalg.hpp"
#include "linmatch/polynomial.hpp"
#include "linmatch/rational.hpp"

namespace linmatch {

template <FieldDomain F>
class Extension;

/// Element of L = K[x]/(f), stored as coordinates over the base field in the
/// power basis 1, x, ..., x^(n-1). Immutable value; carries its context.
template <FieldDomain F>
class Element {
 public:
  using K = typename F::Scalar;
  using Ctx = std::shared_ptr<const Extension<F>>;

  Element(Ctx ctx, Vec<K> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    require(ctx_ != nullptr, errc::internal, "element without context");
    require(coords_.size() == ctx_->degree(), errc::dimension_mismatch,
            "coordinate vector length does not match extension degree");
  }

  const Ctx& ctx() const { return ctx_; }
  const Vec<K>& coords() const { return coords_; }

  bool is_zero() const { return vec_is_zero(coords_); }
  Element zero() const { return ctx_->zero(); }
  Element one() const { return ctx_->one(); }

  friend Element operator+(const Element& a, const Element& b) {
    a.check(b);
    Vec<K> out = a.coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b.coords_[i];
    return Element(a.ctx_, std::move(out));
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.check(b);
    Vec<K> out = a.coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b.coords_[i];
    return Element(a.ctx_, std::move(out));
  }
  Element operator-() const {
    Vec<K> out;
    out.reserve(coords_.size());
    for (const K& c : coords_) out.push_back(-c);
    return Element(ctx_, std::move(out));
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.check(b);
    return Element(a.ctx_, a.ctx_->mul_coords(a.coords_, b.coords_));
  }
  friend Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

  Element inverse() const { return ctx_->invert(*this); }

  Element pow(std::uint64_t e) const {
    Element acc = ctx_->one();
    Element base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Element& a, const Element& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      if (!(a.coords_[i] == b.coords_[i])) return false;
    return true;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Lexicographic order on coordinate vectors; used for reproducible
  /// enumeration only.
  friend bool operator<(const Element& a, const Element& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return true;
      if (b.coords_[i] < a.coords_[i]) return false;
    }
    return false;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += coords_[i].str();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

 private:
  void check(const Element& o) const {
    require(ctx_ == o.ctx_ || ctx_->same(*o.ctx_), errc::context_mismatch,
            "elements from different extensions");
  }

  Ctx ctx_;
  Vec<K> coords_;
};

/// Explicit field extension L = K[x]/(f) with a distinguished power basis.
/// Construction validates that f is monic and irreducible over K.
template <FieldDomain F>
class Extension : public std::enable_shared_from_this<Extension<F>> {
 public:
  using K = typename F::Scalar;
  using Elem = Element<F>;
  static constexpr bool is_finite = F::is_finite;

  static std::shared_ptr<const Extension> make(F base, Poly<K> modulus) {
    require(modulus.degree() >= 1, errc::zero_polynomial, "modulus must have degree >= 1");
    require(modulus.is_monic(), errc::invalid_argument, "modulus must be monic");
    require(poly_is_irreducible(base, modulus), errc::not_irreducible,
            "modulus " + poly_text(modulus) + " is reducible over " + base.describe());
    return std::shared_ptr<const Extension>(new Extension(std::move(base), std::move(modulus)));
  }

  const F& base() const { return base_; }
  const Poly<K>& modulus() const { return modulus_; }
  std::size_t degree() const { return n_; }

  bool same(const Extension& o) const {
    return base_.same(o.base_) && modulus_ == o.modulus_;
  }

  Elem zero() const { return Elem(self(), zero_vec(n_, base_.zero())); }
  Elem one() const { return from_base(base_.one()); }

  /// The residue class of x (the defining generator); equals the base one()
  /// embedding when the degree is 1.
  Elem generator() const {
    if (n_ == 1) {
      // x = -f(0) in K[x]/(x - c).
      return from_base(-modulus_.coeffs()[0]);
    }
    Vec<K> c = zero_vec(n_, base_.zero());
    c[1] = base_.one();
    return Elem(self(), std::move(c));
  }

  Elem from_coords(Vec<K> coords) const { return Elem(self(), std::move(coords)); }

  Elem from_base(const K& a) const {
    Vec<K> c = zero_vec(n_, base_.zero());
    c[0] = a;
    return Elem(self(), std::move(c));
  }

  Elem from_int(std::int64_t k) const { return from_base(base_.make(k)); }

  /// Field size |K|^n; finite bases only. Guarded against 64-bit overflow.
  std::uint64_t size() const
    requires(F::is_finite)
  {
    std::uint64_t q = base_.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      require(total <= UINT64_MAX / q, errc::bound_exceeded, "field too large to enumerate");
      total *= q;
    }
    return total;
  }

  /// Element with the given mixed-radix index (base-|K| digits are the
  /// coordinates, least-significant first); the enumeration order of L.
  Elem element(std::uint64_t idx) const
    requires(F::is_finite)
  {
    std::uint64_t q = base_.size();
    Vec<K> c;
    c.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      c.push_back(base_.element(idx % q));
      idx /= q;
    }
    require(idx == 0, errc::invalid_argument, "element index out of range");
    return Elem(self(), std::move(c));
  }

  std::uint64_t index_of(const Elem& e) const
    requires(F::is_finite)
  {
    std::uint64_t q = base_.size();
    std::uint64_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) idx = idx * q + base_.index_of(e.coords()[i]);
    return idx;
  }

  Vec<K> mul_coords(const Vec<K>& a, const Vec<K>& b) const {
    const K z = base_.zero();
    Vec<K> conv(2 * n_ - 1, z);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) conv[i + j] = conv[i + j] + a[i] * b[j];
    }
    // Fold x^(n+k) down using the precomputed reductions, highest first.
    for (std::size_t d = 2 * n_ - 2; d >= n_; --d) {
      const K c = conv[d];
      if (!c.is_zero()) {
        const Vec<K>& red = xpow_[d - n_];
        for (std::size_t j = 0; j < n_; ++j) conv[j] = conv[j] + c * red[j];
      }
      if (d == n_) break;
    }
    conv.erase(conv.begin() + static_cast<std::ptrdiff_t>(n_), conv.end());
    return conv;
  }

  Elem invert(const Elem& e) const {
    require(!e.is_zero(), errc::division_by_zero, "inverse of zero field element");
    Poly<K> a(Vec<K>(e.coords()));
    auto [g, u, v] = extended_gcd(a, modulus_);
    (void)v;
    require(g.degree() == 0, errc::internal, "modulus not coprime with nonzero element");
    Poly<K> inv = g.coeffs()[0].inverse() * u;
    inv = poly_mod(inv, modulus_);
    Vec<K> c = zero_vec(n_, base_.zero());
    for (std::size_t i = 0; i < inv.coeffs().size(); ++i) c[i] = inv.coeffs()[i];
    return Elem(self(), std::move(c));
  }

  std::string describe() const {
    return base_.describe() + "[x]/(" + poly_text(modulus_) + ")";
  }

 private:
  Extension(F base, Poly<K> modulus)
      : base_(std::move(base)),
        modulus_(std::move(modulus)),
        n_(static_cast<std::size_t>(modulus_.degree())) {
    // x^(n+k) mod f for k = 0..n-2, as coordinate vectors.
    const K z = base_.zero();
    Vec<K> cur = zero_vec(n_, z);  // will hold x^(n+k) mod f
    // x^n = -(f - x^n) i.e. negate the low part of the monic modulus.
    for (std::size_t j = 0; j < n_; ++j) cur[j] = -modulus_.coeffs()[j];
    xpow_.push_back(cur);
    for (std::size_t k = 1; k + 1 < n_; ++k) {
      // multiply by x: shift, then fold the overflow coefficient.
      K top = cur[n_ - 1];
      for (std::size_t j = n_ - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = z;
      if (!top.is_zero()) add_scaled(cur, xpow_[0], top);
      xpow_.push_back(cur);
    }
  }

  std::shared_ptr<const Extension> self() const { return this->shared_from_this(); }

  F base_;
  Poly<K> modulus_;
  std::size_t n_;
  std::vector<Vec<K>> xpow_;
};

template <FieldDomain F>
bool same_field(const Extension<F>& a, const Extension<F>& b) {
  return a.same(b);
}

/// A whole extension used as the base field of a further extension (tower
/// construction, e.g. GF(4)[y]/(g)).
template <FieldDomain F>
struct ExtensionField {
  using Scalar = Element<F>;
  static constexpr bool is_finite = F::is_finite;

  std::shared_ptr<const Extension<F>> ctx;

  Scalar zero() const { return ctx->zero(); }
  Scalar one() const { return ctx->one(); }
  Scalar make(std::int64_t k) const { return ctx->from_int(k); }
  Scalar parse_scalar(std::string_view text) const {
    return ctx->from_coords(parse_coords(ctx->base(), text, ctx->degree()));
  }

  std::uint64_t size() const
    requires(F::is_finite)
  {
    return ctx->size();
  }
  Scalar element(std::uint64_t i) const
    requires(F::is_finite)
  {
    return ctx->element(i);
  }
  std::uint64_t index_of(const Scalar& s) const
    requires(F::is_finite)
  {
    return ctx->index_of(s);
  }

  bool same(const ExtensionField& o) const { return ctx->same(*o.ctx); }
  std::string describe() const { return ctx->describe(); }

 private:
  static Vec<typename F::Scalar> parse_coords(const F& base, std::string_view text, std::size_t n) {
    Poly<typename F::Scalar> p = parse_poly(base, text);
    require(p.degree() < static_cast<int>(n), errc::invalid_argument,
            "too many coordinates for tower scalar");
    Vec<typename F::Scalar> c(n, base.zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
    return c;
  }
};

using PrimeExtension = Extension<PrimeField>;
using PrimeExtensionPtr = std::shared_ptr<const Extension<PrimeField>>;
using RationalExtensionPtr = std::shared_ptr<const Extension<RationalField>>;

}  // namespace linmatch

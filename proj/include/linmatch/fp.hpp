#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "linmatch/error.hpp"
#include "linmatch/numtheory.hpp"

namespace linmatch {

/// Prime-field scalar with a runtime modulus. Values are stored reduced;
/// mixing scalars from different moduli throws.
class Fp {
 public:
  Fp(std::uint64_t p, std::int64_t v) : p_(p) {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  Fp zero() const { return Fp(p_, 0); }
  Fp one() const { return Fp(p_, 1); }

  Fp inverse() const {
    require(v_ != 0, errc::division_by_zero, "inverse of zero in GF(p)");
    // Extended Euclid on (v, p).
    std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(p_, x0);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(a.p_, s);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint64_t s = a.v_ + a.p_ - b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(a.p_, s);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp::raw(a.p_, mulmod_u64(a.v_, b.v_, a.p_));
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return v_ == 0 ? *this : Fp::raw(p_, p_ - v_); }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ < b.v_;
  }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  static Fp raw(std::uint64_t p, std::uint64_t v) {
    Fp r(p, 0);
    r.v_ = v;
    return r;
  }
  void check(const Fp& o) const {
    require(p_ == o.p_, errc::context_mismatch, "GF(p) scalars from different fields");
  }

  std::uint64_t p_;
  std::uint64_t v_;
};

/// The prime field GF(p) as a field domain; p is validated on construction.
struct PrimeField {
  using Scalar = Fp;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    require(is_prime_u64(prime), errc::invalid_argument,
            "modulus " + std::to_string(prime) + " is not prime");
  }

  std::uint64_t p;

  Fp zero() const { return Fp(p, 0); }
  Fp one() const { return Fp(p, 1); }
  Fp make(std::int64_t k) const { return Fp(p, k); }
  Fp parse_scalar(std::string_view text) const {
    try {
      return Fp(p, std::stoll(std::string(text)));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "cannot parse GF(p) scalar '" + std::string(text) + "'");
    }
  }

  std::uint64_t size() const { return p; }
  Fp element(std::uint64_t i) const { return Fp(p, static_cast<std::int64_t>(i)); }
  std::uint64_t index_of(const Fp& a) const { return a.value(); }

  bool same(const PrimeField& o) const { return p == o.p; }
  std::string describe() const { return "GF(" + std::to_string(p) + ")"; }
};

}  // namespace linmatch

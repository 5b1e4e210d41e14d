#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "linmatch/error.hpp"

namespace linmatch {

/// Exact fraction over checked 64-bit integers, always reduced with a positive
/// denominator. Desk-scale inputs stay far below the guard; anything that
/// would overflow throws instead of silently wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: deliberately implicit
  Rational(std::int64_t n, std::int64_t d) { normalize(n, d); }

  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  Rational inverse() const {
    require(num_ != 0, errc::division_by_zero, "inverse of zero rational");
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t narrow(__int128 v) {
    require(v <= INT64_MAX && v >= INT64_MIN, errc::overflow, "rational exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  static Rational from_wide(__int128 n, __int128 d) {
    require(d != 0, errc::division_by_zero, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd_wide(an, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize(std::int64_t n, std::int64_t d) {
    Rational r = from_wide(n, d);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(std::stoll(std::string(text)));
    }
    std::int64_t n = std::stoll(std::string(text.substr(0, slash)));
    std::int64_t d = std::stoll(std::string(text.substr(slash + 1)));
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "cannot parse rational '" + std::string(text) + "'");
  }
}

/// The rational base field Q as a field domain.
struct RationalField {
  using Scalar = Rational;
  static constexpr bool is_finite = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational make(std::int64_t k) const { return Rational(k); }
  Rational parse_scalar(std::string_view text) const { return Rational::parse(text); }
  bool same(const RationalField&) const { return true; }
  std::string describe() const { return "Q"; }
};

}  // namespace linmatch

#pragma once

#include <stdexcept>
#include <string>

namespace linmatch {

/// Error categories surfaced by the library. CLI maps these onto exit codes.
enum class errc {
  spec_mismatch,
  size_mismatch,
  too_large,
  zero_polynomial,
  not_decidable,
  division_by_zero,
  context_mismatch,
  rational_base,
  not_a_divisor,
  zero_element,
  dimension_mismatch,
  search_exhausted,
  not_irreducible,
  not_prime_degree,
  gcd_not_one,
  bound_exceeded,
  overflow,
  invalid_argument,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::too_large: return "TooLarge";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_decidable: return "NotDecidable";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::rational_base: return "RationalBase";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::zero_element: return "ZeroElement";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_prime_degree: return "NotPrimeDegree";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::overflow: return "Overflow";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace linmatch

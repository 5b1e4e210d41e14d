#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/extension.hpp"
#include "linmatch/numtheory.hpp"

namespace linmatch {

/// x -> x^(p^k), the k-th power of the Frobenius endomorphism. An
/// automorphism of GF(p^n) fixing GF(p) pointwise.
inline Element<PrimeField> frobenius(const Element<PrimeField>& x, std::size_t k) {
  Element<PrimeField> out = x;
  const std::uint64_t p = x.ctx()->base().p;
  for (std::size_t i = 0; i < k; ++i) out = out.pow(p);
  return out;
}

inline Element<RationalField> frobenius(const Element<RationalField>&, std::size_t) {
  fail(errc::rational_base, "Frobenius is defined over finite fields only");
}

/// Degrees m of the subfields of GF(p^n): exactly the divisors of n, in
/// increasing order, each realized by a unique subfield with p^m elements.
inline std::vector<std::size_t> subfield_degrees(const Extension<PrimeField>& ctx) {
  std::vector<std::size_t> out;
  for (std::uint64_t d : divisors_ascending(ctx.degree())) out.push_back(static_cast<std::size_t>(d));
  return out;
}

inline std::vector<std::size_t> subfield_degrees(const Extension<RationalField>&) {
  fail(errc::rational_base, "subfield lattice is implemented for finite fields only");
}

/// The subfield of GF(p^n) with p^m elements, described by a GF(p)-basis of
/// the fixed space of the m-th Frobenius power.
struct SubfieldBasis {
  std::size_t sub_degree = 0;
  std::vector<Element<PrimeField>> basis;
  Mat<Fp> rref;  // canonical row basis, for membership tests

  bool contains(const Element<PrimeField>& x) const { return in_row_span(rref, x.coords()); }

  /// All p^m elements, in mixed-radix combination order over the rref basis.
  std::vector<Element<PrimeField>> elements() const {
    const auto& ctx = basis.at(0).ctx();
    const std::uint64_t p = ctx->base().p;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < sub_degree; ++i) count *= p;
    std::vector<Element<PrimeField>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Element<PrimeField> acc = ctx->zero();
      std::uint64_t rem = idx;
      for (std::size_t i = 0; i < sub_degree; ++i) {
        std::uint64_t digit = rem % p;
        rem /= p;
        if (digit) acc = acc + ctx->from_int(static_cast<std::int64_t>(digit)) * basis[i];
      }
      out.push_back(acc);
    }
    return out;
  }
};

/// Basis of the kernel of y -> y^(p^m) - y on GF(p^n), i.e. of the subfield
/// with p^m elements. Multiplicative closure of the span is verified on the
/// basis (bilinearity extends it to the whole set).
inline SubfieldBasis subfield_basis(const PrimeExtensionPtr& ctx, std::size_t m) {
  const std::size_t n = ctx->degree();
  require(m >= 1 && n % m == 0, errc::not_a_divisor,
          std::to_string(m) + " does not divide " + std::to_string(n));
  const Fp z = ctx->base().zero();

  // Row i, column j: coordinate i of frobenius(e_j, m) - e_j.
  Mat<Fp> map(n, zero_vec(n, z));
  for (std::size_t j = 0; j < n; ++j) {
    Vec<Fp> ej = zero_vec(n, z);
    ej[j] = ctx->base().one();
    Element<PrimeField> img = frobenius(ctx->from_coords(ej), m);
    for (std::size_t i = 0; i < n; ++i) {
      map[i][j] = img.coords()[i];
      if (i == j) map[i][j] = map[i][j] - ctx->base().one();
    }
  }

  Mat<Fp> ker = rref(kernel_basis(map, n, z));
  require(ker.size() == m, errc::internal,
          "Frobenius fixed space has unexpected dimension " + std::to_string(ker.size()));

  SubfieldBasis out;
  out.sub_degree = m;
  out.rref = ker;
  for (const auto& row : ker) out.basis.push_back(ctx->from_coords(row));

  // Products of basis vectors must stay in the span.
  for (const auto& a : out.basis)
    for (const auto& b : out.basis)
      require(out.contains(a * b), errc::internal, "subfield span not multiplicatively closed");
  return out;
}

/// Degrees m with m0 | m | n and m0 < m < n: the degrees over the prime field
/// of the proper intermediate subfields between GF(p^m0) and GF(p^n).
inline std::vector<std::size_t> intermediate_degrees(const Extension<PrimeField>& ctx, std::size_t m0) {
  const std::size_t n = ctx.degree();
  require(m0 >= 1 && n % m0 == 0, errc::not_a_divisor,
          std::to_string(m0) + " does not divide " + std::to_string(n));
  std::vector<std::size_t> out;
  for (std::size_t m : subfield_degrees(ctx)) {
    if (m % m0 == 0 && m0 < m && m < n) out.push_back(m);
  }
  return out;
}

/// Whether the extension GF(p^n) / GF(p^m0) has a proper intermediate
/// subfield, i.e. whether the relative degree n/m0 is composite.
inline bool has_proper_intermediate_subfield(const Extension<PrimeField>& ctx, std::size_t m0) {
  return !intermediate_degrees(ctx, m0).empty();
}

}  // namespace linmatch

#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linmatch/error.hpp"

namespace linmatch {

/// A field scalar: exact arithmetic plus same-field constants derived from any
/// instance (moduli and extension contexts travel with the value).
template <class K>
concept FieldScalar = requires(const K& a, const K& b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<K>;
  { a.one() } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
};

/// A base-field domain: produces scalars and names itself. Finite domains
/// additionally enumerate their elements in a fixed order.
template <class F>
concept FieldDomain = requires(const F& f, std::int64_t k) {
  typename F::Scalar;
  { f.zero() } -> std::convertible_to<typename F::Scalar>;
  { f.one() } -> std::convertible_to<typename F::Scalar>;
  { f.make(k) } -> std::convertible_to<typename F::Scalar>;
  { f.same(f) } -> std::convertible_to<bool>;
  { f.describe() } -> std::convertible_to<std::string>;
};

template <FieldScalar K>
using Vec = std::vector<K>;

template <FieldScalar K>
using Mat = std::vector<std::vector<K>>;  // dense, row-major

template <FieldScalar K>
Vec<K> zero_vec(std::size_t n, const K& proto) {
  return Vec<K>(n, proto.zero());
}

template <FieldScalar K>
bool vec_is_zero(const Vec<K>& v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <FieldScalar K>
K dot(const Vec<K>& a, const Vec<K>& b) {
  require(a.size() == b.size() && !a.empty(), errc::dimension_mismatch, "dot length mismatch");
  K acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

template <FieldScalar K>
void add_scaled(Vec<K>& dst, const Vec<K>& src, const K& c) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] + c * src[i];
}

/// In-place reduced row echelon form; returns the rank. Pivoting is exact:
/// the first row with a nonzero entry in the current column wins, so the
/// result is canonical for a given row span.
template <FieldScalar K>
std::size_t rref_in_place(Mat<K>& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) { piv = i; break; }
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    K inv = m[r][c].inverse();
    for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      K f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Reduced echelon basis of the row span; zero rows dropped.
template <FieldScalar K>
Mat<K> rref(Mat<K> m) {
  std::size_t rank = rref_in_place(m);
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end());
  return m;
}

/// Pivot column of each row of an rref matrix.
template <FieldScalar K>
std::vector<std::size_t> pivot_columns(const Mat<K>& r) {
  std::vector<std::size_t> piv;
  piv.reserve(r.size());
  for (const auto& row : r) {
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    require(c < row.size(), errc::internal, "zero row in rref basis");
    piv.push_back(c);
  }
  return piv;
}

template <FieldScalar K>
std::size_t rank_of(Mat<K> m) {
  return rref_in_place(m);
}

/// Basis (as rows) of { x : m * x = 0 } for an rows x cols matrix, derived
/// from the rref by the free-column construction; deterministic.
template <FieldScalar K>
Mat<K> kernel_basis(Mat<K> m, std::size_t cols, const K& proto) {
  std::size_t rank = rref_in_place(m);
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end());
  std::vector<std::size_t> piv = pivot_columns(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  Mat<K> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec<K> x = zero_vec(cols, proto);
    x[c] = proto.one();
    for (std::size_t i = 0; i < rank; ++i) x[piv[i]] = -m[i][c];
    out.push_back(std::move(x));
  }
  return out;
}

/// Reduce v against an rref row basis; returns the residual.
template <FieldScalar K>
Vec<K> reduce_against(const Mat<K>& rref_rows, Vec<K> v) {
  if (rref_rows.empty()) return v;
  std::vector<std::size_t> piv = pivot_columns(rref_rows);
  for (std::size_t i = 0; i < rref_rows.size(); ++i) {
    K c = v[piv[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rref_rows[i][j];
  }
  return v;
}

template <FieldScalar K>
bool in_row_span(const Mat<K>& rref_rows, const Vec<K>& v) {
  return vec_is_zero(reduce_against(rref_rows, v));
}

/// Coefficients y with sum_i y_i * rref_rows[i] == v, if v lies in the span.
template <FieldScalar K>
std::optional<Vec<K>> solve_row_combo(const Mat<K>& rref_rows, const Vec<K>& v, const K& proto) {
  std::vector<std::size_t> piv = pivot_columns(rref_rows);
  Vec<K> y;
  y.reserve(rref_rows.size());
  for (std::size_t i = 0; i < rref_rows.size(); ++i) y.push_back(v[piv[i]]);
  Vec<K> check = v;
  for (std::size_t i = 0; i < rref_rows.size(); ++i) add_scaled(check, rref_rows[i], -y[i]);
  if (!vec_is_zero(check)) return std::nullopt;
  (void)proto;
  return y;
}

template <FieldScalar K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), errc::dimension_mismatch,
          "matrix product shape mismatch");
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  const K z = a[0][0].zero();
  Mat<K> out(n, Vec<K>(m, z));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

template <FieldScalar K>
Mat<K> identity(std::size_t n, const K& proto) {
  Mat<K> out(n, zero_vec(n, proto));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = proto.one();
  return out;
}

/// Exact inverse of a square matrix, or nullopt when singular.
template <FieldScalar K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  const std::size_t n = m.size();
  require(n > 0 && m[0].size() == n, errc::dimension_mismatch, "inverse needs a square matrix");
  const K proto = m[0][0];
  Mat<K> aug(n, zero_vec(2 * n, proto));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = proto.one();
  }
  if (rref_in_place(aug) != n) return std::nullopt;
  // Rank n on the left block means the left half reduced to the identity.
  for (std::size_t i = 0; i < n; ++i)
    if (!(aug[i][i] == proto.one())) return std::nullopt;
  Mat<K> inv(n, zero_vec(n, proto));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

template <FieldScalar K>
bool mat_eq(const Mat<K>& a, const Mat<K>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

}  // namespace linmatch

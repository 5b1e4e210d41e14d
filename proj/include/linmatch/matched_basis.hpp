#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/subspace.hpp"

namespace linmatch {

/// The blocker of a against (A, B): S = { b in B : a*b in A }, computed as
/// the kernel of the composite linear map (B-coordinates -> multiply by a ->
/// residual against A). A K-subspace of B by construction.
template <FieldDomain F>
Subspace<F> blocker(const Subspace<F>& A, const Element<F>& a, const Subspace<F>& B) {
  using K = typename F::Scalar;
  require(!a.is_zero(), errc::zero_element, "blocker needs a nonzero multiplier");
  require(A.ctx()->same(*B.ctx()) && A.ctx()->same(*a.ctx()), errc::context_mismatch,
          "blocker arguments from different extensions");
  require(A.dim() == B.dim(), errc::dimension_mismatch, "blocker expects equal dimensions");

  const auto& ctx = B.ctx();
  const K z = ctx->base().zero();
  const std::size_t n = ctx->degree();

  // Functionals vanishing on A: the kernel rows of A's basis matrix.
  Mat<K> ann = kernel_basis(Mat<K>(A.rows()), n, z);
  if (ann.empty()) return B;  // A is the whole field

  // Condition matrix on B-coordinates y: for each functional u,
  // u . coords(a * (sum_v y_v B_v)) = sum_v y_v (u . coords(a * B_v)) = 0.
  Mat<K> cond(ann.size(), zero_vec(B.dim(), z));
  for (std::size_t v = 0; v < B.dim(); ++v) {
    Element<F> prod = a * ctx->from_coords(B.rows()[v]);
    for (std::size_t u = 0; u < ann.size(); ++u) cond[u][v] = dot(ann[u], prod.coords());
  }

  Mat<K> y_basis = kernel_basis(std::move(cond), B.dim(), z);
  if (y_basis.empty()) return Subspace<F>::from_rows(ctx, Mat<K>{});
  Mat<K> rows = mat_mul(y_basis, B.rows());
  return Subspace<F>::from_rows(ctx, std::move(rows));
}

/// Hyperplane of B spanned by the basis vectors other than index i.
template <FieldDomain F>
Subspace<F> hyperplane_without(const OrderedBasis<F>& basis, std::size_t skip) {
  std::vector<Element<F>> rest;
  rest.reserve(basis.vectors.size() - 1);
  for (std::size_t j = 0; j < basis.vectors.size(); ++j)
    if (j != skip) rest.push_back(basis.vectors[j]);
  if (rest.empty()) {
    return Subspace<F>::from_rows(basis.space.ctx(), Mat<typename F::Scalar>{});
  }
  return Subspace<F>::span(basis.space.ctx(), rest);
}

/// The defining relation: (a_1..a_n) is matched to (b_1..b_n) iff for every i
/// the blocker of a_i lies inside the hyperplane spanned by the b_j, j != i.
template <FieldDomain F>
bool is_matched_basis(const OrderedBasis<F>& a_basis, const OrderedBasis<F>& b_basis) {
  require(a_basis.space.ctx()->same(*b_basis.space.ctx()), errc::context_mismatch,
          "bases from different extensions");
  require(a_basis.dim() == b_basis.dim(), errc::dimension_mismatch,
          "matched bases must have equal dimension");
  for (std::size_t i = 0; i < a_basis.dim(); ++i) {
    Subspace<F> s = blocker(a_basis.space, a_basis.vectors[i], b_basis.space);
    if (!hyperplane_without(b_basis, i).contains(s)) return false;
  }
  return true;
}

/// Matched pair of ordered bases together with the blocker subspaces that
/// witnessed the hyperplane conditions; re-verifiable from scratch.
template <FieldDomain F>
struct MatchedBasisCertificate {
  OrderedBasis<F> a_basis;
  OrderedBasis<F> b_basis;
  std::vector<Subspace<F>> blockers;

  bool verify() const {
    if (!is_matched_basis(a_basis, b_basis)) return false;
    if (blockers.size() != a_basis.dim()) return false;
    for (std::size_t i = 0; i < blockers.size(); ++i) {
      if (!(blocker(a_basis.space, a_basis.vectors[i], b_basis.space) == blockers[i])) return false;
    }
    return true;
  }
};

struct MatchOptions {
  /// Exhaustive fallback is allowed only when B has at most this many
  /// elements; beyond it (or over an infinite base) a failed greedy pass
  /// reports SearchExhausted instead of deciding.
  std::uint64_t fallback_elem_bound = 4096;
  bool greedy_only = false;  // differential-testing hook
};

namespace detail {

/// Try to pick one functional per annihilator space such that the picks are
/// linearly independent: most constrained space first, first qualifying basis
/// row wins. Returns the functionals in original index order, or nothing.
template <FieldScalar K>
std::optional<Mat<K>> greedy_transversal(const std::vector<Mat<K>>& anns, std::size_t d, const K& z) {
  std::vector<std::size_t> order(anns.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return anns[x].size() < anns[y].size(); });

  Mat<K> chosen_rref;
  Mat<K> psi(anns.size(), zero_vec(d, z));
  for (std::size_t idx : order) {
    bool found = false;
    for (const auto& row : anns[idx]) {
      if (!in_row_span(chosen_rref, row)) {
        psi[idx] = row;
        chosen_rref.push_back(row);
        chosen_rref = rref(std::move(chosen_rref));
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return psi;
}

}  // namespace detail

template <FieldDomain F>
std::optional<MatchedBasisCertificate<F>> find_matched_basis_certified(
    const OrderedBasis<F>& a_basis, const Subspace<F>& B, const MatchOptions& opts = {});

/// Exhaustive decision: enumerate every ordered basis of B in lexicographic
/// order and return the first matched one; a nullopt is a proof that none
/// exists. Finite bases only.
template <FieldDomain F>
std::optional<OrderedBasis<F>> find_matched_basis_exhaustive(const OrderedBasis<F>& a_basis,
                                                             const Subspace<F>& B)
  requires(F::is_finite)
{
  require(a_basis.dim() == B.dim(), errc::dimension_mismatch,
          "matched-basis search needs equal dimensions");
  for (const auto& tuple : basis_tuples(B, /*up_to_scaling_and_permutation=*/false)) {
    OrderedBasis<F> cand(B, tuple);
    if (is_matched_basis(a_basis, cand)) return cand;
  }
  return std::nullopt;
}

/// Search for an ordered basis of B matched to the given basis of A.
///
/// Route: compute the blockers S_i; if some S_i is all of B no hyperplane can
/// contain it, so no matched basis exists. Otherwise pick dual functionals
/// psi_i vanishing on S_i that form a basis of the dual (greedy over the
/// annihilator spaces) and return the predual basis (psi_i(b_j) = delta_ij).
/// If the greedy pass fails, fall back to exhaustive enumeration of ordered
/// bases when B is small enough; otherwise throw SearchExhausted — "gave up",
/// as opposed to the nullopt "none exists".
template <FieldDomain F>
std::optional<OrderedBasis<F>> find_matched_basis(const OrderedBasis<F>& a_basis,
                                                  const Subspace<F>& B,
                                                  const MatchOptions& opts = {}) {
  auto cert = find_matched_basis_certified(a_basis, B, opts);
  if (!cert) return std::nullopt;
  return cert->b_basis;
}

template <FieldDomain F>
std::optional<MatchedBasisCertificate<F>> find_matched_basis_certified(
    const OrderedBasis<F>& a_basis, const Subspace<F>& B, const MatchOptions& opts) {
  using K = typename F::Scalar;
  require(a_basis.space.ctx()->same(*B.ctx()), errc::context_mismatch,
          "matched-basis search across extensions");
  require(a_basis.dim() == B.dim(), errc::dimension_mismatch,
          "matched-basis search needs equal dimensions");

  const auto& ctx = B.ctx();
  const K z = ctx->base().zero();
  const std::size_t d = B.dim();

  std::vector<Subspace<F>> blockers;
  blockers.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Subspace<F> s = blocker(a_basis.space, a_basis.vectors[i], B);
    if (s == B) return std::nullopt;  // no hyperplane of B contains B itself
    blockers.push_back(std::move(s));
  }

  auto finish = [&](OrderedBasis<F> b_basis) -> std::optional<MatchedBasisCertificate<F>> {
    MatchedBasisCertificate<F> cert{a_basis, std::move(b_basis), blockers};
    require(cert.verify(), errc::internal, "constructed matched basis failed re-verification");
    return cert;
  };

  // Annihilators of the blockers inside the dual of B (B-coordinates).
  std::vector<Mat<K>> anns;
  anns.reserve(d);
  for (const auto& s : blockers) {
    Mat<K> s_in_b;
    for (const auto& row : s.rows()) {
      auto combo = solve_row_combo(B.rows(), row, z);
      require(combo.has_value(), errc::internal, "blocker escaped its enclosing subspace");
      s_in_b.push_back(std::move(*combo));
    }
    anns.push_back(rref(kernel_basis(std::move(s_in_b), d, z)));
  }

  if (auto psi = detail::greedy_transversal(anns, d, z)) {
    auto inv = inverse(*psi);
    require(inv.has_value(), errc::internal, "independent functionals with singular matrix");
    std::vector<Element<F>> vectors;
    vectors.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> y;
      y.reserve(d);
      for (std::size_t v = 0; v < d; ++v) y.push_back((*inv)[v][j]);
      Vec<K> coords = zero_vec(ctx->degree(), z);
      for (std::size_t v = 0; v < d; ++v) add_scaled(coords, B.rows()[v], y[v]);
      vectors.push_back(ctx->from_coords(std::move(coords)));
    }
    return finish(OrderedBasis<F>(B, std::move(vectors)));
  }

  if (opts.greedy_only) fail(errc::search_exhausted, "greedy transversal failed (fallback disabled)");

  if constexpr (F::is_finite) {
    std::uint64_t b_size = 1;
    const std::uint64_t q = ctx->base().size();
    bool too_big = false;
    for (std::size_t i = 0; i < d; ++i) {
      if (b_size > opts.fallback_elem_bound / q) { too_big = true; break; }
      b_size *= q;
    }
    if (!too_big && b_size <= opts.fallback_elem_bound) {
      auto found = find_matched_basis_exhaustive(a_basis, B);
      if (!found) return std::nullopt;  // proved: none exists
      return finish(std::move(*found));
    }
    fail(errc::search_exhausted,
         "greedy pass failed and B exceeds the exhaustive fallback bound");
  } else {
    fail(errc::search_exhausted,
         "greedy pass failed and the base field does not admit exhaustive enumeration");
  }
}

enum class Coverage { exhaustive, sampled };

inline std::string coverage_text(Coverage c, std::uint64_t count) {
  return c == Coverage::exhaustive ? "exhaustive" : "sampled(" + std::to_string(count) + ")";
}

struct SubspaceMatchOptions {
  bool basis_quotient = true;       // enumerate bases up to scaling + simultaneous permutation
  std::uint64_t exhaustive_basis_bound = 20000;
  std::uint64_t sample_count = 64;  // bases sampled beyond the exhaustive bound
  std::uint64_t seed = 0;
  MatchOptions match;
};

template <FieldDomain F>
struct SubspaceMatchResult {
  bool matched = false;
  Coverage coverage = Coverage::exhaustive;
  std::uint64_t bases_checked = 0;
  std::optional<OrderedBasis<F>> unmatched_basis;  // witness when !matched
};

/// Is every ordered basis of A matched to some ordered basis of B?
/// Exhaustive over the (optionally quotiented) basis enumeration when it fits
/// the bound, otherwise sampled with the seed recorded by the caller. The
/// quotient relies on matched-basis existence being invariant under scaling
/// individual vectors and permuting both bases simultaneously.
template <FieldDomain F>
SubspaceMatchResult<F> is_matched_subspace(const Subspace<F>& A, const Subspace<F>& B,
                                           const SubspaceMatchOptions& opts = {}) {
  require(A.ctx()->same(*B.ctx()), errc::context_mismatch, "subspaces from different extensions");
  require(A.dim() == B.dim(), errc::dimension_mismatch, "matched subspaces need equal dimension");

  SubspaceMatchResult<F> result;
  auto check = [&](const OrderedBasis<F>& basis) {
    ++result.bases_checked;
    if (!find_matched_basis(basis, B, opts.match)) {
      result.matched = false;
      result.unmatched_basis = basis;
      return false;
    }
    return true;
  };

  if constexpr (F::is_finite) {
    // Exact enumeration size: ordered bases of a d-dimensional space over a
    // field of size q number prod_{i<d} (q^d - q^i); the scaling+permutation
    // quotient divides that by (q-1)^d * d! (both actions are free).
    const std::uint64_t q = B.ctx()->base().size();
    const std::size_t d = A.dim();
    bool fits = true;
    std::uint64_t space_size = 1;
    for (std::size_t i = 0; i < d && fits; ++i) {
      if (space_size > (std::uint64_t{1} << 32) / q) fits = false;
      else space_size *= q;
    }
    std::uint64_t count = 1, qpow = 1;
    for (std::size_t i = 0; i < d && fits; ++i) {
      std::uint64_t layer = space_size - qpow;
      if (layer == 0 || count > opts.exhaustive_basis_bound / layer) fits = false;
      else { count *= layer; qpow *= q; }
    }
    if (fits && opts.basis_quotient) {
      std::uint64_t orbit = 1;
      for (std::size_t i = 1; i <= d; ++i) orbit *= i * (q - 1);
      count /= orbit;
    }
    if (fits && count <= opts.exhaustive_basis_bound) {
      result.matched = true;
      result.coverage = Coverage::exhaustive;
      for (const auto& tuple : basis_tuples(A, opts.basis_quotient)) {
        if (!check(OrderedBasis<F>(A, tuple))) return result;
      }
      return result;
    }
  }

  result.matched = true;
  result.coverage = Coverage::sampled;
  Rng rng(opts.seed);
  for (std::uint64_t t = 0; t < opts.sample_count; ++t) {
    if (!check(random_basis(A, rng))) return result;
  }
  return result;
}

}  // namespace linmatch

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/extension.hpp"
#include "linmatch/rng.hpp"

namespace linmatch {

/// K-subspace of L in reduced echelon form, so subspace equality is
/// structural equality and exhaustive sweeps deduplicate for free.
template <FieldDomain F>
class Subspace {
 public:
  using K = typename F::Scalar;
  using Ctx = std::shared_ptr<const Extension<F>>;

  static Subspace span(const Ctx& ctx, const std::vector<Element<F>>& vectors) {
    Mat<K> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
      require(v.ctx() == ctx || v.ctx()->same(*ctx), errc::context_mismatch,
              "spanning vector from a different extension");
      rows.push_back(v.coords());
    }
    return from_rows(ctx, std::move(rows));
  }

  static Subspace from_rows(const Ctx& ctx, Mat<K> rows) {
    Subspace s;
    s.ctx_ = ctx;
    s.rref_ = rref(std::move(rows));
    return s;
  }

  const Ctx& ctx() const { return ctx_; }
  std::size_t dim() const { return rref_.size(); }
  std::size_t ambient_degree() const { return ctx_->degree(); }
  const Mat<K>& rows() const { return rref_; }

  bool contains(const Element<F>& x) const { return in_row_span(rref_, x.coords()); }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.rref_)
      if (!in_row_span(rref_, row)) return false;
    return true;
  }

  bool contains_one() const { return contains(ctx_->one()); }

  std::vector<Element<F>> basis_elements() const {
    std::vector<Element<F>> out;
    out.reserve(rref_.size());
    for (const auto& row : rref_) out.push_back(ctx_->from_coords(row));
    return out;
  }

  /// All |K|^dim elements, sorted lexicographically by coordinate vector.
  std::vector<Element<F>> elements() const
    requires(F::is_finite)
  {
    const std::uint64_t q = ctx_->base().size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
      require(count <= (std::uint64_t{1} << 20) / q, errc::bound_exceeded,
              "subspace too large to enumerate");
      count *= q;
    }
    std::vector<Element<F>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vec<K> acc = zero_vec(ambient_degree(), ctx_->base().zero());
      std::uint64_t rem = idx;
      for (std::size_t i = 0; i < dim(); ++i) {
        K c = ctx_->base().element(rem % q);
        rem /= q;
        if (!c.is_zero()) add_scaled(acc, rref_[i], c);
      }
      out.push_back(ctx_->from_coords(std::move(acc)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ctx_->same(*b.ctx_) && mat_eq(a.rref_, b.rref_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Ctx ctx_;
  Mat<K> rref_;
};

/// Ordered basis of a subspace; the order pairs index i of one basis with
/// index i of another in the matched-basis relation.
template <FieldDomain F>
struct OrderedBasis {
  Subspace<F> space;
  std::vector<Element<F>> vectors;

  OrderedBasis(Subspace<F> s, std::vector<Element<F>> v) : space(std::move(s)), vectors(std::move(v)) {
    require(!vectors.empty(), errc::invalid_argument, "empty basis");
    Subspace<F> spanned = Subspace<F>::span(space.ctx(), vectors);
    require(spanned.dim() == vectors.size(), errc::dimension_mismatch,
            "basis vectors are linearly dependent");
    require(spanned == space, errc::dimension_mismatch, "vectors do not span the subspace");
  }

  std::size_t dim() const { return vectors.size(); }
};

/// All subspaces of the given dimension, enumerated through their canonical
/// echelon forms: pivot-column sets in lexicographic order, then free entries
/// as a little-endian counter over the base-field order.
template <FieldDomain F>
std::vector<Subspace<F>> all_subspaces(const std::shared_ptr<const Extension<F>>& ctx, std::size_t d)
  requires(F::is_finite)
{
  using K = typename F::Scalar;
  const std::size_t n = ctx->degree();
  require(d >= 1 && d <= n, errc::dimension_mismatch, "subspace dimension out of range");
  const std::uint64_t q = ctx->base().size();

  std::vector<Subspace<F>> out;
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;

  for (;;) {
    // Free coordinates of this echelon shape: (row r, non-pivot column c > piv[r]).
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_pos.emplace_back(r, c);
      }
    }

    std::vector<std::uint64_t> digits(free_pos.size(), 0);
    for (;;) {
      Mat<K> rows(d, zero_vec(n, ctx->base().zero()));
      for (std::size_t r = 0; r < d; ++r) rows[r][piv[r]] = ctx->base().one();
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        rows[free_pos[t].first][free_pos[t].second] = ctx->base().element(digits[t]);
      out.push_back(Subspace<F>::from_rows(ctx, std::move(rows)));

      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }

    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i-- > 0) {
      if (piv[i] + (d - i) <= n - 1) {
        ++piv[i];
        for (std::size_t j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

namespace detail {

template <FieldDomain F>
void basis_tuples_full(const Subspace<F>& space, const std::vector<Element<F>>& pool,
                       std::vector<Element<F>>& cur, Mat<typename F::Scalar>& cur_rows,
                       std::vector<std::vector<Element<F>>>& out) {
  if (cur.size() == space.dim()) {
    out.push_back(cur);
    return;
  }
  for (const auto& cand : pool) {
    if (cand.is_zero()) continue;
    cur_rows.push_back(cand.coords());
    if (rank_of(cur_rows) == cur.size() + 1) {
      cur.push_back(cand);
      basis_tuples_full(space, pool, cur, cur_rows, out);
      cur.pop_back();
    }
    cur_rows.pop_back();
  }
}

template <FieldDomain F>
void basis_tuples_quotient(const std::vector<Element<F>>& reps, std::size_t d, std::size_t start,
                           std::vector<Element<F>>& cur, Mat<typename F::Scalar>& cur_rows,
                           std::vector<std::vector<Element<F>>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < reps.size(); ++i) {
    cur_rows.push_back(reps[i].coords());
    if (rank_of(cur_rows) == cur.size() + 1) {
      cur.push_back(reps[i]);
      basis_tuples_quotient(reps, d, i + 1, cur, cur_rows, out);
      cur.pop_back();
    }
    cur_rows.pop_back();
  }
}

}  // namespace detail

/// Ordered bases of a subspace in lexicographic order by coordinate vectors.
/// With `up_to_scaling_and_permutation` the enumeration is reduced to one
/// representative per orbit under per-vector scaling and simultaneous index
/// permutation (a safe quotient for matched-basis existence questions):
/// vectors are normalized to leading coefficient one and listed in ascending
/// order.
template <FieldDomain F>
std::vector<std::vector<Element<F>>> basis_tuples(const Subspace<F>& space,
                                                  bool up_to_scaling_and_permutation)
  requires(F::is_finite)
{
  using K = typename F::Scalar;
  std::vector<Element<F>> elems = space.elements();
  std::vector<std::vector<Element<F>>> out;
  if (!up_to_scaling_and_permutation) {
    std::vector<Element<F>> cur;
    Mat<K> cur_rows;
    detail::basis_tuples_full(space, elems, cur, cur_rows, out);
    return out;
  }
  // Projective representatives: scale so the first nonzero coordinate is 1.
  std::vector<Element<F>> reps;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    std::size_t lead = 0;
    while (e.coords()[lead].is_zero()) ++lead;
    Element<F> norm = space.ctx()->from_base(e.coords()[lead].inverse()) * e;
    if (std::find(reps.begin(), reps.end(), norm) == reps.end()) reps.push_back(norm);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Element<F>> cur;
  Mat<K> cur_rows;
  detail::basis_tuples_quotient(reps, space.dim(), 0, cur, cur_rows, out);
  return out;
}

/// Seeded random subspace of the given dimension. Finite bases draw uniform
/// coordinates; the rational base draws small integers (exact arithmetic
/// keeps everything honest).
template <FieldDomain F>
Subspace<F> random_subspace(const std::shared_ptr<const Extension<F>>& ctx, std::size_t d, Rng& rng) {
  using K = typename F::Scalar;
  const std::size_t n = ctx->degree();
  require(d >= 1 && d <= n, errc::dimension_mismatch, "subspace dimension out of range");
  for (;;) {
    Mat<K> rows;
    rows.reserve(d);
    for (std::size_t r = 0; r < d; ++r) {
      Vec<K> row;
      row.reserve(n);
      for (std::size_t c = 0; c < n; ++c) {
        if constexpr (F::is_finite) {
          row.push_back(ctx->base().element(rng.below(ctx->base().size())));
        } else {
          row.push_back(ctx->base().make(rng.range(-4, 4)));
        }
      }
      rows.push_back(std::move(row));
    }
    if (rank_of(rows) == d) return Subspace<F>::from_rows(ctx, std::move(rows));
  }
}

/// Seeded random ordered basis of a subspace: a random invertible change of
/// basis applied to the canonical rows.
template <FieldDomain F>
OrderedBasis<F> random_basis(const Subspace<F>& space, Rng& rng) {
  using K = typename F::Scalar;
  const auto& ctx = space.ctx();
  const std::size_t d = space.dim();
  for (;;) {
    Mat<K> change;
    change.reserve(d);
    for (std::size_t r = 0; r < d; ++r) {
      Vec<K> row;
      row.reserve(d);
      for (std::size_t c = 0; c < d; ++c) {
        if constexpr (F::is_finite) {
          row.push_back(ctx->base().element(rng.below(ctx->base().size())));
        } else {
          row.push_back(ctx->base().make(rng.range(-3, 3)));
        }
      }
      change.push_back(std::move(row));
    }
    if (rank_of(change) != d) continue;
    Mat<K> rows = mat_mul(change, space.rows());
    std::vector<Element<F>> vectors;
    vectors.reserve(d);
    for (auto& row : rows) vectors.push_back(ctx->from_coords(std::move(row)));
    return OrderedBasis<F>(space, std::move(vectors));
  }
}

}  // namespace linmatch

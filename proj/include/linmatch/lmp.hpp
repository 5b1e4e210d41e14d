#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "linmatch/error.hpp"
#include "linmatch/matched_basis.hpp"
#include "linmatch/numtheory.hpp"
#include "linmatch/subfield.hpp"
#include "linmatch/subspace.hpp"

namespace linmatch {

struct LmpOptions {
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  /// Pair sweeps are exhaustive when the field has at most this many
  /// elements; above it (or over an infinite base) the sweep samples
  /// (A, B, basis) triples instead.
  std::uint64_t exhaustive_field_bound = 16;
  std::uint64_t sample_count = 500;
  bool force_exhaustive = false;
  SubspaceMatchOptions subspace;
};

template <FieldDomain F>
struct LmpWitness {
  Subspace<F> a;
  Subspace<F> b;
  OrderedBasis<F> a_basis;
};

template <FieldDomain F>
struct LmpOutcome {
  std::string field;
  bool holds = true;
  Coverage coverage = Coverage::exhaustive;
  std::uint64_t pairs_checked = 0;
  std::uint64_t bases_checked = 0;
  std::optional<LmpWitness<F>> witness;
};

/// Does L have the linear matching property over its base field, at the
/// requested dimensions? Sweeps pairs (A, B) of equal dimension with 1 not in
/// B and asks whether every ordered basis of A is matched to some ordered
/// basis of B. Exhaustive mode enumerates every pair in canonical order and
/// stops at the first witness; sampled mode draws seeded (A, B, basis)
/// triples. The verdict reports which regime produced it.
template <FieldDomain F>
LmpOutcome<F> linear_matching_property_by_search(const std::shared_ptr<const Extension<F>>& L,
                                                 const LmpOptions& opts) {
  require(!opts.dims.empty(), errc::invalid_argument, "no dimensions requested");
  const std::size_t n = L->degree();
  for (std::size_t d : opts.dims)
    require(d >= 1 && d <= n, errc::dimension_mismatch,
            "dimension " + std::to_string(d) + " out of range for degree " + std::to_string(n));

  bool exhaustive = false;
  if constexpr (F::is_finite) {
    std::uint64_t size = 1;
    bool small = true;
    const std::uint64_t q = L->base().size();
    for (std::size_t i = 0; i < n && small; ++i) {
      if (size > opts.exhaustive_field_bound / q) small = false;
      else size *= q;
    }
    exhaustive = small && size <= opts.exhaustive_field_bound;
  }
  if (opts.force_exhaustive) {
    require(exhaustive, errc::bound_exceeded,
            "exhaustive sweep requested beyond the configured field bound");
  }

  LmpOutcome<F> out;
  out.field = L->describe();
  SubspaceMatchOptions sub = opts.subspace;
  sub.seed = opts.seed;

  if (exhaustive) {
    if constexpr (F::is_finite) {
      out.coverage = Coverage::exhaustive;
      for (std::size_t d : opts.dims) {
        if (d == n) continue;  // B would contain 1; no admissible pairs
        std::vector<Subspace<F>> spaces = all_subspaces(L, d);
        for (const auto& A : spaces) {
          for (const auto& B : spaces) {
            if (B.contains_one()) continue;
            SubspaceMatchResult<F> r = is_matched_subspace(A, B, sub);
            ++out.pairs_checked;
            out.bases_checked += r.bases_checked;
            require(r.coverage == Coverage::exhaustive, errc::internal,
                    "pair sweep unexpectedly fell back to sampling");
            if (!r.matched) {
              out.holds = false;
              out.witness = LmpWitness<F>{A, B, std::move(*r.unmatched_basis)};
              return out;
            }
          }
        }
      }
      return out;
    }
  }

  out.coverage = Coverage::sampled;
  Rng rng(opts.seed);
  std::vector<std::size_t> usable;
  for (std::size_t d : opts.dims)
    if (d < n) usable.push_back(d);
  require(!usable.empty(), errc::invalid_argument,
          "no dimension below the degree: every B would contain 1");
  for (std::uint64_t t = 0; t < opts.sample_count; ++t) {
    std::size_t d = usable[t % usable.size()];
    Subspace<F> A = random_subspace(L, d, rng);
    Subspace<F> B = random_subspace(L, d, rng);
    while (B.contains_one()) B = random_subspace(L, d, rng);
    OrderedBasis<F> basis = random_basis(A, rng);
    ++out.pairs_checked;
    ++out.bases_checked;
    if (!find_matched_basis(basis, B, sub.match)) {
      out.holds = false;
      out.witness = LmpWitness<F>{A, B, std::move(basis)};
      return out;
    }
  }
  return out;
}

/// The minimal-property witness: L = base[x]/(f) for irreducible f of prime
/// degree. Prime degree leaves no room for a proper intermediate extension,
/// which is exactly what the matched-basis searches then confirm empirically.
template <FieldDomain F>
std::shared_ptr<const Extension<F>> minimal_lmp_witness(const F& base,
                                                        const Poly<typename F::Scalar>& f) {
  require(!f.is_zero() && f.degree() >= 1, errc::zero_polynomial, "witness modulus is constant");
  require(poly_is_irreducible(base, f), errc::not_irreducible,
          poly_text(f) + " is reducible over " + base.describe());
  require(is_prime_u64(static_cast<std::uint64_t>(f.degree())), errc::not_prime_degree,
          "degree " + std::to_string(f.degree()) + " is not prime");
  return Extension<F>::make(base, make_monic(f));
}

/// Tower presentation of GF(p^n) as an extension of its degree-m0 subfield:
/// K = GF(p^m0) by the canonical irreducible, L = K[y]/(g) with g the
/// canonical irreducible of degree n/m0 over K. Isomorphic to the flat field
/// (finite fields of equal cardinality are isomorphic), which is what makes
/// relative sweeps over K legitimate.
struct TowerField {
  std::shared_ptr<const Extension<ExtensionField<PrimeField>>> field;
  PrimeExtensionPtr base_field;  // K as a prime-field extension
};

inline TowerField make_tower(std::uint64_t p, std::size_t m0, std::size_t rel_degree) {
  PrimeField gf(p);
  auto K = Extension<PrimeField>::make(gf, find_irreducible(gf, m0));
  ExtensionField<PrimeField> Kf{K};
  auto L = Extension<ExtensionField<PrimeField>>::make(Kf, find_irreducible(Kf, rel_degree));
  return TowerField{L, K};
}

using RelativeLmpOutcome =
    std::variant<LmpOutcome<PrimeField>, LmpOutcome<ExtensionField<PrimeField>>>;

inline bool relative_lmp_holds(const RelativeLmpOutcome& o) {
  return std::visit([](const auto& out) { return out.holds; }, o);
}
inline Coverage relative_lmp_coverage(const RelativeLmpOutcome& o) {
  return std::visit([](const auto& out) { return out.coverage; }, o);
}
inline std::uint64_t relative_lmp_pairs(const RelativeLmpOutcome& o) {
  return std::visit([](const auto& out) { return out.pairs_checked; }, o);
}

/// The property of GF(p^n) over its degree-m0 subfield. The descriptor must
/// describe a subfield of the given flat field; degree m0 = 1 sweeps the flat
/// field directly, larger m0 sweeps the isomorphic tower GF(p^m0)[y]/(g).
inline RelativeLmpOutcome linear_matching_property_by_search(const PrimeExtensionPtr& flat,
                                                             const SubfieldBasis& base,
                                                             const LmpOptions& opts) {
  const std::size_t m0 = base.sub_degree;
  SubfieldBasis canonical = subfield_basis(flat, m0);
  require(mat_eq(canonical.rref, base.rref), errc::context_mismatch,
          "subfield descriptor does not belong to this field");
  if (m0 == 1) return linear_matching_property_by_search(flat, opts);
  return linear_matching_property_by_search(
      make_tower(flat->base().p, m0, flat->degree() / m0).field, opts);
}

}  // namespace linmatch

#pragma once

#include <span>
#include <vector>

#include "cgs/ideal.hpp"

namespace cgs {

// J ∩ K[A] for a block elimination ordering: the pure-parameter part of the
// reduced basis of j is the reduced basis of the intersection. The result
// handle lives in the same ring and carries its basis.
IdealHandle intersect_with_params(const IdealHandle& j, Stats* stats = nullptr);

// Minimal generating set of the monomial ideal spanned by pps (divisibility
// antichain), deduplicated, sorted decreasing under ord.
std::vector<PowerProduct> minimal_monomial_basis(std::span<const PowerProduct> pps,
                                                 const TermOrdering& ord);

// small ⊆ big, tested by reducing each generator of small against the
// reduced basis of big. Books one contains_check.
bool ideal_contains(const IdealHandle& big, const IdealHandle& small, Stats* stats = nullptr);

// f ∈ √a (Rabinowitsch: a + <1 - t*f> is unit in the ring extended by a
// fresh indeterminate t).
bool in_radical(const Polynomial& f, const IdealHandle& a);

// Z(a) \ Z(g) ≠ ∅ over the algebraic closure, i.e. not every generator of g
// lies in √a. Books one emptiness_check.
bool difference_nonempty(const IdealHandle& a, const IdealHandle& g, Stats* stats = nullptr);

// Monic gcd via <t*f, (1-t)*g> ∩ K[...] = <lcm(f, g)> and exact division.
Polynomial gcd_poly(const Polynomial& f, const Polynomial& g);

// f / gcd(f, all first partials), monic. Same irreducible factors as f,
// each with multiplicity one. f must be nonzero.
Polynomial squarefree_part(const Polynomial& f);

// Krull dimension of K[A]/a for an ideal generated in K[A], computed from
// the reduced basis leading power products: the largest set of parameters
// supporting no leading power product. Zero ideal: N_A. Unit ideal: -1.
int dimension(const IdealHandle& a, Stats* stats = nullptr);

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

// Keep the inclusion-minimal ideals; an ideal is dropped when it strictly
// contains another member, or equals an earlier one. Input order preserved.
std::vector<IdealHandle> minimalize(std::vector<IdealHandle> ideals, Stats* stats = nullptr);

// Replace each generator by its squarefree part (same vanishing locus).
// Returns the original handle when nothing changes. Books one sqfr per
// nonzero generator.
IdealHandle squarefree_normalize(const IdealHandle& a, Stats* stats = nullptr);

}  // namespace cgs

#pragma once

#include <span>
#include <vector>

#include "cgs/polynomial.hpp"

namespace cgs {

// Remainder of f under multivariate division by basis, fully tail-reduced:
// no monomial of the result is divisible by any basis leading power product.
// Zero basis elements are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrdering& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ord);

// Unique reduced Groebner basis: monic, pairwise reduced, sorted by
// increasing leading power product. Zero generators are dropped; the zero
// ideal yields {} and the unit ideal yields {1}.
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens,
                                               const TermOrdering& ord);

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrdering& ord);

// f / g for exact division; throws usage_error when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const TermOrdering& ord);

}  // namespace cgs

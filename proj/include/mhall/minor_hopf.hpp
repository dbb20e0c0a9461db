#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mhall/catalog.hpp"
#include "mhall/hall.hpp"
#include "mhall/linear.hpp"

namespace mhall {

// The matroid-minor Hopf algebra on isomorphism classes: product is the
// direct sum, coproduct sums restriction (x) contraction over all subsets.
// Same value type as the Hall algebra; dual algebra role.

IsoLin mm_product(const IsoLin& x, const IsoLin& y);

// Delta[M] = sum over S of [M|S] (x) [M/S]. Needs no catalog: only minors of
// the support classes appear.
TensorLin mm_coproduct(const IsoLin& x);

// Coefficient of the zero class (the only degree-0 class).
Coeff mm_counit(const IsoLin& x);

// The unique antipode of the graded connected bialgebra, computed by the
// alternating truncated-coproduct formula; exact at any degree.
IsoLin antipode(const IsoLin& x);
IsoLin antipode(const IsoClass& c);

// Hall structure constants against transposed coproduct coefficients:
// g^B_{A,C} must match the coefficient of [C] (x) [A] in Delta[B] for every
// degree-compatible catalog pair (A, C).
bool duality_check(const IsoClass& b, const Catalog& cat);

// Membership predicates for minor- and sum-closed families.
using ClassPredicate = std::function<bool(const IsoClass&)>;

// Realizability as the cycle matroid of a multigraph, decided per connected
// component by searching edge multisets on rank+1 vertices. Memoized.
bool is_graphic(const IsoClass& c);

// True iff every class in the support satisfies the predicate.
bool supported_in(const IsoLin& x, const ClassPredicate& family);
bool supported_in(const TensorLin& t, const ClassPredicate& family);

// Hall product computed inside the full subcategory cut out by the family
// (the candidate-extension sum is filtered by the predicate).
IsoLin hall_product_in_family(const IsoLin& f, const IsoLin& g, const Catalog& cat,
                              const ClassPredicate& family);

}  // namespace mhall

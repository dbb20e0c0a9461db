#pragma once

#include <string>
#include <vector>

#include "mhall/catalog.hpp"
#include "mhall/linear.hpp"

namespace mhall {

// Grading by rank and corank; both components add along extensions.
struct Degree {
  int rank = 0;
  int corank = 0;
  int total() const { return rank + corank; }
  friend bool operator==(const Degree&, const Degree&) = default;
};
Degree degree_of(const IsoClass& c);

// The indecomposable summands of a class, sorted.
std::vector<IsoClass> class_components(const IsoClass& c);
// Class of the direct sum of a multiset of classes.
IsoClass class_sum(const std::vector<IsoClass>& parts);

IsoLin delta(const PointedMatroid& m);
IsoLin delta(const IsoClass& c);

// Number of subsets S of the non-basepoint elements of B with B|S in class c
// and B/S in class a.
long structure_constant(const IsoClass& a, const IsoClass& c, const IsoClass& b);

// Automorphism-weighted extension count g * |Aut a| * |Aut c|; the
// convolution convention that counts sequences instead of subobjects.
long extension_count(const IsoClass& a, const IsoClass& c, const IsoClass& b);

// All (contraction class, restriction class) splitting counts of B at once;
// the values sum to 2^degree(B).
std::map<IsoPair, long> splitting_counts(const IsoClass& b);

// Convolution product. Support is assembled degree by degree from the
// catalog; degrees beyond the catalog bound fail loudly.
IsoLin hall_product(const IsoLin& f, const IsoLin& g, const Catalog& cat);

// Componentwise coproduct: Delta(f)([A],[B]) = f([A (+) B]).
TensorLin hall_coproduct(const IsoLin& f);

// Coefficient of the zero class.
Coeff hall_counit(const IsoLin& f);

// Tensor-leg product: (a (x) b) * (c (x) d) = (a*c) (x) (b*d).
TensorLin tensor_product(const TensorLin& u, const TensorLin& v, const Catalog& cat);

// Connected classes per degree, 1..n.
std::vector<IsoClass> primitives_upto(int n, const Catalog& cat);

struct HopfReport {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

// Associativity, unit laws, coassociativity, counit laws, cocommutativity
// and product/coproduct compatibility over all basis elements of total
// degree <= nmax.
HopfReport check_hopf(int nmax, const Catalog& cat);

}  // namespace mhall

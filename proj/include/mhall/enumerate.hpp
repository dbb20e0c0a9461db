#pragma once

#include <vector>

#include "mhall/canonical.hpp"
#include "mhall/matroid.hpp"

namespace mhall {

struct EnumerateOptions {
  int bound = 6;          // hard ceiling on the degree
  bool parallel = false;  // fan extension work out over a thread pool
};

// All single-element extensions of m (one new non-basepoint element), one
// per modular cut of the flat lattice. Contains every extension up to
// isomorphism, with repetitions.
std::vector<PointedMatroid> single_element_extensions(const PointedMatroid& m);

// Isomorphism classes of pointed matroids with exactly n non-basepoint
// elements, sorted by canonical form. Deterministic, also under the
// parallel option.
std::vector<IsoClass> enumerate_matroids(int n, const EnumerateOptions& opts = {});

}  // namespace mhall

#pragma once

#include <string>
#include <vector>

#include "mhall/matroid.hpp"

namespace mhall {

// An embedded submodule of the free Boolean module on a pointed ground set:
// vectors are subsets of coordinates, addition is coordinatewise join. The
// element list is the full join closure of the generators, zero included.
struct BSubmodule {
  GroundSet ambient;
  std::vector<Mask> generators;
  std::vector<Mask> elements;  // sorted, deduplicated

  bool contains(Mask v) const;
  bool operator==(const BSubmodule& other) const {
    return ambient == other.ambient && elements == other.elements;
  }
};

// Join closure of the generators. Generator count is capped to keep the
// element list materializable.
BSubmodule span(GroundSet ambient, std::vector<Mask> generators);

// The submodule generated by the cocircuit support vectors of m, inside the
// Boolean module on the full pointed ground set.
BSubmodule cocircuit_span(const PointedMatroid& m);

// Coordinatewise projection onto the coordinates of keep (which must contain
// the basepoint); the ambient shrinks to those coordinates.
BSubmodule project(const BSubmodule& lm, Mask keep);

// Elements vanishing on all coordinates of s, re-ambiented to the complement.
BSubmodule coordinate_section(const BSubmodule& lm, Mask s);

// The dual criterion for f : E_N -> E_M (positions) to be a strong map
// N -> M: every pullback of an element of L_M lands in L_N.
bool dual_strong_check(const std::vector<int>& f, const PointedMatroid& n,
                       const PointedMatroid& m);

// Both halves of the minor correspondence for S inside the non-basepoint
// elements: restriction matches projection, contraction matches the
// coordinate section.
bool verify_minor_correspondence(const PointedMatroid& m, Mask s);

// One element per line as a 0/1 string in ground order.
std::string dump(const BSubmodule& lm);

}  // namespace mhall

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mhall/matroid.hpp"

namespace mhall {

// Canonical representative of a pointed isomorphism class: the
// lexicographically least flat list over all basepoint-fixing relabelings.
// Two pointed matroids are isomorphic iff their IsoClasses are equal.
struct IsoClass {
  int degree = 0;
  int rank = 0;
  std::vector<Mask> flats;

  int corank() const { return degree - rank; }

  friend bool operator==(const IsoClass& a, const IsoClass& b) {
    return a.degree == b.degree && a.flats == b.flats;
  }
  friend std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.flats <=> b.flats;
  }
};

struct IsoClassHash {
  std::size_t operator()(const IsoClass& c) const;
};

// Memoized; pure function of the flat structure (labels are ignored).
IsoClass canonical_form(const PointedMatroid& m);

// A permutation of ground positions (index 0 fixed) carrying m onto the
// flat list of canonical_form(m): new_position = perm[old_position].
std::vector<int> canonical_permutation(const PointedMatroid& m);

// Basepoint-fixing bijection a -> b (as a position map) witnessing
// isomorphism, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const PointedMatroid& a,
                                                 const PointedMatroid& b);

// Number of basepoint-fixing relabelings preserving the flat family.
long automorphism_count(const PointedMatroid& m);

// The canonical matroid of a class, with numbered labels.
PointedMatroid matroid_of(const IsoClass& c);

// Flat list as fixed-width hex (5 digits per flat, ascending); the ground
// mask is recoverable as the largest flat, so the string is self-contained.
std::string canon_hex(const IsoClass& c);
IsoClass parse_canon_hex(const std::string& hex);

// Remaps every flat through a position permutation and sorts the result.
std::vector<Mask> remap_flats(const std::vector<Mask>& flats, const std::vector<int>& perm);

}  // namespace mhall

#pragma once

#include <string>
#include <vector>

#include "mhall/bits.hpp"
#include "mhall/errors.hpp"
#include "mhall/ground.hpp"

namespace mhall {

// A pointed matroid, represented by its full flat list over a pointed ground
// set. Every flat contains the basepoint (bit 0), the ground set is a flat,
// and the family is closed under intersection. Values are immutable after
// construction; all operations below are pure.
class PointedMatroid {
 public:
  // Validates the flat family: basepoint membership, ground flat,
  // intersection closure, and the exchange property of the induced closure.
  static PointedMatroid from_flats(GroundSet ground, std::vector<Mask> flats);

  // Construction bypass for operations whose output is a matroid by
  // construction (minors, sums, enumeration). Flats are normalized here but
  // not re-validated.
  static PointedMatroid unchecked(GroundSet ground, std::vector<Mask> flats);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& flats() const { return flats_; }
  int degree() const { return ground_.degree(); }  // |E~|
  Mask full() const { return ground_.full(); }
  Mask tilde() const { return ground_.full() & ~kBasepointBit; }

  bool is_flat(Mask s) const;

  // Smallest flat containing S.
  Mask closure(Mask s) const;

  int rank() const { return rank_; }
  int rank_of(Mask s) const;

  // Elements of sigma(emptyset), basepoint included.
  Mask loops() const { return loops_; }
  bool is_loop(int i) const { return has_bit(loops_, i); }

  // Maximal proper flats.
  std::vector<Mask> hyperplanes() const;
  // Complements of the hyperplanes; never contain the basepoint.
  std::vector<Mask> cocircuits() const;

  // Minor operations. S must be a subset of the non-basepoint elements.
  PointedMatroid restrict_to(Mask s) const;   // matroid on S + basepoint
  PointedMatroid contract_by(Mask s) const;   // matroid on E \ S

  bool operator==(const PointedMatroid&) const = default;

 private:
  PointedMatroid(GroundSet ground, std::vector<Mask> flats);

  GroundSet ground_;
  std::vector<Mask> flats_;  // sorted ascending, deduplicated
  Mask loops_ = kBasepointBit;
  int rank_ = 0;
};

// ({*}, {{*}}): the zero object and the unit for direct sums.
PointedMatroid zero_matroid();

// Disjoint union with basepoints identified; colliding labels of the right
// summand are primed until fresh. Flats are all unions F1 | F2.
PointedMatroid direct_sum(const PointedMatroid& m, const PointedMatroid& n);

// The finest decomposition into indecomposable (connected) summands, as
// restrictions of M; loops come out as singleton summands. Empty for the
// zero matroid. Ordered by lowest ground-set position.
std::vector<PointedMatroid> components(const PointedMatroid& m);

// Pointed uniform matroid on n elements of rank r: flats are the pointed
// subsets of size < r together with the full set.
PointedMatroid uniform(int r, int n);

// Every pointed subset is a flat; rank = degree.
PointedMatroid free_matroid(const GroundSet& ground);

// Basis-family input over labels (basepoint excluded); the basepoint is
// added as a loop. Validates nonemptiness, equicardinality and exchange.
PointedMatroid from_bases(const GroundSet& ground, const std::vector<Mask>& bases);

// A multigraph with a distinguished loop edge; edges become the ground set
// with the distinguished loop as basepoint. The closure of S is the set of
// edges whose endpoints are joined by a path inside S.
struct Graph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string name;
    std::string from;
    std::string to;
  };
  std::vector<Edge> edges;
  std::string distinguished_loop;
};
PointedMatroid from_graph(const Graph& g);

}  // namespace mhall

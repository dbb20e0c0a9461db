#pragma once

#include <array>
#include <string>
#include <vector>

#include "mhall/canonical.hpp"
#include "mhall/matroid.hpp"

namespace mhall {

// A pointed function on ground sets whose flat preimages are flats.
class StrongMap {
 public:
  // Validates basepoint preservation and the flat-preimage property.
  static StrongMap check(PointedMatroid source, PointedMatroid target, std::vector<int> map);

  static StrongMap identity(const PointedMatroid& m);
  // Canonical inclusion M|S -> M (S a subset of the non-basepoint elements).
  static StrongMap inclusion(const PointedMatroid& m, Mask s);
  // Canonical contraction M -> M/S (S collapses to the basepoint).
  static StrongMap contraction(const PointedMatroid& m, Mask s);
  static StrongMap from_zero(const PointedMatroid& m);
  static StrongMap to_zero(const PointedMatroid& m);

  const PointedMatroid& source() const { return source_; }
  const PointedMatroid& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int i) const { return map_[i]; }

  Mask image(Mask s) const;
  Mask preimage(Mask t) const;
  Mask image_mask() const { return image(source_.full()); }
  bool injective() const;
  bool surjective() const;

  bool operator==(const StrongMap&) const = default;

 private:
  StrongMap(PointedMatroid source, PointedMatroid target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  PointedMatroid source_;
  PointedMatroid target_;
  std::vector<int> map_;
};

StrongMap compose(const StrongMap& g, const StrongMap& f);  // g after f

// True iff the map is pointed and strong; no exception on failure.
bool is_strong(const PointedMatroid& source, const PointedMatroid& target,
               const std::vector<int>& map);

// Every strong map source -> target, in lexicographic order of the
// underlying function; exhaustive, so exponential in the source degree.
std::vector<StrongMap> all_strong_maps(const PointedMatroid& source,
                                       const PointedMatroid& target);

// Every basepoint-fixing position bijection a -> b carrying flats onto flats.
std::vector<std::vector<int>> all_isomorphisms(const PointedMatroid& a,
                                               const PointedMatroid& b);

enum class MorphTag { Iso, AdmissibleMono, AdmissibleEpi, Mono, Epi, General };

struct MorphismClass {
  MorphTag tag = MorphTag::General;
  // AdmissibleMono: S with source ~ target|S (subset of the target ground).
  // AdmissibleEpi: S with source/S ~ target (subset of the source ground).
  Mask witness = 0;
};

MorphismClass classify(const StrongMap& f);
bool admissible_mono(const MorphismClass& c);
bool admissible_epi(const MorphismClass& c);
const char* to_string(MorphTag tag);

// The admissible extension determined by S: B|S >-> B ->> B/S.
struct ExactSequence {
  Mask sub;
  PointedMatroid total;
  PointedMatroid left;
  PointedMatroid right;
  StrongMap incl;
  StrongMap proj;
};
std::vector<ExactSequence> exact_sequences(const PointedMatroid& b);

// Commuting square with monos across and epis down:
//   tl --top---> tr
//   left|        |right
//   v            v
//   bl --bottom-> br
struct Square {
  StrongMap top, bottom, left, right;
  const PointedMatroid& tl() const { return top.source(); }
  const PointedMatroid& tr() const { return top.target(); }
  const PointedMatroid& bl() const { return bottom.source(); }
  const PointedMatroid& br() const { return bottom.target(); }
};

struct SquareChecks {
  bool endpoints = false;       // arrows share corners
  bool commutes = false;
  bool classes = false;         // monos across, epis down
  bool set_cartesian = false;   // pullback of pointed sets
  bool set_cocartesian = false; // pushout of pointed sets
  bool all() const { return endpoints && commutes && classes && set_cartesian && set_cocartesian; }
};
SquareChecks check_square(const Square& sq);

// Universal properties inside the category itself, quantified over the given
// trial objects (every strong map from/to them is enumerated).
bool universally_cartesian(const Square& sq, const std::vector<PointedMatroid>& trials);
bool universally_cocartesian(const Square& sq, const std::vector<PointedMatroid>& trials);

// Completion of P >-> Q <<- N to a biCartesian square with corner N|A,
// A the preimage of the mono's image.
Square complete_pullback(const StrongMap& bottom_mono, const StrongMap& right_epi);
// Completion of P <<- M >-> N to a biCartesian square with corner N/fT.
Square complete_pushout(const StrongMap& left_epi, const StrongMap& top_mono);

// The restriction/contraction square of M for T inside S (basepoint in S\T).
Square lemma_square(const PointedMatroid& m, Mask s_with_basepoint, Mask t);

struct ProtoExactReport {
  struct Property {
    long instances = 0;
    long failures = 0;
  };
  std::array<Property, 6> property{};  // indices 1..5 used
  std::vector<std::string> failure_notes;
  bool ok() const;
  std::string lines() const;  // "PROP<k> <instances> <failures>" per property
};

struct VerifyOptions {
  // Apply the in-category universal-property check to squares whose corners
  // all have degree <= this bound (-1 disables it).
  int universal_max_degree = -1;
};

// Checks Properties 1-5 over all diagram instances drawn from the catalog's
// minors, including isomorphism twists of the canonical arrows.
ProtoExactReport verify_proto_exact(const std::vector<PointedMatroid>& catalog,
                                    const VerifyOptions& opts = {});

}  // namespace mhall

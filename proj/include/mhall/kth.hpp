#pragma once

#include <string>
#include <vector>

#include "mhall/category.hpp"
#include "mhall/matroid.hpp"

namespace mhall {

// Image of a class in the Grothendieck group: (rank, corank) over the
// non-basepoint elements, so the zero object lands on (0, 0).
struct K0Class {
  long rank = 0;
  long corank = 0;
  friend K0Class operator+(K0Class a, K0Class b) {
    return K0Class{a.rank + b.rank, a.corank + b.corank};
  }
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

K0Class k0_class(const PointedMatroid& m);

// Word in {a, b} obtained by peeling one element at a time through the
// extension M|e >-> M ->> M/e: 'a' for a non-loop, 'b' for a loop of the
// current matroid. The letter multiset realizes k0_class.
std::string decompose(const PointedMatroid& m);

// A chain of subsets of the non-basepoint elements with the full grid of
// minors A(i, j) = (base|S_j)/S_i materialized; A(i, i) is the zero object.
class FlagGrid {
 public:
  FlagGrid(PointedMatroid base, std::vector<Mask> chain);

  const PointedMatroid& base() const { return base_; }
  const std::vector<Mask>& chain() const { return chain_; }
  int length() const { return static_cast<int>(chain_.size()); }
  const PointedMatroid& at(int i, int j) const;  // 0 <= i <= j <= length

  bool operator==(const FlagGrid& other) const {
    return base_ == other.base_ && chain_ == other.chain_;
  }

 private:
  PointedMatroid base_;
  std::vector<Mask> chain_;
  std::vector<std::vector<PointedMatroid>> grid_;
};

// Every chain of n nested subsets; count is (n+1)^degree.
std::vector<FlagGrid> flags(const PointedMatroid& m, int n);

// Simplicial structure. face(.., 0) re-bases along the contraction by S_1;
// face(.., k) drops S_k; degeneracy duplicates level k.
FlagGrid face(const FlagGrid& f, int k);
FlagGrid degeneracy(const FlagGrid& f, int k);

// Admissibility and biCartesianness of every grid square.
bool check_grid(const FlagGrid& f);

}  // namespace mhall

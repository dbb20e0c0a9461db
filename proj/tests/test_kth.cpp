#include <doctest.h>

#include <algorithm>

#include "mhall/enumerate.hpp"
#include "mhall/kth.hpp"

using namespace mhall;

namespace {

std::vector<PointedMatroid> catalog_upto(int n) {
  std::vector<PointedMatroid> out;
  for (int d = 0; d <= n; ++d) {
    for (const IsoClass& c : enumerate_matroids(d)) out.push_back(matroid_of(c));
  }
  return out;
}

}  // namespace

TEST_CASE("k0 classes") {
  CHECK(k0_class(uniform(1, 1)) == K0Class{1, 0});
  CHECK(k0_class(uniform(0, 1)) == K0Class{0, 1});
  CHECK(k0_class(uniform(2, 3)) == K0Class{2, 1});
  CHECK(k0_class(zero_matroid()) == K0Class{0, 0});
  for (const PointedMatroid& m : catalog_upto(3)) {
    for (const PointedMatroid& n : catalog_upto(2)) {
      CHECK(k0_class(direct_sum(m, n)) == k0_class(m) + k0_class(n));
    }
  }
}

TEST_CASE("k0 is additive along every extension") {
  for (const PointedMatroid& m : catalog_upto(4)) {
    for_each_submask(m.tilde(), [&](Mask s) {
      CHECK(k0_class(m) == k0_class(m.restrict_to(s)) + k0_class(m.contract_by(s)));
    });
  }
}

TEST_CASE("peeling decomposes into the two one-element classes") {
  CHECK(decompose(zero_matroid()).empty());
  CHECK(decompose(direct_sum(uniform(1, 1), uniform(0, 1))) == "ab");
  std::string word = decompose(uniform(2, 3));
  CHECK(word == "aab");
  for (const PointedMatroid& m : catalog_upto(4)) {
    std::string w = decompose(m);
    CHECK(std::count(w.begin(), w.end(), 'a') == k0_class(m).rank);
    CHECK(std::count(w.begin(), w.end(), 'b') == k0_class(m).corank);
  }
}

TEST_CASE("free matroids land on the rank axis") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(k0_class(free_matroid(GroundSet::numbered(n))) == K0Class{n, 0});
  }
}

TEST_CASE("flag counts") {
  for (const PointedMatroid& m : catalog_upto(3)) {
    CHECK(flags(m, 1).size() == (std::size_t{1} << m.degree()));
  }
  CHECK(flags(direct_sum(uniform(1, 1), uniform(0, 1)), 2).size() == 9);
  CHECK(flags(uniform(2, 3), 3).size() == 64);
  CHECK_THROWS_AS(flags(uniform(1, 1), 7), ValidationError);
}

TEST_CASE("grids are made of admissible biCartesian squares") {
  for (const FlagGrid& f : flags(uniform(2, 3), 3)) {
    CHECK(check_grid(f));
    CHECK(f.at(0, 0) == zero_matroid());
    for (int j = 1; j <= 3; ++j) {
      CHECK(canonical_form(f.at(j, j)) == canonical_form(zero_matroid()));
    }
  }
}

TEST_CASE("grid entries are the chain minors") {
  PointedMatroid u23 = uniform(2, 3);
  FlagGrid f(u23, {0b0010, 0b0110, 0b1110});
  CHECK(f.at(0, 3) == u23.restrict_to(0b1110));
  CHECK(canonical_form(f.at(1, 3)) == canonical_form(u23.contract_by(0b0010)));
  CHECK(canonical_form(f.at(0, 1)) == canonical_form(uniform(1, 1)));
  CHECK_THROWS_AS(f.at(2, 1), ValidationError);
  CHECK_THROWS_AS(FlagGrid(u23, {0b0110, 0b0010}), ValidationError);
}

TEST_CASE("face and degeneracy identities") {
  for (const PointedMatroid& m : catalog_upto(2)) {
    for (int n = 1; n <= 3; ++n) {
      for (const FlagGrid& f : flags(m, n)) {
        for (int k = 0; k <= n; ++k) {
          CHECK(face(degeneracy(f, k), k) == f);
          CHECK(face(degeneracy(f, k), k + 1) == f);
        }
        for (int k = 0; n >= 2 && k < n; ++k) {
          for (int j = k; j < n; ++j) {
            CHECK(face(face(f, k), j) == face(face(f, j + 1), k));
          }
        }
        for (int k = 0; k <= n; ++k) {
          for (int j = k + 1; j <= n; ++j) {
            CHECK(degeneracy(degeneracy(f, k), j) == degeneracy(degeneracy(f, j - 1), k));
          }
        }
      }
    }
  }
}

TEST_CASE("the zeroth face re-bases along the first contraction") {
  PointedMatroid u23 = uniform(2, 3);
  FlagGrid full_chain(u23, {0b0010, 0b0110, 0b1110});
  FlagGrid rebased = face(full_chain, 0);
  CHECK(rebased.base() == u23.contract_by(0b0010));
  CHECK(rebased.length() == 2);
  FlagGrid dropped = face(full_chain, 3);
  CHECK(dropped.chain() == std::vector<Mask>{0b0010, 0b0110});
  CHECK_THROWS_AS(face(full_chain, 4), ValidationError);
  CHECK_THROWS_AS(face(FlagGrid(u23, {}), 0), ValidationError);
  CHECK_THROWS_AS(degeneracy(full_chain, 5), ValidationError);
}

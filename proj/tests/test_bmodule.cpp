#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mhall/bmodule.hpp"
#include "mhall/canonical.hpp"
#include "mhall/category.hpp"
#include "mhall/enumerate.hpp"

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

TEST_CASE("span is the join closure") {
  GroundSet g = GroundSet::numbered(2);
  BSubmodule trivial = span(g, {});
  CHECK(trivial.elements == std::vector<Mask>{0});

  BSubmodule s = span(g, {0b011, 0b110});
  CHECK(s.elements == std::vector<Mask>{0b000, 0b011, 0b110, 0b111});

  BSubmodule u23 = cocircuit_span(uniform(2, 3));
  CHECK(u23.elements == std::vector<Mask>{0b0000, 0b0110, 0b1010, 0b1100, 0b1110});
  for (Mask v : u23.elements) CHECK(!has_bit(v, 0));

  CHECK_THROWS_AS(span(g, {0b1000}), ValidationError);
  CHECK_THROWS_AS(span(GroundSet::numbered(16), std::vector<Mask>(21, 0)), ValidationError);
}

TEST_CASE("cocircuit spans of the one-element matroids") {
  CHECK(cocircuit_span(zero_matroid()).elements == std::vector<Mask>{0});
  CHECK(cocircuit_span(uniform(1, 1)).elements == std::vector<Mask>({0b00, 0b10}));
  CHECK(cocircuit_span(uniform(0, 1)).elements == std::vector<Mask>{0});
}

TEST_CASE("projection and coordinate sections") {
  PointedMatroid u23 = uniform(2, 3);
  BSubmodule l = cocircuit_span(u23);

  BSubmodule projected = project(l, 0b0111);
  CHECK(projected == cocircuit_span(u23.restrict_to(0b0110)));
  CHECK(projected.elements.size() == 4);  // all of B^{1,2} with basepoint coordinate 0

  CHECK(project(l, l.ambient.full()) == l);
  BSubmodule zero_mod = span(GroundSet::numbered(2), {});
  CHECK(project(zero_mod, 0b01).elements == std::vector<Mask>{0});

  BSubmodule section = coordinate_section(l, 0b0010);
  CHECK(section == cocircuit_span(u23.contract_by(0b0010)));
  CHECK(coordinate_section(l, 0) == l);
  CHECK(coordinate_section(zero_mod, 0b010).elements == std::vector<Mask>{0});

  CHECK_THROWS_AS(project(l, 0b10000), ValidationError);
  CHECK_THROWS_AS(coordinate_section(l, kBasepointBit), ValidationError);
}

TEST_CASE("dump prints one vector per line in ground order") {
  CHECK(dump(cocircuit_span(uniform(1, 1))) == "00\n01\n");
}

TEST_CASE("dual criterion agrees with the strong-map check") {
  PointedMatroid u12 = uniform(1, 2);
  PointedMatroid aa = direct_sum(uniform(1, 1), uniform(1, 1));
  std::vector<int> identity{0, 1, 2};
  CHECK(dual_strong_check(identity, u12, u12));
  CHECK(!dual_strong_check(identity, u12, aa));
  CHECK(is_strong(u12, u12, identity));
  CHECK(!is_strong(u12, aa, identity));

  // canonical inclusions pass
  PointedMatroid u23 = uniform(2, 3);
  StrongMap incl = StrongMap::inclusion(u23, 0b0110);
  CHECK(dual_strong_check(incl.map(), incl.source(), u23));

  // exhaustive agreement at small degree
  for (const PointedMatroid& n : catalog_upto(3)) {
    for (const PointedMatroid& m : catalog_upto(3)) {
      std::vector<int> f(n.ground().size(), 0);
      while (true) {
        CHECK(dual_strong_check(f, n, m) == is_strong(n, m, f));
        int i = static_cast<int>(f.size()) - 1;
        while (i >= 1 && f[i] == m.ground().size() - 1) f[i--] = 0;
        if (i == 0) break;
        ++f[i];
      }
    }
  }
}

TEST_CASE("pullback along a composite is the composite of pullbacks") {
  PointedMatroid u23 = uniform(2, 3);
  for (const PointedMatroid& x : catalog_upto(2)) {
    for (const StrongMap& f : all_strong_maps(x, u23)) {
      for (const StrongMap& g : all_strong_maps(u23, x)) {
        StrongMap gf = compose(g, f);
        for (Mask v : cocircuit_span(x).elements) {
          Mask direct = 0, staged_mid = 0, staged = 0;
          for (int j = 0; j < u23.ground().size(); ++j) {
            if (has_bit(v, g(j))) staged_mid = with_bit(staged_mid, j);
          }
          for (int j = 0; j < x.ground().size(); ++j) {
            if (has_bit(v, gf(j))) direct = with_bit(direct, j);
            if (has_bit(staged_mid, f(j))) staged = with_bit(staged, j);
          }
          CHECK(direct == staged);
        }
        CHECK(dual_strong_check(gf.map(), x, x));
      }
    }
  }
}

TEST_CASE("minor correspondence holds exhaustively at small degree") {
  for (const PointedMatroid& m : catalog_upto(4)) {
    for_each_submask(m.tilde(), [&](Mask s) { CHECK(verify_minor_correspondence(m, s)); });
  }
  PointedMatroid u23 = uniform(2, 3);
  CHECK(verify_minor_correspondence(u23, 0));
  CHECK(verify_minor_correspondence(u23, u23.tilde()));
}

TEST_CASE("embedded modules separate non-isomorphic matroids") {
  auto classes = catalog_upto(5);
  for (const PointedMatroid& m : classes) {
    for (const PointedMatroid& n : classes) {
      if (m.degree() != n.degree() || canonical_form(m) == canonical_form(n)) continue;
      const BSubmodule lm = cocircuit_span(m);
      const BSubmodule ln = cocircuit_span(n);
      bool related = false;
      std::vector<int> image(m.degree());
      std::iota(image.begin(), image.end(), 1);
      do {
        std::vector<Mask> mapped;
        for (Mask v : lm.elements) {
          Mask w = 0;
          for (int i = 1; i <= m.degree(); ++i) {
            if (has_bit(v, i)) w = with_bit(w, image[i - 1]);
          }
          mapped.push_back(w);
        }
        std::sort(mapped.begin(), mapped.end());
        related = related || mapped == ln.elements;
      } while (!related && std::next_permutation(image.begin(), image.end()));
      CHECK(!related);
    }
  }
}

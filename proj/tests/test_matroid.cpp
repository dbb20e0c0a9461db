#include <doctest.h>

#include <random>
#include <set>

#include "mhall/canonical.hpp"
#include "mhall/enumerate.hpp"
#include "mhall/matroid.hpp"
#include "oracle.hpp"

using namespace mhall;

namespace {

PointedMatroid a() { return uniform(1, 1); }
PointedMatroid b() { return uniform(0, 1); }

std::vector<PointedMatroid> catalog_upto(int n) {
  std::vector<PointedMatroid> out;
  for (int d = 0; d <= n; ++d) {
    for (const IsoClass& c : enumerate_matroids(d)) out.push_back(matroid_of(c));
  }
  return out;
}

bool iso(const PointedMatroid& x, const PointedMatroid& y) {
  return canonical_form(x) == canonical_form(y);
}

}  // namespace

TEST_CASE("from_flats validates the one-element matroids") {
  PointedMatroid ma = PointedMatroid::from_flats(GroundSet::numbered(1), {0b01, 0b11});
  CHECK(ma == a());
  CHECK(ma.rank() == 1);
  PointedMatroid mb = PointedMatroid::from_flats(GroundSet::numbered(1), {0b11});
  CHECK(mb == b());
  CHECK(mb.rank() == 0);
}

TEST_CASE("from_flats rejects bad families") {
  CHECK_THROWS_WITH_AS(PointedMatroid::from_flats(GroundSet::numbered(2), {0b001, 0b011}),
                       doctest::Contains("ground"),
                       ValidationError);
  CHECK_THROWS_AS(PointedMatroid::from_flats(GroundSet::numbered(1), {0b10, 0b11}),
                  ValidationError);
  // pairwise intersection {*,1} missing
  CHECK_THROWS_AS(
      PointedMatroid::from_flats(GroundSet::numbered(3), {0b0001, 0b0111, 0b1011, 0b1111}),
      ValidationError);
  // {*,1} sits strictly between {*} and the closure of {*,2}
  try {
    PointedMatroid::from_flats(GroundSet::numbered(3), {0b0001, 0b0011, 0b1111});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::ExchangeAxiomViolated);
    CHECK(std::string(e.what()).find("x=") != std::string::npos);
    CHECK(std::string(e.what()).find("y=") != std::string::npos);
  }
}

TEST_CASE("from_bases matches the independent closure oracle") {
  GroundSet g2 = GroundSet::numbered(2);
  PointedMatroid u12 = from_bases(g2, {0b010, 0b100});
  CHECK(u12 == uniform(1, 2));
  PointedMatroid free2 = from_bases(g2, {0b110});
  CHECK(iso(free2, direct_sum(a(), a())));
  PointedMatroid loop = from_bases(GroundSet::numbered(1), {0});
  CHECK(loop == b());

  // cryptomorphism round trip against the oracle on every small class
  for (const PointedMatroid& m : catalog_upto(4)) {
    std::vector<Mask> bases;
    for_each_submask(m.tilde(), [&](Mask s) {
      if (popcount(s) == m.rank() && m.rank_of(s) == m.rank()) bases.push_back(s);
    });
    std::vector<Mask> shifted;
    for (Mask basis : bases) shifted.push_back(basis >> 1);
    std::vector<Mask> expected;
    for (Mask f : oracle::flats_from_bases(m.degree(), shifted)) {
      expected.push_back((f << 1) | kBasepointBit);
    }
    CHECK(from_bases(m.ground(), bases).flats() == expected);
    CHECK(from_bases(m.ground(), bases) == m);
  }

  CHECK_THROWS_AS(from_bases(g2, {}), ValidationError);
  CHECK_THROWS_AS(from_bases(g2, {0b010, 0b110}), ValidationError);  // not equicardinal
}

TEST_CASE("from_graph computes path closures") {
  Graph triangle;
  triangle.vertices = {"u", "v", "w"};
  triangle.edges = {{"e0", "u", "u"}, {"1", "u", "v"}, {"2", "v", "w"}, {"3", "w", "u"}};
  triangle.distinguished_loop = "e0";
  CHECK(iso(from_graph(triangle), uniform(2, 3)));

  Graph parallel;
  parallel.vertices = {"u", "v"};
  parallel.edges = {{"e0", "u", "u"}, {"1", "u", "v"}, {"2", "u", "v"}};
  parallel.distinguished_loop = "e0";
  CHECK(iso(from_graph(parallel), uniform(1, 2)));

  Graph lonely;
  lonely.vertices = {"u"};
  lonely.edges = {{"e0", "u", "u"}};
  lonely.distinguished_loop = "e0";
  CHECK(from_graph(lonely) == zero_matroid());

  Graph missing = triangle;
  missing.distinguished_loop = "nope";
  CHECK_THROWS_AS(from_graph(missing), ValidationError);
  Graph dangling = triangle;
  dangling.edges.push_back({"4", "w", "x"});
  CHECK_THROWS_AS(from_graph(dangling), ValidationError);
  Graph notloop = triangle;
  notloop.distinguished_loop = "1";
  CHECK_THROWS_AS(from_graph(notloop), ValidationError);
}

TEST_CASE("uniform and free matroids") {
  CHECK(uniform(1, 1) == a());
  CHECK(uniform(0, 1) == b());
  PointedMatroid u23 = uniform(2, 3);
  CHECK(u23.rank() == 2);
  CHECK(u23.flats().size() == 5);
  // same family accepted by the validating constructor
  CHECK(PointedMatroid::from_flats(u23.ground(), u23.flats()) == u23);
  CHECK_THROWS_AS(uniform(2, 1), ValidationError);

  CHECK(free_matroid(GroundSet()) == zero_matroid());
  CHECK(free_matroid(GroundSet::numbered(1)) == a());
  CHECK(iso(free_matroid(GroundSet::numbered(2)), direct_sum(a(), a())));
  CHECK(free_matroid(GroundSet::numbered(3)).rank() == 3);
}

TEST_CASE("closure and rank") {
  PointedMatroid aa = direct_sum(a(), a());
  CHECK(aa.closure(0b010) == 0b011);
  PointedMatroid u23 = uniform(2, 3);
  CHECK(u23.closure(0b0110) == u23.full());
  CHECK(a().rank() == 1);
  CHECK(b().rank() == 0);
  CHECK(u23.rank_of(kBasepointBit) == 0);
  for (const PointedMatroid& m : catalog_upto(4)) {
    CHECK(m.closure(m.full()) == m.full());
    CHECK(m.rank_of(kBasepointBit) == 0);
  }
  CHECK_THROWS_AS(a().closure(0b100), ValidationError);
}

TEST_CASE("cocircuits are hyperplane complements") {
  CHECK(a().cocircuits() == std::vector<Mask>{0b10});
  CHECK(b().cocircuits().empty());
  CHECK(uniform(2, 3).cocircuits() == std::vector<Mask>{0b0110, 0b1010, 0b1100});
  for (const PointedMatroid& m : catalog_upto(4)) {
    for (Mask c : m.cocircuits()) CHECK(!has_bit(c, 0));
  }
}

TEST_CASE("restriction and contraction") {
  PointedMatroid u23 = uniform(2, 3);
  CHECK(iso(u23.restrict_to(0b0110), direct_sum(a(), a())));
  CHECK(iso(u23.contract_by(0b0010), uniform(1, 2)));
  PointedMatroid ab = direct_sum(a(), b());
  CHECK(iso(ab.contract_by(0b010), b()));
  for (const PointedMatroid& m : catalog_upto(3)) {
    CHECK(m.restrict_to(m.tilde()) == m);
    CHECK(m.restrict_to(0) == zero_matroid());
    CHECK(m.contract_by(0) == m);
  }
  CHECK_THROWS_AS(u23.restrict_to(kBasepointBit), ValidationError);
  CHECK_THROWS_AS(u23.contract_by(0b10000), ValidationError);
}

TEST_CASE("minors commute") {
  for (const PointedMatroid& m : catalog_upto(4)) {
    for_each_submask(m.tilde(), [&](Mask s) {
      for_each_submask(s, [&](Mask t) {
        PointedMatroid left = m.restrict_to(s).contract_by(
            [&] {
              Mask out = 0;
              for (int x : bits_of(t)) out = with_bit(out, popcount((s | 1u) & ((1u << x) - 1)));
              return out;
            }());
        Mask keep = m.full() & ~t;
        Mask s_rem = 0;
        for (int x : bits_of(s & ~t)) s_rem = with_bit(s_rem, popcount(keep & ((1u << x) - 1)));
        PointedMatroid right = m.contract_by(t).restrict_to(s_rem);
        CHECK(left == right);
      });
    });
  }
}

TEST_CASE("direct sum") {
  for (const PointedMatroid& m : catalog_upto(3)) {
    CHECK(direct_sum(m, zero_matroid()) == m);
    CHECK(iso(direct_sum(zero_matroid(), m), m));
  }
  PointedMatroid aa = direct_sum(a(), a());
  CHECK(aa.flats().size() == 4);
  for (const PointedMatroid& m : catalog_upto(2)) {
    for (const PointedMatroid& n : catalog_upto(2)) {
      PointedMatroid sum = direct_sum(m, n);
      CHECK(sum.rank() == m.rank() + n.rank());
      CHECK(sum.degree() == m.degree() + n.degree());
      CHECK(sum.flats().size() == m.flats().size() * n.flats().size());
    }
  }
}

TEST_CASE("components give the finest decomposition") {
  CHECK(components(zero_matroid()).empty());
  auto parts = components(direct_sum(a(), b()));
  REQUIRE(parts.size() == 2);
  CHECK(iso(parts[0], a()));
  CHECK(iso(parts[1], b()));
  auto whole = components(uniform(2, 3));
  REQUIRE(whole.size() == 1);
  CHECK(iso(whole[0], uniform(2, 3)));
  // reassembling the parts recovers the matroid up to isomorphism
  for (const PointedMatroid& m : catalog_upto(4)) {
    PointedMatroid acc = zero_matroid();
    for (const PointedMatroid& part : components(m)) acc = direct_sum(acc, part);
    CHECK(iso(acc, m));
  }
}

TEST_CASE("canonical forms decide isomorphism") {
  CHECK(canonical_form(direct_sum(a(), b())) == canonical_form(direct_sum(b(), a())));
  CHECK(canonical_form(a()) != canonical_form(b()));

  // invariance under random relabelings
  std::mt19937 rng(20240811);
  for (const PointedMatroid& m : catalog_upto(4)) {
    IsoClass canon = canonical_form(m);
    std::vector<int> perm(m.degree() + 1);
    for (int trial = 0; trial < 100; ++trial) {
      perm[0] = 0;
      std::vector<int> images(m.degree());
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      for (int i = 1; i <= m.degree(); ++i) perm[i] = images[i - 1];
      PointedMatroid shuffled =
          PointedMatroid::unchecked(m.ground(), remap_flats(m.flats(), perm));
      CHECK(canonical_form(shuffled) == canon);
    }
  }
}

TEST_CASE("canonical equality agrees with direct bijection search") {
  auto classes = catalog_upto(5);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      if (classes[i].degree() != classes[j].degree()) continue;
      bool by_canon = canonical_form(classes[i]) == canonical_form(classes[j]);
      CHECK(by_canon == oracle::isomorphic_by_search(classes[i], classes[j]));
    }
  }
  // witnesses really are isomorphisms
  PointedMatroid ab = direct_sum(a(), b());
  PointedMatroid ba = direct_sum(b(), a());
  auto witness = find_isomorphism(ab, ba);
  REQUIRE(witness.has_value());
  CHECK(remap_flats(ab.flats(), *witness) == ba.flats());
  CHECK(!find_isomorphism(a(), b()).has_value());
}

TEST_CASE("canonical hex round trips") {
  for (const PointedMatroid& m : catalog_upto(3)) {
    IsoClass c = canonical_form(m);
    CHECK(parse_canon_hex(canon_hex(c)) == c);
  }
  CHECK_THROWS_AS(parse_canon_hex("123"), ParseError);
  CHECK_THROWS_AS(parse_canon_hex("zzzzz"), ParseError);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(a()) == 1);
  CHECK(automorphism_count(direct_sum(a(), a())) == 2);
  CHECK(automorphism_count(uniform(2, 3)) == 6);
  CHECK(automorphism_count(direct_sum(a(), b())) == 1);
}

TEST_CASE("closure axioms hold on every constructed matroid") {
  for (const PointedMatroid& m : catalog_upto(4)) CHECK(oracle::flats_axioms_hold(m));
  CHECK(oracle::flats_axioms_hold(from_bases(GroundSet::numbered(3), {0b0110, 0b1010, 0b1100})));
}

#include "mhall/category.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

bool is_pointed_function(const PointedMatroid& source, const PointedMatroid& target,
                         const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.ground().size()) return false;
  if (map[0] != 0) return false;
  for (int v : map) {
    if (v < 0 || v >= target.ground().size()) return false;
  }
  return true;
}

Mask image_of(const std::vector<int>& map, Mask s) {
  Mask out = 0;
  for (int i : bits_of(s)) out = with_bit(out, map[i]);
  return out;
}

Mask preimage_of(const std::vector<int>& map, Mask t) {
  Mask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (has_bit(t, map[i])) out = with_bit(out, static_cast<int>(i));
  }
  return out;
}

// Pointed bijection carrying flats onto flats, per the isomorphism criterion.
bool is_isomorphism_map(const PointedMatroid& a, const PointedMatroid& b,
                        const std::vector<int>& map) {
  if (!is_pointed_function(a, b, map)) return false;
  if (a.ground().size() != b.ground().size()) return false;
  std::vector<bool> hit(map.size(), false);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  if (a.flats().size() != b.flats().size()) return false;
  for (Mask f : a.flats()) {
    if (!b.is_flat(image_of(map, f))) return false;
  }
  return true;
}

}  // namespace

bool is_strong(const PointedMatroid& source, const PointedMatroid& target,
               const std::vector<int>& map) {
  if (!is_pointed_function(source, target, map)) return false;
  for (Mask a : target.flats()) {
    if (!source.is_flat(preimage_of(map, a))) return false;
  }
  return true;
}

StrongMap StrongMap::check(PointedMatroid source, PointedMatroid target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.ground().size()) {
    throw ValidationError(ValidationError::Code::BasepointNotPreserved,
                          "map is not total on the source ground set");
  }
  if (map[0] != 0) {
    throw ValidationError(ValidationError::Code::BasepointNotPreserved,
                          "map does not send the basepoint to the basepoint");
  }
  for (int v : map) {
    if (v < 0 || v >= target.ground().size()) {
      throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                            "map value outside the target ground set");
    }
  }
  for (Mask a : target.flats()) {
    if (!source.is_flat(preimage_of(map, a))) {
      std::string flat = "{";
      bool first = true;
      for (int i : bits_of(a)) {
        if (!first) flat += ",";
        flat += target.ground().label(i);
        first = false;
      }
      flat += "}";
      throw ValidationError(ValidationError::Code::FlatPreimageViolated,
                            "preimage of the flat " + flat + " is not a flat of the source");
    }
  }
  return StrongMap(std::move(source), std::move(target), std::move(map));
}

StrongMap StrongMap::identity(const PointedMatroid& m) {
  std::vector<int> map(m.ground().size());
  std::iota(map.begin(), map.end(), 0);
  return StrongMap(m, m, std::move(map));
}

StrongMap StrongMap::inclusion(const PointedMatroid& m, Mask s) {
  PointedMatroid sub = m.restrict_to(s);
  std::vector<int> map;
  for (int i : bits_of(s | kBasepointBit)) map.push_back(i);
  return StrongMap(std::move(sub), m, std::move(map));
}

StrongMap StrongMap::contraction(const PointedMatroid& m, Mask s) {
  PointedMatroid quo = m.contract_by(s);
  const Mask keep = m.full() & ~s;
  std::vector<int> map(m.ground().size(), 0);
  for (int i : bits_of(keep)) map[i] = pos_in(keep, i);
  return StrongMap(m, std::move(quo), std::move(map));
}

StrongMap StrongMap::from_zero(const PointedMatroid& m) {
  return StrongMap(zero_matroid(), m, {0});
}

StrongMap StrongMap::to_zero(const PointedMatroid& m) {
  return StrongMap(m, zero_matroid(), std::vector<int>(m.ground().size(), 0));
}

Mask StrongMap::image(Mask s) const { return image_of(map_, s); }
Mask StrongMap::preimage(Mask t) const { return preimage_of(map_, t); }

bool StrongMap::injective() const {
  std::vector<bool> hit(target_.ground().size(), false);
  for (int v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool StrongMap::surjective() const {
  return popcount(image_mask()) == target_.ground().size();
}

StrongMap compose(const StrongMap& g, const StrongMap& f) {
  if (!(f.target() == g.source())) {
    throw std::logic_error("strong map composition endpoint mismatch");
  }
  std::vector<int> map(f.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(static_cast<int>(i)));
  return StrongMap::check(f.source(), g.target(), std::move(map));
}

std::vector<StrongMap> all_strong_maps(const PointedMatroid& source,
                                       const PointedMatroid& target) {
  const int n = source.ground().size();
  const int k = target.ground().size();
  std::vector<StrongMap> out;
  std::vector<int> map(n, 0);
  while (true) {
    if (is_strong(source, target, map)) out.push_back(StrongMap::check(source, target, map));
    int i = n - 1;
    while (i >= 1 && map[i] == k - 1) map[i--] = 0;
    if (i == 0) break;
    ++map[i];
  }
  return out;
}

std::vector<std::vector<int>> all_isomorphisms(const PointedMatroid& a,
                                               const PointedMatroid& b) {
  std::vector<std::vector<int>> out;
  if (a.degree() != b.degree() || a.flats().size() != b.flats().size()) return out;
  const int n = a.degree();
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 1);
  std::vector<int> perm(n + 1);
  do {
    perm[0] = 0;
    for (int k = 0; k < n; ++k) perm[source[k]] = k + 1;
    if (remap_flats(a.flats(), perm) == b.flats()) out.push_back(perm);
  } while (std::next_permutation(source.begin(), source.end()));
  return out;
}

bool admissible_mono(const MorphismClass& c) {
  return c.tag == MorphTag::Iso || c.tag == MorphTag::AdmissibleMono;
}

bool admissible_epi(const MorphismClass& c) {
  return c.tag == MorphTag::Iso || c.tag == MorphTag::AdmissibleEpi;
}

const char* to_string(MorphTag tag) {
  switch (tag) {
    case MorphTag::Iso: return "iso";
    case MorphTag::AdmissibleMono: return "admissible-mono";
    case MorphTag::AdmissibleEpi: return "admissible-epi";
    case MorphTag::Mono: return "mono";
    case MorphTag::Epi: return "epi";
    case MorphTag::General: return "general";
  }
  return "?";
}

MorphismClass classify(const StrongMap& f) {
  const PointedMatroid& src = f.source();
  const PointedMatroid& tgt = f.target();
  const bool inj = f.injective();
  const bool sur = f.surjective();
  if (inj && sur && is_isomorphism_map(src, tgt, f.map())) {
    return {MorphTag::Iso, tgt.tilde()};
  }
  if (inj) {
    const Mask s = f.image_mask() & ~kBasepointBit;
    PointedMatroid rest = tgt.restrict_to(s);
    const Mask keep = s | kBasepointBit;
    std::vector<int> g(src.ground().size());
    for (int i = 0; i < src.ground().size(); ++i) g[i] = pos_in(keep, f(i));
    if (is_isomorphism_map(src, rest, g)) return {MorphTag::AdmissibleMono, s};
  }
  if (sur) {
    const Mask s = f.preimage(kBasepointBit) & ~kBasepointBit;
    PointedMatroid quo = src.contract_by(s);
    const Mask keep = src.full() & ~s;
    std::vector<int> h(quo.ground().size(), -1);
    bool well_defined = true;
    for (int i : bits_of(keep)) {
      int p = pos_in(keep, i);
      if (h[p] != -1) well_defined = false;
      h[p] = f(i);
    }
    if (well_defined && is_isomorphism_map(quo, tgt, h)) return {MorphTag::AdmissibleEpi, s};
  }
  if (inj) return {MorphTag::Mono, 0};
  if (sur) return {MorphTag::Epi, 0};
  return {MorphTag::General, 0};
}

std::vector<ExactSequence> exact_sequences(const PointedMatroid& b) {
  std::vector<ExactSequence> out;
  for_each_submask(b.tilde(), [&](Mask s) {
    StrongMap incl = StrongMap::inclusion(b, s);
    StrongMap proj = StrongMap::contraction(b, s);
    out.push_back(ExactSequence{s, b, incl.source(), proj.target(), incl, proj});
  });
  return out;
}

SquareChecks check_square(const Square& sq) {
  SquareChecks out;
  out.endpoints = sq.top.source() == sq.left.source() && sq.top.target() == sq.right.source() &&
                  sq.left.target() == sq.bottom.source() && sq.right.target() == sq.bottom.target();
  if (!out.endpoints) return out;
  out.commutes = compose(sq.right, sq.top).map() == compose(sq.bottom, sq.left).map();
  out.classes = admissible_mono(classify(sq.top)) && admissible_mono(classify(sq.bottom)) &&
                admissible_epi(classify(sq.left)) && admissible_epi(classify(sq.right));

  // Pullback of pointed sets: tl must biject onto {(x, y) : bottom x = right y}.
  {
    std::map<std::pair<int, int>, int> pairs;
    for (int x = 0; x < sq.bl().ground().size(); ++x) {
      for (int y = 0; y < sq.tr().ground().size(); ++y) {
        if (sq.bottom(x) == sq.right(y)) pairs[{x, y}] = 0;
      }
    }
    bool ok = static_cast<int>(pairs.size()) == sq.tl().ground().size();
    for (int a = 0; ok && a < sq.tl().ground().size(); ++a) {
      auto it = pairs.find({sq.left(a), sq.top(a)});
      if (it == pairs.end() || it->second++) ok = false;
    }
    out.set_cartesian = ok;
  }

  // Pushout of pointed sets: classes of bl + tr under left(a) ~ top(a) must
  // biject onto br through bottom/right.
  {
    const int nb = sq.bl().ground().size();
    const int nt = sq.tr().ground().size();
    std::vector<int> parent(nb + nt);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int a = 0; a < sq.tl().ground().size(); ++a) unite(sq.left(a), nb + sq.top(a));
    std::map<int, int> value;  // representative -> element of br
    bool ok = true;
    auto assign = [&](int rep, int v) {
      auto [it, inserted] = value.emplace(rep, v);
      if (!inserted && it->second != v) ok = false;
    };
    for (int x = 0; x < nb; ++x) assign(find(x), sq.bottom(x));
    for (int y = 0; y < nt; ++y) assign(find(nb + y), sq.right(y));
    if (static_cast<int>(value.size()) != sq.br().ground().size()) ok = false;
    std::vector<bool> hit(sq.br().ground().size(), false);
    for (auto& [rep, v] : value) {
      if (hit[v]) ok = false;
      hit[v] = true;
    }
    out.set_cocartesian = ok;
  }
  return out;
}

bool universally_cartesian(const Square& sq, const std::vector<PointedMatroid>& trials) {
  for (const PointedMatroid& x : trials) {
    auto to_tr = all_strong_maps(x, sq.tr());
    auto to_bl = all_strong_maps(x, sq.bl());
    auto to_tl = all_strong_maps(x, sq.tl());
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> cones;
    for (const StrongMap& chi : to_tl) {
      cones[{compose(sq.top, chi).map(), compose(sq.left, chi).map()}]++;
    }
    for (const StrongMap& phi : to_tr) {
      auto right_phi = compose(sq.right, phi).map();
      for (const StrongMap& psi : to_bl) {
        if (right_phi != compose(sq.bottom, psi).map()) continue;
        auto it = cones.find({phi.map(), psi.map()});
        if (it == cones.end() || it->second != 1) return false;
      }
    }
  }
  return true;
}

bool universally_cocartesian(const Square& sq, const std::vector<PointedMatroid>& trials) {
  for (const PointedMatroid& x : trials) {
    auto from_tr = all_strong_maps(sq.tr(), x);
    auto from_bl = all_strong_maps(sq.bl(), x);
    auto from_br = all_strong_maps(sq.br(), x);
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> cocones;
    for (const StrongMap& chi : from_br) {
      cocones[{compose(chi, sq.right).map(), compose(chi, sq.bottom).map()}]++;
    }
    for (const StrongMap& phi : from_tr) {
      auto phi_top = compose(phi, sq.top).map();
      for (const StrongMap& psi : from_bl) {
        if (phi_top != compose(psi, sq.left).map()) continue;
        auto it = cocones.find({phi.map(), psi.map()});
        if (it == cocones.end() || it->second != 1) return false;
      }
    }
  }
  return true;
}

Square complete_pullback(const StrongMap& bottom_mono, const StrongMap& right_epi) {
  if (!(bottom_mono.target() == right_epi.target())) {
    throw ValidationError(ValidationError::Code::NotAdmissible,
                          "the two arrows do not share a target corner");
  }
  if (!admissible_mono(classify(bottom_mono)) || !admissible_epi(classify(right_epi))) {
    throw ValidationError(ValidationError::Code::NotAdmissible,
                          "pullback completion needs an admissible mono and an admissible epi");
  }
  const PointedMatroid& n = right_epi.source();
  const Mask s = bottom_mono.image_mask();
  const Mask a = right_epi.preimage(s) & ~kBasepointBit;
  StrongMap top = StrongMap::inclusion(n, a);
  const PointedMatroid& corner = top.source();
  std::vector<int> inv(bottom_mono.target().ground().size(), -1);
  for (int i = 0; i < bottom_mono.source().ground().size(); ++i) inv[bottom_mono(i)] = i;
  std::vector<int> lmap;
  for (int o : bits_of(a | kBasepointBit)) {
    assert(inv[right_epi(o)] >= 0);
    lmap.push_back(inv[right_epi(o)]);
  }
  StrongMap left = StrongMap::check(corner, bottom_mono.source(), std::move(lmap));
  return Square{top, bottom_mono, left, right_epi};
}

Square complete_pushout(const StrongMap& left_epi, const StrongMap& top_mono) {
  if (!(left_epi.source() == top_mono.source())) {
    throw ValidationError(ValidationError::Code::NotAdmissible,
                          "the two arrows do not share a source corner");
  }
  if (!admissible_epi(classify(left_epi)) || !admissible_mono(classify(top_mono))) {
    throw ValidationError(ValidationError::Code::NotAdmissible,
                          "pushout completion needs an admissible epi and an admissible mono");
  }
  const PointedMatroid& n = top_mono.target();
  const Mask t = left_epi.preimage(kBasepointBit) & ~kBasepointBit;
  const Mask ft = top_mono.image(t);
  StrongMap right = StrongMap::contraction(n, ft);
  const Mask keep = n.full() & ~ft;
  const PointedMatroid& p = left_epi.target();
  std::vector<int> bmap(p.ground().size(), -1);
  bmap[0] = 0;
  for (int m = 0; m < left_epi.source().ground().size(); ++m) {
    if (left_epi(m) != 0) bmap[left_epi(m)] = pos_in(keep, top_mono(m));
  }
  StrongMap bottom = StrongMap::check(p, right.target(), std::move(bmap));
  return Square{top_mono, bottom, left_epi, right};
}

Square lemma_square(const PointedMatroid& m, Mask s_with_basepoint, Mask t) {
  const Mask s = s_with_basepoint;
  if (!has_bit(s, 0) || has_bit(t, 0) || !subset_of(t, s) || !subset_of(s, m.full())) {
    throw ValidationError(ValidationError::Code::BadNesting,
                          "lemma square needs T inside S inside E with the basepoint in S but not T");
  }
  const Mask s_tilde = s & ~kBasepointBit;
  StrongMap top = StrongMap::inclusion(m, s_tilde);
  StrongMap right = StrongMap::contraction(m, t);
  Mask t_in_tl = 0;
  for (int x : bits_of(t)) t_in_tl = with_bit(t_in_tl, pos_in(s, x));
  StrongMap left = StrongMap::contraction(top.source(), t_in_tl);
  const Mask keep_br = m.full() & ~t;
  Mask s_in_br = 0;
  for (int x : bits_of(s_tilde & ~t)) s_in_br = with_bit(s_in_br, pos_in(keep_br, x));
  StrongMap bottom = StrongMap::inclusion(right.target(), s_in_br);
  return Square{top, bottom, left, right};
}

bool ProtoExactReport::ok() const {
  for (const auto& p : property) {
    if (p.failures != 0) return false;
  }
  return true;
}

std::string ProtoExactReport::lines() const {
  std::string out;
  for (int k = 1; k <= 5; ++k) {
    out += "PROP" + std::to_string(k) + " " + std::to_string(property[k].instances) + " " +
           std::to_string(property[k].failures) + "\n";
  }
  return out;
}

namespace {

// Relabelings of m: pairs (permutation, relabeled matroid).
std::vector<std::pair<std::vector<int>, PointedMatroid>> relabelings(const PointedMatroid& m) {
  std::vector<std::pair<std::vector<int>, PointedMatroid>> out;
  const int n = m.degree();
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 1);
  std::vector<int> perm(n + 1);
  do {
    perm[0] = 0;
    for (int k = 0; k < n; ++k) perm[source[k]] = k + 1;
    out.emplace_back(perm, PointedMatroid::unchecked(m.ground(), remap_flats(m.flats(), perm)));
  } while (std::next_permutation(source.begin(), source.end()));
  return out;
}

}  // namespace

ProtoExactReport verify_proto_exact(const std::vector<PointedMatroid>& catalog,
                                    const VerifyOptions& opts) {
  ProtoExactReport rep;
  auto tally = [&rep](int prop, bool ok, const std::string& what) {
    rep.property[prop].instances++;
    if (!ok) {
      rep.property[prop].failures++;
      rep.failure_notes.push_back("PROP" + std::to_string(prop) + ": " + what);
    }
  };

  std::vector<PointedMatroid> trials;
  if (opts.universal_max_degree >= 0) {
    for (const auto& m : catalog) {
      if (m.degree() <= opts.universal_max_degree) trials.push_back(m);
    }
  }

  // Property 1: zero-object laws.
  for (const auto& m : catalog) {
    tally(1, admissible_mono(classify(StrongMap::from_zero(m))), "0 -> M not an admissible mono");
    tally(1, admissible_epi(classify(StrongMap::to_zero(m))), "M -> 0 not an admissible epi");
  }

  // Property 2: isomorphisms belong to both classes; compositions of general
  // admissible monos (epis) are admissible monos (epis).
  for (const auto& m : catalog) {
    for (const auto& [perm, relabeled] : relabelings(m)) {
      StrongMap f = StrongMap::check(m, relabeled, perm);
      MorphismClass c = classify(f);
      tally(2, c.tag == MorphTag::Iso && admissible_mono(c) && admissible_epi(c),
            "relabeling not classified as an isomorphism");
    }
    for_each_submask(m.tilde(), [&](Mask s1) {
      StrongMap outer = StrongMap::inclusion(m, s1);
      const PointedMatroid mid = outer.source();
      PointedMatroid mid_canon = matroid_of(canonical_form(mid));
      for (const auto& g : all_isomorphisms(mid_canon, mid)) {
        StrongMap twist = StrongMap::check(mid_canon, mid, g);
        for_each_submask(mid_canon.tilde(), [&](Mask s2) {
          StrongMap inner = StrongMap::inclusion(mid_canon, s2);
          StrongMap composite = compose(outer, compose(twist, inner));
          tally(2, admissible_mono(classify(composite)),
                "composite of admissible monos is not an admissible mono");
        });
      }
    });
    for_each_submask(m.tilde(), [&](Mask t1) {
      StrongMap outer = StrongMap::contraction(m, t1);
      const PointedMatroid mid = outer.target();
      PointedMatroid mid_canon = matroid_of(canonical_form(mid));
      for (const auto& g : all_isomorphisms(mid, mid_canon)) {
        StrongMap twist = StrongMap::check(mid, mid_canon, g);
        for_each_submask(mid_canon.tilde(), [&](Mask t2) {
          StrongMap inner = StrongMap::contraction(mid_canon, t2);
          StrongMap composite = compose(inner, compose(twist, outer));
          tally(2, admissible_epi(classify(composite)),
                "composite of admissible epis is not an admissible epi");
        });
      }
    });
  }

  // Index minors of the catalog by class for completion instances.
  std::map<IsoClass, std::vector<std::pair<int, Mask>>> contract_to;  // class -> (index, T)
  std::map<IsoClass, std::vector<std::pair<int, Mask>>> restrict_to;  // class -> (index, S)
  for (int i = 0; i < static_cast<int>(catalog.size()); ++i) {
    for_each_submask(catalog[i].tilde(), [&](Mask s) {
      contract_to[canonical_form(catalog[i].contract_by(s))].emplace_back(i, s);
      restrict_to[canonical_form(catalog[i].restrict_to(s))].emplace_back(i, s);
    });
  }

  auto square_instance = [&](int prop, Square&& sq, const std::string& what) {
    SquareChecks c = check_square(sq);
    tally(prop, c.all(), what);
    tally(3, c.set_cartesian == c.set_cocartesian, what + " (cartesian/cocartesian mismatch)");
    if (opts.universal_max_degree >= 0 && sq.tl().degree() <= opts.universal_max_degree &&
        sq.tr().degree() <= opts.universal_max_degree &&
        sq.bl().degree() <= opts.universal_max_degree &&
        sq.br().degree() <= opts.universal_max_degree) {
      bool uc = universally_cartesian(sq, trials);
      bool ucc = universally_cocartesian(sq, trials);
      tally(3, uc == ucc && uc == c.set_cartesian, what + " (universal check)");
    }
  };

  // Property 4: P >-> Q <<- N completes to a biCartesian square.
  for (const auto& q : catalog) {
    for_each_submask(q.tilde(), [&](Mask s) {
      StrongMap incl = StrongMap::inclusion(q, s);
      PointedMatroid p = matroid_of(canonical_form(incl.source()));
      auto it = contract_to.find(canonical_form(q));
      if (it == contract_to.end()) return;
      for (const auto& g : all_isomorphisms(p, incl.source())) {
        StrongMap i2 = compose(incl, StrongMap::check(p, incl.source(), g));
        for (const auto& [ni, t] : it->second) {
          StrongMap con = StrongMap::contraction(catalog[ni], t);
          for (const auto& f : all_isomorphisms(con.target(), q)) {
            StrongMap j2 = compose(StrongMap::check(con.target(), q, f), con);
            square_instance(4, complete_pullback(i2, j2), "pullback completion invalid");
          }
        }
      }
    });
  }

  // Property 5: P <<- M >-> N completes to a biCartesian square.
  for (const auto& m : catalog) {
    auto it = restrict_to.find(canonical_form(m));
    for_each_submask(m.tilde(), [&](Mask t) {
      StrongMap con = StrongMap::contraction(m, t);
      PointedMatroid p = matroid_of(canonical_form(con.target()));
      for (const auto& h : all_isomorphisms(con.target(), p)) {
        StrongMap j = compose(StrongMap::check(con.target(), p, h), con);
        if (it == restrict_to.end()) continue;
        for (const auto& [ni, s] : it->second) {
          StrongMap incl = StrongMap::inclusion(catalog[ni], s);
          for (const auto& f : all_isomorphisms(m, incl.source())) {
            StrongMap i = compose(incl, StrongMap::check(m, incl.source(), f));
            square_instance(5, complete_pushout(j, i), "pushout completion invalid");
          }
        }
      }
    });
  }

  // Restriction/contraction squares, including every extension square
  // (T = S), feed the Cartesian-iff-coCartesian tally.
  for (const auto& m : catalog) {
    for_each_submask(m.tilde(), [&](Mask s) {
      for_each_submask(s, [&](Mask t) {
        Square sq = lemma_square(m, s | kBasepointBit, t);
        SquareChecks c = check_square(sq);
        tally(3, c.all(), "restriction/contraction square not biCartesian");
      });
    });
  }

  std::sort(rep.failure_notes.begin(), rep.failure_notes.end());
  return rep;
}

}  // namespace mhall

#include "mhall/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace mhall {
namespace {

std::vector<Mask> normalized(std::vector<Mask> flats) {
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return flats;
}

std::string label_set(const GroundSet& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (!has_bit(m, i)) continue;
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

Mask closure_in(const std::vector<Mask>& flats, Mask full, Mask s) {
  Mask acc = full;
  for (Mask f : flats) {
    if (subset_of(s, f)) acc &= f;
  }
  return acc;
}

}  // namespace

PointedMatroid::PointedMatroid(GroundSet ground, std::vector<Mask> flats)
    : ground_(std::move(ground)), flats_(normalized(std::move(flats))) {
  loops_ = closure(kBasepointBit);
  rank_ = rank_of(full());
}

PointedMatroid PointedMatroid::unchecked(GroundSet ground, std::vector<Mask> flats) {
  return PointedMatroid(std::move(ground), std::move(flats));
}

PointedMatroid PointedMatroid::from_flats(GroundSet ground, std::vector<Mask> flats) {
  const Mask full = ground.full();
  flats = normalized(std::move(flats));
  for (Mask f : flats) {
    if (!subset_of(f, full)) {
      throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                            "flat uses bits outside the ground set");
    }
    if (!has_bit(f, 0)) {
      throw ValidationError(ValidationError::Code::MissingBasepointInFlat,
                            "flat " + label_set(ground, f) + " does not contain the basepoint");
    }
  }
  if (!std::binary_search(flats.begin(), flats.end(), full)) {
    throw ValidationError(ValidationError::Code::GroundNotFlat,
                          "the full ground set is not a flat");
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      Mask meet = flats[i] & flats[j];
      if (!std::binary_search(flats.begin(), flats.end(), meet)) {
        throw ValidationError(ValidationError::Code::NotIntersectionClosed,
                              "intersection " + label_set(ground, meet) + " of flats " +
                                  label_set(ground, flats[i]) + " and " +
                                  label_set(ground, flats[j]) + " is not a flat");
      }
    }
  }
  // Exchange. Equivalent to F4 for an intersection-closed family: for every
  // flat F and x outside it, nothing sits strictly between F and the closure
  // of F + x. A violating middle flat G yields a direct (S, x, y) witness
  // with y in G \ F.
  for (Mask f : flats) {
    Mask out = full & ~f;
    for (int x : bits_of(out)) {
      Mask c = closure_in(flats, full, with_bit(f, x));
      for (Mask g : flats) {
        if (f != g && g != c && subset_of(f, g) && subset_of(g, c)) {
          int y = bits_of(g & ~f).front();
          throw ValidationError(
              ValidationError::Code::ExchangeAxiomViolated,
              "exchange fails: S=" + label_set(ground, f) + ", x=" + ground.label(x) +
                  ", y=" + ground.label(y) + ": y lies in the closure of S+x but x is not in the closure of S+y");
        }
      }
    }
  }
  return PointedMatroid(std::move(ground), std::move(flats));
}

bool PointedMatroid::is_flat(Mask s) const {
  return std::binary_search(flats_.begin(), flats_.end(), s);
}

Mask PointedMatroid::closure(Mask s) const {
  if (!subset_of(s, full())) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "closure argument is not a subset of the ground set");
  }
  return closure_in(flats_, full(), s);
}

int PointedMatroid::rank_of(Mask s) const {
  if (!subset_of(s, full())) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "rank argument is not a subset of the ground set");
  }
  Mask independent = 0;
  Mask cl = loops_;
  int r = 0;
  for (int x : bits_of(s & ~kBasepointBit)) {
    if (!has_bit(cl, x)) {
      independent = with_bit(independent, x);
      cl = closure(independent);
      ++r;
    }
  }
  return r;
}

std::vector<Mask> PointedMatroid::hyperplanes() const {
  std::vector<Mask> out;
  const Mask top = full();
  for (Mask f : flats_) {
    if (f == top) continue;
    bool maximal = true;
    for (Mask g : flats_) {
      if (g != f && g != top && subset_of(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Mask> PointedMatroid::cocircuits() const {
  std::vector<Mask> out;
  for (Mask h : hyperplanes()) out.push_back(full() & ~h);
  std::sort(out.begin(), out.end());
  return out;
}

PointedMatroid PointedMatroid::restrict_to(Mask s) const {
  if (has_bit(s, 0)) {
    throw ValidationError(ValidationError::Code::SubsetContainsBasepoint,
                          "restriction subset must not contain the basepoint");
  }
  if (!subset_of(s, tilde())) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "restriction subset is not contained in the ground set");
  }
  const Mask keep = s | kBasepointBit;
  std::vector<Mask> flats;
  flats.reserve(flats_.size());
  for (Mask f : flats_) flats.push_back(compress_bits(f & keep, keep));
  return PointedMatroid(ground_.keep(keep), std::move(flats));
}

PointedMatroid PointedMatroid::contract_by(Mask s) const {
  if (has_bit(s, 0)) {
    throw ValidationError(ValidationError::Code::SubsetContainsBasepoint,
                          "contraction subset must not contain the basepoint");
  }
  if (!subset_of(s, tilde())) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "contraction subset is not contained in the ground set");
  }
  const Mask keep = full() & ~s;
  std::vector<Mask> flats;
  for (Mask f : flats_) {
    if (subset_of(s, f)) flats.push_back(compress_bits(f & keep, keep));
  }
  return PointedMatroid(ground_.keep(keep), std::move(flats));
}

PointedMatroid zero_matroid() {
  return PointedMatroid::unchecked(GroundSet(), {kBasepointBit});
}

PointedMatroid direct_sum(const PointedMatroid& m, const PointedMatroid& n) {
  std::vector<std::string> labels = m.ground().labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  for (int i = 1; i < n.ground().size(); ++i) {
    std::string candidate = n.ground().label(i);
    while (taken.count(candidate)) candidate += "'";
    taken.insert(candidate);
    labels.push_back(candidate);
  }
  const int shift = m.degree();
  std::vector<Mask> flats;
  flats.reserve(m.flats().size() * n.flats().size());
  for (Mask fm : m.flats()) {
    for (Mask fn : n.flats()) {
      flats.push_back(fm | ((fn & ~kBasepointBit) << shift));
    }
  }
  return PointedMatroid::unchecked(GroundSet(std::move(labels)), std::move(flats));
}

namespace {

bool is_separator(const PointedMatroid& m, Mask c) {
  return m.rank_of(c) + m.rank_of(m.tilde() & ~c) == m.rank();
}

// Minimal separator containing the lowest bit of `remaining`.
Mask component_of(const PointedMatroid& m, Mask remaining) {
  const int x = bits_of(remaining).front();
  std::vector<Mask> candidates;
  for_each_submask(remaining, [&](Mask s) {
    if (has_bit(s, x)) candidates.push_back(s);
  });
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  for (Mask c : candidates) {
    if (is_separator(m, c)) return c;
  }
  return remaining;  // unreachable: remaining itself is a separator
}

}  // namespace

std::vector<PointedMatroid> components(const PointedMatroid& m) {
  std::vector<PointedMatroid> out;
  Mask remaining = m.tilde();
  while (remaining) {
    Mask block = component_of(m, remaining);
    out.push_back(m.restrict_to(block));
    remaining &= ~block;
  }
  return out;
}

PointedMatroid uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) {
    throw ValidationError(ValidationError::Code::RankExceedsSize,
                          "uniform matroid needs 0 <= r <= n");
  }
  GroundSet ground = GroundSet::numbered(n);
  std::vector<Mask> flats;
  for_each_submask(ground.full() & ~kBasepointBit, [&](Mask s) {
    if (popcount(s) < r) flats.push_back(s | kBasepointBit);
  });
  flats.push_back(ground.full());
  return PointedMatroid::unchecked(std::move(ground), std::move(flats));
}

PointedMatroid free_matroid(const GroundSet& ground) {
  std::vector<Mask> flats;
  for_each_submask(ground.full() & ~kBasepointBit,
                   [&](Mask s) { flats.push_back(s | kBasepointBit); });
  return PointedMatroid::unchecked(ground, std::move(flats));
}

PointedMatroid from_bases(const GroundSet& ground, const std::vector<Mask>& bases) {
  if (bases.empty()) {
    throw ValidationError(ValidationError::Code::EmptyBasisFamily, "no bases given");
  }
  const Mask tilde = ground.full() & ~kBasepointBit;
  for (Mask b : bases) {
    if (!subset_of(b, tilde)) {
      throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                            "basis is not a subset of the non-basepoint elements");
    }
  }
  std::vector<Mask> family = normalized(bases);
  const int r = popcount(family.front());
  for (Mask b : family) {
    if (popcount(b) != r) {
      throw ValidationError(ValidationError::Code::ExchangeViolated,
                            "bases must be equicardinal");
    }
  }
  for (Mask b1 : family) {
    for (Mask b2 : family) {
      for (int x : bits_of(b1 & ~b2)) {
        bool ok = false;
        for (int y : bits_of(b2 & ~b1)) {
          Mask swapped = with_bit(without_bit(b1, x), y);
          if (std::binary_search(family.begin(), family.end(), swapped)) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          throw ValidationError(ValidationError::Code::ExchangeViolated,
                                "basis exchange fails for " + label_set(ground, b1) +
                                    " and " + label_set(ground, b2) + " at " + ground.label(x));
        }
      }
    }
  }
  auto rank_of = [&](Mask s) {
    int best = 0;
    for (Mask b : family) best = std::max(best, popcount(b & s));
    return best;
  };
  std::vector<Mask> flats;
  for_each_submask(tilde, [&](Mask s) {
    Mask cl = s | kBasepointBit;
    const int rs = rank_of(s);
    for (int x : bits_of(tilde & ~s)) {
      if (rank_of(with_bit(s, x)) == rs) cl = with_bit(cl, x);
    }
    flats.push_back(cl);
  });
  return PointedMatroid::from_flats(ground, std::move(flats));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PointedMatroid from_graph(const Graph& g) {
  std::unordered_map<std::string, int> vertex_index;
  for (const auto& v : g.vertices) vertex_index.emplace(v, static_cast<int>(vertex_index.size()));

  int loop_pos = -1;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (!vertex_index.count(e.from) || !vertex_index.count(e.to)) {
      throw ValidationError(ValidationError::Code::DanglingEndpoint,
                            "edge \"" + e.name + "\" references an unknown vertex");
    }
    if (e.name == g.distinguished_loop) loop_pos = static_cast<int>(i);
  }
  if (loop_pos < 0) {
    throw ValidationError(ValidationError::Code::MissingDistinguishedLoop,
                          "distinguished loop edge \"" + g.distinguished_loop + "\" not found");
  }
  if (g.edges[loop_pos].from != g.edges[loop_pos].to) {
    throw ValidationError(ValidationError::Code::MissingDistinguishedLoop,
                          "distinguished edge \"" + g.distinguished_loop + "\" is not a loop");
  }

  // Basepoint first, remaining edges in input order.
  std::vector<const Graph::Edge*> order{&g.edges[loop_pos]};
  std::vector<std::string> labels{"*"};
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (static_cast<int>(i) == loop_pos) continue;
    order.push_back(&g.edges[i]);
    labels.push_back(g.edges[i].name);
  }
  GroundSet ground{labels};

  const int nv = static_cast<int>(g.vertices.size());
  const Mask full = ground.full();
  std::vector<Mask> flats;
  for_each_submask(full, [&](Mask s) {
    UnionFind uf(nv);
    for (int i : bits_of(s)) {
      uf.unite(vertex_index.at(order[i]->from), vertex_index.at(order[i]->to));
    }
    Mask cl = 0;
    for (int i = 0; i < ground.size(); ++i) {
      if (uf.find(vertex_index.at(order[i]->from)) == uf.find(vertex_index.at(order[i]->to))) {
        cl = with_bit(cl, i);
      }
    }
    flats.push_back(cl);
  });
  return PointedMatroid::from_flats(std::move(ground), std::move(flats));
}

}  // namespace mhall

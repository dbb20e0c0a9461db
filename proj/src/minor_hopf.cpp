#include "mhall/minor_hopf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mhall/errors.hpp"

namespace mhall {

IsoLin mm_product(const IsoLin& x, const IsoLin& y) {
  IsoLin out;
  for (const auto& [cx, vx] : x.terms()) {
    for (const auto& [cy, vy] : y.terms()) {
      out.add(class_sum({cx, cy}), vx * vy);
    }
  }
  return out;
}

TensorLin mm_coproduct(const IsoLin& x) {
  TensorLin out;
  for (const auto& term : x.terms()) {
    PointedMatroid m = matroid_of(term.first);
    const Coeff& v = term.second;
    for_each_submask(m.tilde(), [&](Mask s) {
      tensor_add(out, canonical_form(m.restrict_to(s)), canonical_form(m.contract_by(s)), v);
    });
  }
  return out;
}

Coeff mm_counit(const IsoLin& x) { return x.coefficient(canonical_form(zero_matroid())); }

namespace {

class AntipodeCache {
 public:
  IsoLin get(const IsoClass& c) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(c);
      if (it != map_.end()) return it->second;
    }
    IsoLin value = compute(c);
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(c, std::move(value)).first->second;
  }

 private:
  static IsoLin compute(const IsoClass& c) {
    const int n = c.degree;
    if (n == 0) return IsoLin::basis(c);  // S[0] = [0]
    // S = sum_{i>=1} (-1)^i m^{i-1} pi^{(x)i} Delta^{i-1}; the i-th term
    // multiplies the strictly-positive-degree legs of the iterated
    // coproduct, and the sum truncates once every term has a zero leg.
    IsoLin total;
    TensorLin3 current{{std::vector<IsoClass>{c}, Coeff(1)}};
    for (int i = 1; i <= n; ++i) {
      const Coeff sign = (i % 2 == 0) ? Coeff(1) : Coeff(-1);
      for (const auto& [legs, coeff] : current) {
        bool positive = std::all_of(legs.begin(), legs.end(),
                                    [](const IsoClass& l) { return l.degree > 0; });
        if (positive) total.add(class_sum(legs), sign * coeff);
      }
      if (i == n) break;
      TensorLin3 next;
      for (const auto& term : current) {
        const std::vector<IsoClass>& legs = term.first;
        const Coeff& coeff = term.second;
        PointedMatroid last = matroid_of(legs.back());
        for_each_submask(last.tilde(), [&](Mask s) {
          std::vector<IsoClass> expanded(legs.begin(), legs.end() - 1);
          expanded.push_back(canonical_form(last.restrict_to(s)));
          expanded.push_back(canonical_form(last.contract_by(s)));
          auto [it, inserted] = next.emplace(std::move(expanded), coeff);
          if (!inserted) it->second += coeff;
        });
      }
      current = std::move(next);
    }
    return total;
  }

  std::mutex mu_;
  std::map<IsoClass, IsoLin> map_;
};

AntipodeCache& antipode_cache() {
  static AntipodeCache c;
  return c;
}

}  // namespace

IsoLin antipode(const IsoClass& c) { return antipode_cache().get(c); }

IsoLin antipode(const IsoLin& x) {
  IsoLin out;
  for (const auto& [c, v] : x.terms()) {
    IsoLin part = antipode_cache().get(c);
    part *= v;
    out += part;
  }
  return out;
}

bool duality_check(const IsoClass& b, const Catalog& cat) {
  if (b.degree > cat.bound()) {
    throw ValidationError(ValidationError::Code::DegreeBoundExceeded,
                          "duality check needs the catalog at degree " + std::to_string(b.degree));
  }
  TensorLin cop = mm_coproduct(IsoLin::basis(b));
  for (int da = 0; da <= b.degree; ++da) {
    const int dc = b.degree - da;
    for (const IsoClass& a : cat.at_degree(da)) {
      for (const IsoClass& c : cat.at_degree(dc)) {
        Coeff hall_side(structure_constant(a, c, b));
        auto it = cop.find({c, a});
        Coeff minor_side = it == cop.end() ? Coeff(0) : it->second;
        if (hall_side != minor_side) return false;
      }
    }
  }
  return true;
}

namespace {

// Cycle-matroid flats of an edge multiset over nv vertices; edge 0 is the
// basepoint loop.
PointedMatroid graph_matroid(int nv, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<Mask> flats;
  for_each_submask(full_mask(n - 1), [&](Mask s) {
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i : bits_of(s)) parent[find(edges[i].first)] = find(edges[i].second);
    Mask cl = 0;
    for (int i = 0; i < n; ++i) {
      if (find(edges[i].first) == find(edges[i].second)) cl = with_bit(cl, i);
    }
    flats.push_back(cl);
  });
  return PointedMatroid::unchecked(GroundSet::numbered(n - 1), std::move(flats));
}

bool is_graphic_connected(const IsoClass& c) {
  if (c.degree == 0) return true;
  if (c.rank == 0) return true;  // a loop
  const int e = c.degree;
  const int nv = c.rank + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nv; ++i) {
    for (int j = i; j < nv; ++j) pairs.emplace_back(i, j);
  }
  // Edge multisets, nondecreasing in the pair index; vertex relabelings of a
  // realization are covered by the canonical-form comparison.
  std::vector<int> pick(e, 0);
  std::vector<std::pair<int, int>> edges(e + 1);
  edges[0] = {0, 0};  // basepoint loop
  while (true) {
    for (int k = 0; k < e; ++k) edges[k + 1] = pairs[pick[k]];
    if (canonical_form(graph_matroid(nv, edges)) == c) return true;
    int k = e - 1;
    while (k >= 0 && pick[k] == static_cast<int>(pairs.size()) - 1) --k;
    if (k < 0) break;
    ++pick[k];
    for (int l = k + 1; l < e; ++l) pick[l] = pick[k];
  }
  return false;
}

}  // namespace

bool is_graphic(const IsoClass& c) {
  static std::mutex mu;
  static std::map<IsoClass, bool> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
  }
  bool result = true;
  for (const IsoClass& part : class_components(c)) {
    if (!is_graphic_connected(part)) {
      result = false;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(c, result);
  return result;
}

bool supported_in(const IsoLin& x, const ClassPredicate& family) {
  for (const auto& [c, v] : x.terms()) {
    if (!family(c)) return false;
  }
  return true;
}

bool supported_in(const TensorLin& t, const ClassPredicate& family) {
  for (const auto& [pair, v] : t) {
    if (!family(pair.first) || !family(pair.second)) return false;
  }
  return true;
}

IsoLin hall_product_in_family(const IsoLin& f, const IsoLin& g, const Catalog& cat,
                              const ClassPredicate& family) {
  IsoLin out;
  for (const auto& [ca, xa] : f.terms()) {
    for (const auto& [cc, xc] : g.terms()) {
      const int d = ca.degree + cc.degree;
      if (d > cat.bound()) {
        throw ValidationError(ValidationError::Code::DegreeBoundExceeded,
                              "product support lives in degree " + std::to_string(d) +
                                  ", beyond the catalog bound " + std::to_string(cat.bound()));
      }
      for (const IsoClass& b : cat.at_degree(d)) {
        if (!family(b)) continue;
        long k = structure_constant(ca, cc, b);
        if (k != 0) out.add(b, xa * xc * k);
      }
    }
  }
  return out;
}

}  // namespace mhall

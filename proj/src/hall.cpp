#include "mhall/hall.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "mhall/errors.hpp"

namespace mhall {

std::string coeff_to_string(const Coeff& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

void IsoLin::add(IsoClass c, const Coeff& x) {
  if (x == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(c), x);
  if (!inserted) {
    it->second += x;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff IsoLin::coefficient(const IsoClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Coeff(0) : it->second;
}

IsoLin& IsoLin::operator+=(const IsoLin& other) {
  for (const auto& [c, x] : other.terms_) add(c, x);
  return *this;
}

IsoLin& IsoLin::operator-=(const IsoLin& other) {
  for (const auto& [c, x] : other.terms_) add(c, -x);
  return *this;
}

IsoLin& IsoLin::operator*=(const Coeff& x) {
  if (x == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, v] : terms_) v *= x;
  return *this;
}

void tensor_add(TensorLin& t, const IsoClass& a, const IsoClass& b, const Coeff& x) {
  if (x == 0) return;
  auto [it, inserted] = t.emplace(IsoPair{a, b}, x);
  if (!inserted) {
    it->second += x;
    if (it->second == 0) t.erase(it);
  }
}

std::string to_text(const IsoLin& f) {
  std::string out;
  for (const auto& [c, x] : f.terms()) {
    out += coeff_to_string(x) + " " + canon_hex(c) + "\n";
  }
  return out;
}

std::string to_text(const TensorLin& t) {
  std::string out;
  for (const auto& [pair, x] : t) {
    out += coeff_to_string(x) + " " + canon_hex(pair.first) + " " + canon_hex(pair.second) + "\n";
  }
  return out;
}

IsoLin parse_iso_lin(const std::string& text) {
  IsoLin out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff, hex;
    if (!(ls >> coeff >> hex)) throw ParseError("bad combination line: " + line);
    long long num = 0, den = 1;
    auto slash = coeff.find('/');
    try {
      if (slash == std::string::npos) {
        num = std::stoll(coeff);
      } else {
        num = std::stoll(coeff.substr(0, slash));
        den = std::stoll(coeff.substr(slash + 1));
      }
    } catch (const std::exception&) {
      throw ParseError("bad coefficient: " + coeff);
    }
    out.add(parse_canon_hex(hex), Coeff(num, den));
  }
  return out;
}

Degree degree_of(const IsoClass& c) { return Degree{c.rank, c.degree - c.rank}; }

std::vector<IsoClass> class_components(const IsoClass& c) {
  std::vector<IsoClass> out;
  for (const PointedMatroid& part : components(matroid_of(c))) {
    out.push_back(canonical_form(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsoClass class_sum(const std::vector<IsoClass>& parts) {
  PointedMatroid acc = zero_matroid();
  for (const IsoClass& p : parts) acc = direct_sum(acc, matroid_of(p));
  return canonical_form(acc);
}

IsoLin delta(const PointedMatroid& m) { return IsoLin::basis(canonical_form(m)); }
IsoLin delta(const IsoClass& c) { return IsoLin::basis(c); }

namespace {

class SplittingCache {
 public:
  const std::map<IsoPair, long>& get(const IsoClass& b) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(b);
      if (it != map_.end()) return *it->second;
    }
    auto counts = std::make_unique<std::map<IsoPair, long>>();
    PointedMatroid m = matroid_of(b);
    for_each_submask(m.tilde(), [&](Mask s) {
      IsoClass contraction = canonical_form(m.contract_by(s));
      IsoClass restriction = canonical_form(m.restrict_to(s));
      (*counts)[{std::move(contraction), std::move(restriction)}]++;
    });
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(b, std::move(counts));
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<IsoClass, std::unique_ptr<std::map<IsoPair, long>>> map_;
};

SplittingCache& splitting_cache() {
  static SplittingCache c;
  return c;
}

}  // namespace

std::map<IsoPair, long> splitting_counts(const IsoClass& b) { return splitting_cache().get(b); }

long structure_constant(const IsoClass& a, const IsoClass& c, const IsoClass& b) {
  const auto& counts = splitting_cache().get(b);
  auto it = counts.find({a, c});
  return it == counts.end() ? 0 : it->second;
}

long extension_count(const IsoClass& a, const IsoClass& c, const IsoClass& b) {
  return structure_constant(a, c, b) * automorphism_count(matroid_of(a)) *
         automorphism_count(matroid_of(c));
}

IsoLin hall_product(const IsoLin& f, const IsoLin& g, const Catalog& cat) {
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
        long k = structure_constant(ca, cc, b);
        if (k != 0) out.add(b, xa * xc * k);
      }
    }
  }
  return out;
}

namespace {

// All splits of the component multiset of c into (left, right) class pairs.
std::vector<IsoPair> component_splits(const IsoClass& c) {
  std::vector<IsoClass> comps = class_components(c);
  // group equal components with multiplicities
  std::vector<std::pair<IsoClass, int>> grouped;
  for (const IsoClass& p : comps) {
    if (!grouped.empty() && grouped.back().first == p) {
      grouped.back().second++;
    } else {
      grouped.emplace_back(p, 1);
    }
  }
  std::vector<IsoPair> out;
  std::vector<int> take(grouped.size(), 0);
  while (true) {
    std::vector<IsoClass> left, right;
    for (std::size_t i = 0; i < grouped.size(); ++i) {
      for (int k = 0; k < take[i]; ++k) left.push_back(grouped[i].first);
      for (int k = take[i]; k < grouped[i].second; ++k) right.push_back(grouped[i].first);
    }
    out.emplace_back(class_sum(left), class_sum(right));
    std::size_t i = 0;
    while (i < grouped.size() && take[i] == grouped[i].second) take[i++] = 0;
    if (i == grouped.size()) break;
    ++take[i];
  }
  return out;
}

}  // namespace

TensorLin hall_coproduct(const IsoLin& f) {
  TensorLin out;
  for (const auto& [c, x] : f.terms()) {
    for (const auto& [left, right] : component_splits(c)) tensor_add(out, left, right, x);
  }
  return out;
}

Coeff hall_counit(const IsoLin& f) { return f.coefficient(canonical_form(zero_matroid())); }

TensorLin tensor_product(const TensorLin& u, const TensorLin& v, const Catalog& cat) {
  TensorLin out;
  for (const auto& [pu, xu] : u) {
    for (const auto& [pv, xv] : v) {
      IsoLin lefts = hall_product(delta(pu.first), delta(pv.first), cat);
      IsoLin rights = hall_product(delta(pu.second), delta(pv.second), cat);
      for (const auto& [cl, xl] : lefts.terms()) {
        for (const auto& [cr, xr] : rights.terms()) {
          tensor_add(out, cl, cr, xu * xv * xl * xr);
        }
      }
    }
  }
  return out;
}

std::vector<IsoClass> primitives_upto(int n, const Catalog& cat) {
  std::vector<IsoClass> out;
  for (int d = 1; d <= n; ++d) {
    for (const IsoClass& c : cat.at_degree(d)) {
      if (class_components(c).size() == 1) out.push_back(c);
    }
  }
  return out;
}

namespace {

TensorLin3 coproduct_left(const TensorLin& t) {
  TensorLin3 out;
  for (const auto& [pair, x] : t) {
    for (const auto& [a, b] : component_splits(pair.first)) {
      auto key = std::vector<IsoClass>{a, b, pair.second};
      out[key] += x;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

TensorLin3 coproduct_right(const TensorLin& t) {
  TensorLin3 out;
  for (const auto& [pair, x] : t) {
    for (const auto& [a, b] : component_splits(pair.second)) {
      auto key = std::vector<IsoClass>{pair.first, a, b};
      out[key] += x;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

}  // namespace

HopfReport check_hopf(int nmax, const Catalog& cat) {
  HopfReport rep;
  auto require = [&rep](bool ok, const std::string& what) {
    rep.checks++;
    if (!ok) {
      rep.failures++;
      rep.notes.push_back(what);
    }
  };
  const IsoClass zero = canonical_form(zero_matroid());
  const IsoLin unit = delta(zero);

  std::vector<IsoClass> all;
  for (int d = 0; d <= nmax; ++d) {
    for (const IsoClass& c : cat.at_degree(d)) all.push_back(c);
  }

  for (const IsoClass& c : all) {
    const IsoLin x = delta(c);
    require(hall_product(unit, x, cat) == x, "left unit law fails at " + canon_hex(c));
    require(hall_product(x, unit, cat) == x, "right unit law fails at " + canon_hex(c));

    TensorLin cop = hall_coproduct(x);
    // counit laws
    IsoLin left_counit, right_counit;
    for (const auto& [pair, v] : cop) {
      if (pair.first == zero) left_counit.add(pair.second, v);
      if (pair.second == zero) right_counit.add(pair.first, v);
    }
    require(left_counit == x, "left counit law fails at " + canon_hex(c));
    require(right_counit == x, "right counit law fails at " + canon_hex(c));
    // cocommutativity
    TensorLin swapped;
    for (const auto& [pair, v] : cop) tensor_add(swapped, pair.second, pair.first, v);
    require(swapped == cop, "coproduct not cocommutative at " + canon_hex(c));
    // coassociativity
    require(coproduct_left(cop) == coproduct_right(cop),
            "coproduct not coassociative at " + canon_hex(c));
    // primitive space: delta of c is primitive iff c is connected
    TensorLin primitive_part = cop;
    auto drop = [&](const IsoClass& a, const IsoClass& b) {
      tensor_add(primitive_part, a, b, -1);
    };
    drop(c, zero);
    drop(zero, c);
    bool is_primitive = primitive_part.empty();
    bool is_connected = class_components(c).size() == 1;
    require(is_primitive == is_connected,
            "primitivity disagrees with connectedness at " + canon_hex(c));
  }

  // associativity over ordered basis triples within the degree budget
  for (const IsoClass& c1 : all) {
    for (const IsoClass& c2 : all) {
      if (c1.degree + c2.degree > nmax) continue;
      for (const IsoClass& c3 : all) {
        if (c1.degree + c2.degree + c3.degree > nmax) continue;
        IsoLin lhs = hall_product(hall_product(delta(c1), delta(c2), cat), delta(c3), cat);
        IsoLin rhs = hall_product(delta(c1), hall_product(delta(c2), delta(c3), cat), cat);
        require(lhs == rhs, "associativity fails at (" + canon_hex(c1) + ", " + canon_hex(c2) +
                                ", " + canon_hex(c3) + ")");
      }
    }
  }

  // bialgebra compatibility on basis pairs
  for (const IsoClass& c1 : all) {
    for (const IsoClass& c2 : all) {
      if (c1.degree + c2.degree > nmax) continue;
      TensorLin lhs = hall_coproduct(hall_product(delta(c1), delta(c2), cat));
      TensorLin rhs = tensor_product(hall_coproduct(delta(c1)), hall_coproduct(delta(c2)), cat);
      require(lhs == rhs, "coproduct/product compatibility fails at (" + canon_hex(c1) + ", " +
                              canon_hex(c2) + ")");
    }
  }

  // grading: product support lands in the componentwise degree sum
  for (const IsoClass& c1 : all) {
    for (const IsoClass& c2 : all) {
      if (c1.degree + c2.degree > nmax) continue;
      Degree expected{degree_of(c1).rank + degree_of(c2).rank,
                      degree_of(c1).corank + degree_of(c2).corank};
      IsoLin prod = hall_product(delta(c1), delta(c2), cat);
      bool graded = true;
      for (const auto& [b, v] : prod.terms()) {
        if (!(degree_of(b) == expected)) graded = false;
      }
      require(graded, "grading violated at (" + canon_hex(c1) + ", " + canon_hex(c2) + ")");
    }
  }

  return rep;
}

}  // namespace mhall

#include "mhall/canonical.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

struct RawKey {
  int degree;
  std::vector<Mask> flats;
  bool operator==(const RawKey&) const = default;
};

struct RawKeyHash {
  std::size_t operator()(const RawKey& k) const {
    std::size_t h = std::hash<int>()(k.degree);
    for (Mask f : k.flats) h = h * 1000003u + f;
    return h;
  }
};

struct CanonEntry {
  IsoClass cls;
  std::vector<int> perm;
};

// Raw flat list -> canonical data. Reads dominate; writes are idempotent, so
// a lost race only recomputes.
class CanonCache {
 public:
  const CanonEntry& get(const PointedMatroid& m) {
    RawKey key{m.degree(), m.flats()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto entry = std::make_unique<CanonEntry>(compute(m));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(std::move(key), std::move(entry));
    return *it->second;
  }

 private:
  static CanonEntry compute(const PointedMatroid& m) {
    const int n = m.degree();
    std::vector<int> source(n);  // source[k] = element placed at position k+1
    std::iota(source.begin(), source.end(), 1);

    std::vector<int> perm(n + 1), best_perm(n + 1);
    std::vector<Mask> best;
    std::vector<Mask> scratch;
    do {
      perm[0] = 0;
      for (int k = 0; k < n; ++k) perm[source[k]] = k + 1;
      scratch = remap_flats(m.flats(), perm);
      if (best.empty() || scratch < best) {
        best = scratch;
        best_perm = perm;
      }
    } while (std::next_permutation(source.begin(), source.end()));

    IsoClass cls{n, m.rank(), std::move(best)};
    return CanonEntry{std::move(cls), std::move(best_perm)};
  }

  std::mutex mu_;
  std::unordered_map<RawKey, std::unique_ptr<CanonEntry>, RawKeyHash> map_;
};

CanonCache& cache() {
  static CanonCache c;
  return c;
}

}  // namespace

std::size_t IsoClassHash::operator()(const IsoClass& c) const {
  std::size_t h = std::hash<int>()(c.degree);
  for (Mask f : c.flats) h = h * 1000003u + f;
  return h;
}

std::vector<Mask> remap_flats(const std::vector<Mask>& flats, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(flats.size());
  for (Mask f : flats) {
    Mask g = 0;
    for (int i : bits_of(f)) g = with_bit(g, perm[i]);
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsoClass canonical_form(const PointedMatroid& m) { return cache().get(m).cls; }

std::vector<int> canonical_permutation(const PointedMatroid& m) { return cache().get(m).perm; }

std::optional<std::vector<int>> find_isomorphism(const PointedMatroid& a,
                                                 const PointedMatroid& b) {
  const CanonEntry& ea = cache().get(a);
  const CanonEntry& eb = cache().get(b);
  if (!(ea.cls == eb.cls)) return std::nullopt;
  std::vector<int> inv_b(eb.perm.size());
  for (std::size_t i = 0; i < eb.perm.size(); ++i) inv_b[eb.perm[i]] = static_cast<int>(i);
  std::vector<int> out(ea.perm.size());
  for (std::size_t i = 0; i < ea.perm.size(); ++i) out[i] = inv_b[ea.perm[i]];
  return out;
}

long automorphism_count(const PointedMatroid& m) {
  const int n = m.degree();
  std::vector<int> source(n);
  std::iota(source.begin(), source.end(), 1);
  std::vector<int> perm(n + 1);
  long count = 0;
  do {
    perm[0] = 0;
    for (int k = 0; k < n; ++k) perm[source[k]] = k + 1;
    if (remap_flats(m.flats(), perm) == m.flats()) ++count;
  } while (std::next_permutation(source.begin(), source.end()));
  return count;
}

PointedMatroid matroid_of(const IsoClass& c) {
  return PointedMatroid::unchecked(GroundSet::numbered(c.degree), c.flats);
}

std::string canon_hex(const IsoClass& c) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(c.flats.size() * 5);
  for (Mask f : c.flats) {
    for (int shift = 16; shift >= 0; shift -= 4) out += digits[(f >> shift) & 0xF];
  }
  return out;
}

IsoClass parse_canon_hex(const std::string& hex) {
  if (hex.empty() || hex.size() % 5 != 0) {
    throw ParseError("canonical hex string must be a multiple of 5 digits");
  }
  std::vector<Mask> flats;
  for (std::size_t i = 0; i < hex.size(); i += 5) {
    Mask f = 0;
    for (std::size_t j = i; j < i + 5; ++j) {
      char ch = hex[j];
      int v = ch >= '0' && ch <= '9'   ? ch - '0'
              : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10
                                       : -1;
      if (v < 0) throw ParseError("bad hex digit in canonical string");
      f = (f << 4) | static_cast<Mask>(v);
    }
    flats.push_back(f);
  }
  Mask ground = flats.empty() ? kBasepointBit : *std::max_element(flats.begin(), flats.end());
  const int degree = popcount(ground) - 1;
  // Round-trip through the matroid to recover the rank (and to reject
  // non-canonical input on the way in).
  PointedMatroid m = PointedMatroid::from_flats(GroundSet::numbered(degree), flats);
  IsoClass c = canonical_form(m);
  if (canon_hex(c) != hex) throw ParseError("hex string is not in canonical form");
  return c;
}

}  // namespace mhall

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace oracle {
namespace {

using Mask = mhall::Mask;

std::vector<Mask> subsets_of_size(int n, int r) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) == r) out.push_back(s);
  }
  return out;
}

bool exchange_holds(const std::vector<Mask>& bases) {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask out = b1 & ~b2;
      while (out) {
        int x = std::countr_zero(out);
        out &= out - 1;
        bool found = false;
        Mask in = b2 & ~b1;
        while (in && !found) {
          int y = std::countr_zero(in);
          in &= in - 1;
          Mask swapped = (b1 & ~(Mask{1} << x)) | (Mask{1} << y);
          found = std::binary_search(bases.begin(), bases.end(), swapped);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<Mask> least_relabeling(const std::vector<Mask>& bases, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> mapped;
    mapped.reserve(bases.size());
    for (Mask b : bases) {
      Mask m = 0;
      Mask rest = b;
      while (rest) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        m |= Mask{1} << perm[x];
      }
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

long matroid_class_count(int n) {
  std::set<std::vector<Mask>> classes;
  for (int r = 0; r <= n; ++r) {
    std::vector<Mask> candidates = subsets_of_size(n, r);
    const int k = static_cast<int>(candidates.size());
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << k); ++family) {
      std::vector<Mask> bases;
      for (int i = 0; i < k; ++i) {
        if ((family >> i) & 1) bases.push_back(candidates[i]);
      }
      if (!exchange_holds(bases)) continue;
      classes.insert(least_relabeling(bases, n));
    }
  }
  return static_cast<long>(classes.size());
}

std::vector<Mask> flats_from_bases(int n, const std::vector<Mask>& bases) {
  auto rank = [&](Mask s) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, std::popcount(b & s));
    return best;
  };
  std::vector<Mask> flats;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool closed = true;
    const int rs = rank(s);
    for (int x = 0; x < n && closed; ++x) {
      if (!((s >> x) & 1) && rank(s | (Mask{1} << x)) == rs) closed = false;
    }
    if (closed) flats.push_back(s);
  }
  return flats;
}

bool isomorphic_by_search(const mhall::PointedMatroid& a, const mhall::PointedMatroid& b) {
  if (a.degree() != b.degree() || a.flats().size() != b.flats().size()) return false;
  const int n = a.degree();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    bool all_flats_match = true;
    for (Mask f : a.flats()) {
      Mask g = mhall::kBasepointBit;
      for (int i = 1; i <= n && all_flats_match; ++i) {
        if (mhall::has_bit(f, i)) g = mhall::with_bit(g, image[i - 1]);
      }
      if (!b.is_flat(g)) {
        all_flats_match = false;
        break;
      }
    }
    if (all_flats_match) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

bool flats_axioms_hold(const mhall::PointedMatroid& m) {
  const Mask full = m.full();
  auto sigma = [&](Mask s) {
    Mask acc = full;
    for (Mask f : m.flats()) {
      if ((s & ~f) == 0) acc &= f;
    }
    return acc;
  };
  for (Mask s = 0; s <= full; ++s) {
    Mask cs = sigma(s);
    if ((s & ~cs) != 0) return false;           // extensive
    if (sigma(cs) != cs) return false;          // idempotent
    for (Mask t = s;; t = (t + 1) | s) {        // monotone over supersets of s
      if (t > full) break;
      if ((cs & ~sigma(t)) != 0) return false;
      if (t == full) break;
    }
    for (int x = 0; x <= m.degree(); ++x) {
      Mask cx = sigma(s | (Mask{1} << x));
      Mask fresh = cx & ~cs;
      while (fresh) {
        int y = std::countr_zero(fresh);
        fresh &= fresh - 1;
        if (!mhall::has_bit(sigma(s | (Mask{1} << y)), x)) return false;  // exchange
      }
    }
  }
  return true;
}

}  // namespace oracle

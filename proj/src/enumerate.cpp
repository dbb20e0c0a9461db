#include "mhall/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

// Modular-cut search state over the flat lattice of one matroid. A modular
// cut is an up-closed set of flats containing the meet of every modular pair
// of its members; each cut corresponds to one way of attaching a new element.
struct CutSearch {
  const PointedMatroid& m;
  std::vector<Mask> flats;           // sorted by decreasing popcount
  std::vector<int> rank;             // rank of flats[i]
  std::vector<std::uint64_t> strict_supersets;  // over search order
  std::vector<std::uint64_t> modular;           // pair (i,j) is a modular pair
  std::vector<std::vector<std::uint8_t>> meet;  // index of flats[i] & flats[j]
  std::vector<std::uint64_t> covers;            // minimal strict superflats
  std::vector<std::uint64_t> cuts;

  explicit CutSearch(const PointedMatroid& matroid) : m(matroid) {
    flats = m.flats();
    if (flats.size() > 64) {
      throw ValidationError(ValidationError::Code::BoundExceeded,
                            "extension search supports at most 64 flats");
    }
    std::sort(flats.begin(), flats.end(), [](Mask a, Mask b) {
      return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
    });
    const int k = static_cast<int>(flats.size());
    auto index_of = [&](Mask f) {
      for (int i = 0; i < k; ++i) {
        if (flats[i] == f) return i;
      }
      return -1;
    };
    rank.resize(k);
    for (int i = 0; i < k; ++i) rank[i] = m.rank_of(flats[i]);
    strict_supersets.assign(k, 0);
    modular.assign(k, 0);
    covers.assign(k, 0);
    meet.assign(k, std::vector<std::uint8_t>(k, 0));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && subset_of(flats[i], flats[j])) {
          strict_supersets[i] |= std::uint64_t{1} << j;
        }
        meet[i][j] = static_cast<std::uint8_t>(index_of(flats[i] & flats[j]));
        int join_rank = m.rank_of(m.closure(flats[i] | flats[j]));
        if (rank[i] + rank[j] == join_rank + rank[meet[i][j]]) {
          modular[i] |= std::uint64_t{1} << j;
        }
      }
    }
    // covers: strict supersets with no other strict superset of i below them
    for (int i = 0; i < k; ++i) {
      for (std::uint64_t rest = strict_supersets[i]; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        bool minimal = true;
        for (std::uint64_t r2 = strict_supersets[i]; r2;) {
          int l = std::countr_zero(r2);
          r2 &= r2 - 1;
          if (l != j && subset_of(flats[l], flats[j])) {
            minimal = false;
            break;
          }
        }
        if (minimal) covers[i] |= std::uint64_t{1} << j;
      }
    }
    dfs(0, 0, 0, 0);
  }

  void dfs(int idx, std::uint64_t in, std::uint64_t out, std::uint64_t forced_in) {
    const int k = static_cast<int>(flats.size());
    if (idx == k) {
      cuts.push_back(in);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << idx;
    // include: all strict supersets (already decided) must be in
    if ((strict_supersets[idx] & ~in) == 0) {
      std::uint64_t forced = forced_in;
      bool ok = true;
      for (std::uint64_t rest = in & modular[idx]; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        int h = meet[idx][j];
        if (h == idx || (in >> h) & 1) continue;
        if ((out >> h) & 1) {
          ok = false;
          break;
        }
        forced |= std::uint64_t{1} << h;
      }
      if (ok) dfs(idx + 1, in | bit, out, forced);
    }
    if (!((forced_in >> idx) & 1)) dfs(idx + 1, in, out | bit, forced_in);
  }

  PointedMatroid extension(std::uint64_t cut) const {
    const int n = m.degree();
    const Mask newbit = Mask{1} << (n + 1);
    std::vector<Mask> out;
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if ((cut >> i) & 1) {
        out.push_back(flats[i] | newbit);
      } else {
        out.push_back(flats[i]);
        if ((covers[i] & cut) == 0) out.push_back(flats[i] | newbit);
      }
    }
    return PointedMatroid::unchecked(GroundSet::numbered(n + 1), std::move(out));
  }
};

std::vector<IsoClass> dedupe(std::vector<IsoClass> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

std::vector<IsoClass> extend_level(const std::vector<IsoClass>& level, bool parallel) {
  auto work = [](const IsoClass& c) {
    std::vector<IsoClass> out;
    PointedMatroid m = matroid_of(c);
    for (const PointedMatroid& ext : single_element_extensions(m)) {
      out.push_back(canonical_form(ext));
    }
    return dedupe(std::move(out));
  };
  std::vector<IsoClass> all;
  if (parallel && level.size() > 1) {
    std::vector<std::future<std::vector<IsoClass>>> futures;
    futures.reserve(level.size());
    for (const IsoClass& c : level) {
      futures.push_back(std::async(std::launch::async, work, std::cref(c)));
    }
    for (auto& f : futures) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    for (const IsoClass& c : level) {
      auto part = work(c);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return dedupe(std::move(all));
}

}  // namespace

std::vector<PointedMatroid> single_element_extensions(const PointedMatroid& m) {
  CutSearch search(m);
  std::vector<PointedMatroid> out;
  out.reserve(search.cuts.size());
  for (std::uint64_t cut : search.cuts) out.push_back(search.extension(cut));
  return out;
}

std::vector<IsoClass> enumerate_matroids(int n, const EnumerateOptions& opts) {
  if (n < 0 || n > opts.bound) {
    throw ValidationError(ValidationError::Code::BoundExceeded,
                          "degree " + std::to_string(n) + " exceeds the enumeration bound " +
                              std::to_string(opts.bound));
  }
  std::vector<IsoClass> level{canonical_form(zero_matroid())};
  for (int d = 1; d <= n; ++d) level = extend_level(level, opts.parallel);
  return level;
}

}  // namespace mhall

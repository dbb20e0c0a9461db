#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mhall {

// Subsets of a ground set are bit vectors; bit 0 is always the basepoint.
using Mask = std::uint32_t;

inline constexpr Mask kBasepointBit = 1u;

// Ground sets are capped at 16 non-basepoint elements (17 bits total).
inline constexpr int kMaxElements = 16;

constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
constexpr Mask with_bit(Mask m, int i) { return m | (Mask{1} << i); }
constexpr Mask without_bit(Mask m, int i) { return m & ~(Mask{1} << i); }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Full ground mask for n non-basepoint elements: bits 0..n.
constexpr Mask full_mask(int n) { return (Mask{1} << (n + 1)) - 1; }

// Position of index i within the compacted coordinates selected by keep.
constexpr int pos_in(Mask keep, int i) { return popcount(keep & ((Mask{1} << i) - 1)); }

// Repacks the bits of m selected by keep into contiguous low positions.
constexpr Mask compress_bits(Mask m, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; keep >> i; ++i) {
    if (has_bit(keep, i)) {
      if (has_bit(m, i)) out = with_bit(out, j);
      ++j;
    }
  }
  return out;
}

// All bit positions set in m, ascending.
inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Visits every submask of `m` (including 0 and m itself).
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace mhall

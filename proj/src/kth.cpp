#include "mhall/kth.hpp"

#include <algorithm>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

Mask compress_into(Mask subset, Mask keep) {
  Mask out = 0;
  for (int x : bits_of(subset)) out = with_bit(out, pos_in(keep, x));
  return out;
}

constexpr int kMaxFlagLength = 6;

}  // namespace

K0Class k0_class(const PointedMatroid& m) {
  return K0Class{m.rank(), m.degree() - m.rank()};
}

std::string decompose(const PointedMatroid& m) {
  std::string out;
  PointedMatroid current = m;
  while (current.degree() > 0) {
    out += current.is_loop(1) ? 'b' : 'a';
    current = current.contract_by(with_bit(0, 1));
  }
  return out;
}

FlagGrid::FlagGrid(PointedMatroid base, std::vector<Mask> chain)
    : base_(std::move(base)), chain_(std::move(chain)) {
  Mask prev = 0;
  for (Mask s : chain_) {
    if (!subset_of(prev, s) || !subset_of(s, base_.tilde()) || has_bit(s, 0)) {
      throw ValidationError(ValidationError::Code::BadNesting,
                            "flag chain must be nested inside the non-basepoint elements");
    }
    prev = s;
  }
  const int n = length();
  grid_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    grid_[i].reserve(n + 1 - i);
    for (int j = i; j <= n; ++j) {
      if (i == j) {
        grid_[i].push_back(zero_matroid());
        continue;
      }
      const Mask sj = chain_[j - 1];
      const Mask si = i == 0 ? 0 : chain_[i - 1];
      PointedMatroid restricted = base_.restrict_to(sj);
      grid_[i].push_back(restricted.contract_by(compress_into(si, sj | kBasepointBit)));
    }
  }
}

const PointedMatroid& FlagGrid::at(int i, int j) const {
  if (i < 0 || j < i || j > length()) {
    throw ValidationError(ValidationError::Code::IndexOutOfRange, "grid index out of range");
  }
  return grid_[i][j - i];
}

std::vector<FlagGrid> flags(const PointedMatroid& m, int n) {
  if (n < 0 || n > kMaxFlagLength) {
    throw ValidationError(ValidationError::Code::BoundExceeded,
                          "flag length " + std::to_string(n) + " exceeds the supported bound " +
                              std::to_string(kMaxFlagLength));
  }
  // Each element independently picks the first level containing it (or none).
  std::vector<int> level(m.degree(), 0);
  std::vector<FlagGrid> out;
  while (true) {
    std::vector<Mask> chain(n, 0);
    for (int e = 0; e < m.degree(); ++e) {
      for (int k = level[e]; k >= 1; --k) chain[n - k] = with_bit(chain[n - k], e + 1);
    }
    out.emplace_back(m, chain);
    int e = 0;
    while (e < m.degree() && level[e] == n) level[e++] = 0;
    if (e == m.degree()) break;
    ++level[e];
  }
  return out;
}

FlagGrid face(const FlagGrid& f, int k) {
  const int n = f.length();
  if (k < 0 || k > n || n == 0) {
    throw ValidationError(ValidationError::Code::IndexOutOfRange,
                          "face index must lie in [0, n] with n >= 1");
  }
  if (k == 0) {
    const Mask s1 = f.chain()[0];
    const Mask keep = f.base().full() & ~s1;
    PointedMatroid rebased = f.base().contract_by(s1);
    std::vector<Mask> chain;
    for (int i = 1; i < n; ++i) chain.push_back(compress_into(f.chain()[i] & ~s1, keep));
    return FlagGrid(std::move(rebased), std::move(chain));
  }
  std::vector<Mask> chain;
  for (int i = 0; i < n; ++i) {
    if (i != k - 1) chain.push_back(f.chain()[i]);
  }
  return FlagGrid(f.base(), std::move(chain));
}

FlagGrid degeneracy(const FlagGrid& f, int k) {
  const int n = f.length();
  if (k < 0 || k > n) {
    throw ValidationError(ValidationError::Code::IndexOutOfRange,
                          "degeneracy index must lie in [0, n]");
  }
  std::vector<Mask> chain;
  if (k == 0) chain.push_back(0);
  for (int i = 0; i < n; ++i) {
    chain.push_back(f.chain()[i]);
    if (i == k - 1) chain.push_back(f.chain()[i]);
  }
  return FlagGrid(f.base(), std::move(chain));
}

bool check_grid(const FlagGrid& f) {
  const int n = f.length();
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // square with corners A(i,j), A(i,j+1) / A(i+1,j), A(i+1,j+1)
      const Mask si = i == 0 ? 0 : f.chain()[i - 1];
      const Mask si1 = f.chain()[i];
      const Mask sj = f.chain()[j - 1];
      const Mask sj1 = f.chain()[j];
      const Mask keep_top = (sj1 & ~si) | kBasepointBit;     // ground of A(i, j+1)
      const Mask keep_bot = (sj1 & ~si1) | kBasepointBit;    // ground of A(i+1, j+1)
      StrongMap top = StrongMap::inclusion(f.at(i, j + 1), compress_into(sj & ~si, keep_top));
      StrongMap bottom =
          StrongMap::inclusion(f.at(i + 1, j + 1), compress_into(sj & ~si1, keep_bot));
      StrongMap left =
          StrongMap::contraction(f.at(i, j), compress_into(si1 & ~si, (sj & ~si) | kBasepointBit));
      StrongMap right = StrongMap::contraction(f.at(i, j + 1), compress_into(si1 & ~si, keep_top));
      Square sq{top, bottom, left, right};
      if (!check_square(sq).all()) return false;
    }
  }
  return true;
}

}  // namespace mhall

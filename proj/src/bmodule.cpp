#include "mhall/bmodule.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

constexpr int kMaxGenerators = 20;

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool BSubmodule::contains(Mask v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

BSubmodule span(GroundSet ambient, std::vector<Mask> generators) {
  const Mask full = ambient.full();
  for (Mask g : generators) {
    if (!subset_of(g, full)) {
      throw ValidationError(ValidationError::Code::AmbientMismatch,
                            "generator uses coordinates outside the ambient module");
    }
  }
  if (static_cast<int>(generators.size()) > kMaxGenerators) {
    throw ValidationError(ValidationError::Code::GeneratorLimitExceeded,
                          "more than " + std::to_string(kMaxGenerators) +
                              " generators; join closure would not stay materializable");
  }
  std::vector<Mask> elements{0};
  for (Mask g : generators) {
    std::size_t count = elements.size();
    for (std::size_t i = 0; i < count; ++i) elements.push_back(elements[i] | g);
    elements = sorted_unique(std::move(elements));
  }
  return BSubmodule{std::move(ambient), std::move(generators), std::move(elements)};
}

BSubmodule cocircuit_span(const PointedMatroid& m) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::string>, std::vector<Mask>>,
                  std::unique_ptr<BSubmodule>>
      memo;
  auto key = std::make_pair(m.ground().labels(), m.flats());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<BSubmodule>(span(m.ground(), m.cocircuits()));
  std::lock_guard<std::mutex> lock(mu);
  return *memo.emplace(std::move(key), std::move(value)).first->second;
}

BSubmodule project(const BSubmodule& lm, Mask keep) {
  if (!subset_of(keep, lm.ambient.full())) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "projection coordinates are not a subset of the ambient");
  }
  std::vector<Mask> gens;
  gens.reserve(lm.generators.size());
  for (Mask g : lm.generators) gens.push_back(compress_bits(g & keep, keep));
  std::vector<Mask> elements;
  elements.reserve(lm.elements.size());
  for (Mask v : lm.elements) elements.push_back(compress_bits(v & keep, keep));
  return BSubmodule{lm.ambient.keep(keep), sorted_unique(std::move(gens)),
                    sorted_unique(std::move(elements))};
}

BSubmodule coordinate_section(const BSubmodule& lm, Mask s) {
  if (!subset_of(s, lm.ambient.full() & ~kBasepointBit)) {
    throw ValidationError(ValidationError::Code::SubsetOutOfRange,
                          "section coordinates must be non-basepoint ambient coordinates");
  }
  const Mask keep = lm.ambient.full() & ~s;
  std::vector<Mask> elements;
  for (Mask v : lm.elements) {
    if ((v & s) == 0) elements.push_back(compress_bits(v, keep));
  }
  return BSubmodule{lm.ambient.keep(keep), {}, sorted_unique(std::move(elements))};
}

bool dual_strong_check(const std::vector<int>& f, const PointedMatroid& n,
                       const PointedMatroid& m) {
  BSubmodule lm = cocircuit_span(m);
  BSubmodule ln = cocircuit_span(n);
  for (Mask v : lm.elements) {
    Mask pullback = 0;
    for (int j = 0; j < n.ground().size(); ++j) {
      if (has_bit(v, f[j])) pullback = with_bit(pullback, j);
    }
    if (!ln.contains(pullback)) return false;
  }
  return true;
}

bool verify_minor_correspondence(const PointedMatroid& m, Mask s) {
  BSubmodule lm = cocircuit_span(m);
  BSubmodule restricted = cocircuit_span(m.restrict_to(s));
  if (!(project(lm, s | kBasepointBit) == restricted)) return false;
  BSubmodule contracted = cocircuit_span(m.contract_by(s));
  return coordinate_section(lm, s) == contracted;
}

std::string dump(const BSubmodule& lm) {
  std::string out;
  for (Mask v : lm.elements) {
    for (int i = 0; i < lm.ambient.size(); ++i) out += has_bit(v, i) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace mhall

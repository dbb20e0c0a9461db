#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhall/bits.hpp"

namespace mhall {

// An ordered pointed label set. Index 0 is the basepoint, written "*".
class GroundSet {
 public:
  GroundSet();  // just the basepoint
  explicit GroundSet(std::vector<std::string> labels);

  // "*","1",...,"n"
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  int degree() const { return size() - 1; }
  Mask full() const { return full_mask(degree()); }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  // Ground set keeping only the positions of `keep` (must include bit 0),
  // in the original order.
  GroundSet keep(Mask keep_mask) const;

  std::vector<std::string> labels_of(Mask m) const;
  Mask mask_of(const std::vector<std::string>& labels) const;  // throws ParseError

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace mhall

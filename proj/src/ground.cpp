#include "mhall/ground.hpp"

#include <algorithm>
#include <unordered_set>

#include "mhall/errors.hpp"

namespace mhall {

GroundSet::GroundSet() : labels_{"*"} {}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_[0] != "*") {
    throw ValidationError(ValidationError::Code::BadLabels,
                          "ground set must start with the basepoint \"*\"");
  }
  if (degree() > kMaxElements) {
    throw ValidationError(ValidationError::Code::BadLabels,
                          "ground set exceeds the supported " +
                              std::to_string(kMaxElements) + " non-basepoint elements");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second) {
      throw ValidationError(ValidationError::Code::BadLabels,
                            "ground-set labels must be nonempty and distinct (offender: \"" + l + "\")");
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels{"*"};
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

GroundSet GroundSet::keep(Mask keep_mask) const {
  std::vector<std::string> kept;
  for (int i = 0; i < size(); ++i) {
    if (has_bit(keep_mask, i)) kept.push_back(labels_[i]);
  }
  return GroundSet(std::move(kept));
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (has_bit(m, i)) out.push_back(labels_[i]);
  }
  return out;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    auto idx = index_of(l);
    if (!idx) throw ParseError("unknown element label \"" + l + "\"");
    m = with_bit(m, *idx);
  }
  return m;
}

}  // namespace mhall

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mhall/canonical.hpp"
#include "mhall/enumerate.hpp"

namespace mhall {

// Per-degree lists of isomorphism classes, sorted by canonical form. The
// text format is stable byte-for-byte: a two-line manifest, then one block
// per degree with a checksummed `<degree> <rank> <canon-hex>` line per class.
class Catalog {
 public:
  static Catalog build(int bound, const EnumerateOptions& opts = {});
  static Catalog load(std::istream& in);
  static Catalog load_file(const std::string& path);

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  int bound() const { return bound_; }
  const std::vector<IsoClass>& at_degree(int d) const;
  bool contains(const IsoClass& c) const;
  std::vector<long> counts() const;

 private:
  Catalog() = default;
  int bound_ = -1;
  std::vector<std::vector<IsoClass>> by_degree_;
};

}  // namespace mhall

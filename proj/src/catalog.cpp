#include "mhall/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mhall/errors.hpp"

namespace mhall {
namespace {

constexpr const char* kMagic = "mhall-catalog v1";

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string class_line(const IsoClass& c) {
  return std::to_string(c.degree) + " " + std::to_string(c.rank) + " " + canon_hex(c);
}

}  // namespace

Catalog Catalog::build(int bound, const EnumerateOptions& opts) {
  if (bound < 0 || bound > opts.bound) {
    throw ValidationError(ValidationError::Code::BoundExceeded,
                          "catalog bound " + std::to_string(bound) + " exceeds the enumeration bound " +
                              std::to_string(opts.bound));
  }
  Catalog cat;
  cat.bound_ = bound;
  std::vector<IsoClass> level{canonical_form(zero_matroid())};
  cat.by_degree_.push_back(level);
  for (int d = 1; d <= bound; ++d) {
    level = enumerate_matroids(d, EnumerateOptions{d, opts.parallel});
    cat.by_degree_.push_back(level);
  }
  return cat;
}

const std::vector<IsoClass>& Catalog::at_degree(int d) const {
  if (d < 0 || d > bound_) {
    throw ValidationError(ValidationError::Code::DegreeBoundExceeded,
                          "degree " + std::to_string(d) + " is outside the catalog bound " +
                              std::to_string(bound_));
  }
  return by_degree_[d];
}

bool Catalog::contains(const IsoClass& c) const {
  if (c.degree < 0 || c.degree > bound_) return false;
  const auto& level = by_degree_[c.degree];
  return std::binary_search(level.begin(), level.end(), c);
}

std::vector<long> Catalog::counts() const {
  std::vector<long> out;
  for (const auto& level : by_degree_) out.push_back(static_cast<long>(level.size()));
  return out;
}

void Catalog::save(std::ostream& out) const {
  out << kMagic << "\n";
  out << "bound " << bound_ << "\n";
  for (int d = 0; d <= bound_; ++d) {
    std::string block;
    for (const IsoClass& c : by_degree_[d]) block += class_line(c) + "\n";
    out << "degree " << d << " count " << by_degree_[d].size() << " checksum "
        << fnv1a_hex(block) << "\n";
    out << block;
  }
}

void Catalog::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open catalog file for writing: " + path);
  save(out);
}

Catalog Catalog::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw ParseError("not a catalog file (bad magic line)");
  }
  int bound = -1;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "bound %d", &bound) != 1 || bound < 0) {
    throw ParseError("catalog file is missing the bound line");
  }
  Catalog cat;
  cat.bound_ = bound;
  for (int d = 0; d <= bound; ++d) {
    unsigned long count = 0;
    char checksum[64] = {0};
    int degree = -1;
    if (!std::getline(in, line) ||
        std::sscanf(line.c_str(), "degree %d count %lu checksum %63s", &degree, &count, checksum) != 3 ||
        degree != d) {
      throw ParseError("catalog block header for degree " + std::to_string(d) + " is malformed");
    }
    std::string block;
    std::vector<IsoClass> level;
    for (unsigned long i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw ParseError("catalog file truncated");
      block += line + "\n";
      std::istringstream ls(line);
      int cdeg = -1, crank = -1;
      std::string hex;
      if (!(ls >> cdeg >> crank >> hex) || cdeg != d) {
        throw ParseError("bad catalog class line: " + line);
      }
      IsoClass c = parse_canon_hex(hex);
      if (c.rank != crank) throw ParseError("catalog rank mismatch on line: " + line);
      level.push_back(std::move(c));
    }
    if (fnv1a_hex(block) != checksum) {
      throw ParseError("checksum mismatch in catalog degree block " + std::to_string(d));
    }
    if (!std::is_sorted(level.begin(), level.end())) {
      throw ParseError("catalog degree block " + std::to_string(d) + " is not sorted");
    }
    cat.by_degree_.push_back(std::move(level));
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open catalog file: " + path);
  return load(in);
}

}  // namespace mhall

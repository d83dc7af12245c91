#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "msetpart/bigint.hpp"

namespace msetpart {

// Integer partition with largest part <= bound, in multiplicity notation:
// multiplicities[j-1] copies of part j. The empty partition has all
// multiplicities zero.
struct BoundedPartition {
  unsigned bound = 0;
  std::vector<unsigned> multiplicities;  // length == bound

  unsigned size() const {
    unsigned s = 0;
    for (unsigned j = 1; j <= bound; ++j) s += j * multiplicities[j - 1];
    return s;
  }

  bool empty() const {
    for (unsigned m : multiplicities) {
      if (m != 0) return false;
    }
    return true;
  }

  bool operator==(const BoundedPartition& o) const {
    return bound == o.bound && multiplicities == o.multiplicities;
  }
};

// All partitions of `size` with parts <= maxpart, each exactly once, in
// ascending lexicographic order of the multiplicity vectors.
inline std::vector<BoundedPartition> bounded_partitions(unsigned size, unsigned maxpart) {
  if (maxpart == 0) throw std::invalid_argument("maxpart must be positive");
  std::vector<BoundedPartition> out;
  std::vector<unsigned> m(maxpart, 0);
  auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
    if (part == maxpart) {
      if (remaining % part == 0) {
        m[part - 1] = remaining / part;
        out.push_back(BoundedPartition{maxpart, m});
        m[part - 1] = 0;
      }
      return;
    }
    for (unsigned mp = 0; mp * part <= remaining; ++mp) {
      m[part - 1] = mp;
      self(self, part + 1, remaining - mp * part);
    }
    m[part - 1] = 0;
  };
  rec(rec, 1, size);
  return out;
}

}  // namespace msetpart

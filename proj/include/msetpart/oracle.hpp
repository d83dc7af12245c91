#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msetpart/bigint.hpp"
#include "msetpart/engine.hpp"
#include "msetpart/polynomial.hpp"

namespace msetpart {

// A small multiset over labels 1..t, one multiplicity per distinct label.
struct MultisetSpec {
  std::vector<unsigned> multiplicities;  // entry i-1 is the multiplicity of label i

  static MultisetSpec from_profile(const MultiplicityProfile& profile) {
    MultisetSpec spec;
    for (std::size_t i = 0; i < profile.m.size(); ++i) {
      for (unsigned k = 0; k < profile.m[i]; ++k) {
        spec.multiplicities.push_back(static_cast<unsigned>(i + 1));
      }
    }
    return spec;
  }

  std::size_t element_total() const {
    std::size_t total = 0;
    for (unsigned m : multiplicities) total += m;
    return total;
  }
};

namespace detail {

// Canonical block order: larger sets first, ties by content.
inline bool block_before(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace detail

// A multiset of sets whose union is the input multiset, stored canonically:
// each block sorted, blocks ordered by detail::block_before. No block may
// contain two copies of the same label.
struct Arrangement {
  std::vector<std::vector<unsigned>> blocks;

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), detail::block_before);
  }

  // Multiplicity of each distinct block; canonical form keeps equal blocks
  // adjacent, so a single sweep suffices.
  std::vector<std::pair<std::vector<unsigned>, unsigned>> block_multiplicities() const {
    std::vector<std::pair<std::vector<unsigned>, unsigned>> out;
    for (const auto& b : blocks) {
      if (!out.empty() && out.back().first == b) {
        ++out.back().second;
      } else {
        out.emplace_back(b, 1u);
      }
    }
    return out;
  }

  bool operator==(const Arrangement& o) const { return blocks == o.blocks; }
  bool operator<(const Arrangement& o) const { return blocks < o.blocks; }
};

inline constexpr std::size_t kDefaultOracleCap = 12;

// Ground-truth enumeration of every arrangement of the given multiset,
// deterministic order, each arrangement exactly once.
//
// Elements are inserted one label at a time: the c copies of a label go
// into pairwise distinct existing blocks and/or fresh singletons, in every
// possible way; canonical-form deduplication after each label removes the
// collisions that identical blocks create. Desk scale only, guarded by a
// hard element cap.
inline std::vector<Arrangement> enumerate_arrangements(const MultisetSpec& spec,
                                                       std::size_t max_elements = kDefaultOracleCap) {
  if (spec.element_total() > max_elements) {
    throw std::invalid_argument("multiset has " + std::to_string(spec.element_total()) +
                                " elements, above the safety cap of " +
                                std::to_string(max_elements));
  }
  for (unsigned m : spec.multiplicities) {
    if (m == 0) throw std::invalid_argument("element multiplicities must be positive");
  }

  std::set<std::vector<std::vector<unsigned>>> current;
  current.emplace();  // the empty arrangement
  for (std::size_t label_idx = 0; label_idx < spec.multiplicities.size(); ++label_idx) {
    const unsigned label = static_cast<unsigned>(label_idx + 1);
    const unsigned copies = spec.multiplicities[label_idx];
    std::set<std::vector<std::vector<unsigned>>> next;
    for (const auto& blocks : current) {
      const std::size_t nblocks = blocks.size();
      const unsigned max_into_existing =
          static_cast<unsigned>(std::min<std::size_t>(copies, nblocks));
      for (unsigned k = 0; k <= max_into_existing; ++k) {
        // choose k distinct existing blocks to receive one copy each
        std::vector<std::size_t> pick(k);
        for (unsigned i = 0; i < k; ++i) pick[i] = i;
        while (true) {
          Arrangement candidate{blocks};
          for (std::size_t idx : pick) candidate.blocks[idx].push_back(label);
          for (unsigned s = 0; s < copies - k; ++s) candidate.blocks.push_back({label});
          candidate.canonicalize();
          next.insert(std::move(candidate.blocks));
          // advance to the next k-combination of [0, nblocks)
          if (k == 0) break;
          std::size_t pos = k;
          while (pos > 0 && pick[pos - 1] == nblocks - (k - (pos - 1))) --pos;
          if (pos == 0) break;
          ++pick[pos - 1];
          for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
    current = std::move(next);
  }

  std::vector<Arrangement> out;
  out.reserve(current.size());
  for (auto& blocks : current) out.push_back(Arrangement{blocks});
  return out;
}

// Sum over arrangements of prod_i z_i^{a_i} with a_i the number of distinct
// blocks occurring exactly i times. Independent of the operator machinery;
// this is the reference every engine result is validated against.
inline SparsePolynomial oracle_weight_polynomial(const MultisetSpec& spec, std::size_t arity,
                                                 std::size_t max_elements = kDefaultOracleCap) {
  if (arity == 0) throw std::invalid_argument("arity must be positive");
  const auto arrangements = enumerate_arrangements(spec, max_elements);
  SparsePolynomial total(arity);
  for (const auto& arr : arrangements) {
    ExponentVector e(arity, 0);
    for (const auto& [block, mult] : arr.block_multiplicities()) {
      if (mult > arity) {
        throw std::invalid_argument("arity " + std::to_string(arity) +
                                    " too small: a block occurs " + std::to_string(mult) +
                                    " times");
      }
      e[mult - 1] += 1;
    }
    total.add_term(e, Rational(1));
  }
  return total;
}

// B_0..B_n_max via the binomial-sum recurrence
// B_n = sum_{i=0}^{n-1} C(n-1, i) B_i. Shares nothing with the operator
// route, so it doubles as an independent reference for the r = 1 case.
inline std::vector<Integer> bell_reference(unsigned n_max) {
  std::vector<Integer> bell;
  bell.reserve(n_max + 1);
  bell.push_back(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    Integer sum = 0;
    Integer binom = 1;  // C(n-1, i), updated incrementally
    for (unsigned i = 0; i < n; ++i) {
      sum += binom * bell[i];
      binom = binom * (n - 1 - i) / (i + 1);
    }
    bell.push_back(sum);
  }
  return bell;
}

}  // namespace msetpart

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "msetpart/bigint.hpp"

namespace msetpart {

// Triangular table of Stirling numbers of the second kind, built from
// S(n,k) = S(n-1,k-1) + k*S(n-1,k). Immutable after construction and
// shareable across threads; row sums are the Bell numbers.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max) : rows_(n_max + 1) {
    rows_[0] = {Integer(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
      rows_[n].assign(n + 1, Integer(0));
      for (unsigned k = 1; k <= n; ++k) {
        rows_[n][k] = rows_[n - 1][k - 1];
        if (k <= n - 1) rows_[n][k] += k * rows_[n - 1][k];
      }
    }
  }

  unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

  const Integer& at(unsigned n, unsigned k) const {
    if (n >= rows_.size() || k > n) throw std::invalid_argument("Stirling index out of range");
    return rows_[n][k];
  }

  Integer bell(unsigned n) const {
    if (n >= rows_.size()) throw std::invalid_argument("Stirling table too small");
    Integer sum = 0;
    for (const Integer& v : rows_[n]) sum += v;
    return sum;
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

inline StirlingTable build_stirling(unsigned n_max) { return StirlingTable(n_max); }

// Deterministic randomness for the sampler: a seeded 64-bit word stream
// plus an exact uniform draw below an arbitrary-precision bound. All
// decisions reduce to integer comparisons; no floating point is involved.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_word() { return gen_(); }

  // Uniform integer in [0, bound) by rejection: assemble exactly the bits
  // needed to cover bound-1 and redraw until the value lands below bound.
  Integer uniform_below(const Integer& bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    while (true) {
      Integer value = 0;
      for (unsigned w = 0; w < words; ++w) {
        std::uint64_t word = gen_();
        if (w == 0 && top_bits < 64) word >>= (64 - top_bits);
        value <<= (w == 0 ? top_bits : 64);
        value |= word;
      }
      if (value < bound) return value;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Partition of {1..n} into disjoint nonempty blocks, kept sorted by each
// block's minimal element.
struct SetPartition {
  std::vector<std::vector<unsigned>> blocks;
};

namespace detail {

inline void sample_given_k_rec(const StirlingTable& table, unsigned n, unsigned k,
                               RandomSource& rng, std::vector<std::vector<unsigned>>& blocks) {
  if (n == 0) return;
  // Loaded coin: heads with probability S(n-1,k-1)/S(n,k) means element n
  // forms its own block; tails sends it into one of the k blocks of a
  // recursively drawn partition, chosen by a fair k-sided die.
  const Integer u = rng.uniform_below(table.at(n, k));
  if (u < table.at(n - 1, k - 1)) {
    sample_given_k_rec(table, n - 1, k - 1, rng, blocks);
    blocks.push_back({n});
  } else {
    sample_given_k_rec(table, n - 1, k, rng, blocks);
    const Integer die = rng.uniform_below(Integer(k));
    blocks[static_cast<std::size_t>(die)].push_back(n);
  }
}

}  // namespace detail

// Uniformly random partition of {1..n} into exactly k blocks.
// Elements are inserted in increasing order, so blocks stay sorted by
// minimal element and the die index is well defined.
inline SetPartition sample_given_k(const StirlingTable& table, unsigned n, unsigned k,
                                   RandomSource& rng) {
  if (k == 0 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (table.n_max() < n) throw std::invalid_argument("Stirling table too small for n");
  SetPartition partition;
  detail::sample_given_k_rec(table, n, k, rng, partition.blocks);
  return partition;
}

// Uniformly random partition of {1..n}: draws the block count k with
// probability S(n,k)/B_n, then delegates to sample_given_k.
inline SetPartition sample_uniform(const StirlingTable& table, unsigned n, RandomSource& rng) {
  if (n == 0) return SetPartition{};
  if (table.n_max() < n) throw std::invalid_argument("Stirling table too small for n");
  Integer u = rng.uniform_below(table.bell(n));
  for (unsigned k = 1; k <= n; ++k) {
    const Integer& s = table.at(n, k);
    if (u < s) return sample_given_k(table, n, k, rng);
    u -= s;
  }
  throw std::logic_error("die roll exceeded Bell number");  // unreachable
}

}  // namespace msetpart

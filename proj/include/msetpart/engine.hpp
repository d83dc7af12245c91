#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msetpart/bigint.hpp"
#include "msetpart/operators.hpp"
#include "msetpart/polynomial.hpp"

namespace msetpart {

// A multiset described by how often its distinct elements repeat:
// m[i-1] distinct elements each appearing i times.
struct MultiplicityProfile {
  std::vector<unsigned> m;

  std::size_t max_multiplicity() const { return m.size(); }

  std::size_t element_total() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) total += (i + 1) * std::size_t{m[i]};
    return total;
  }
};

// Weight polynomial of all arrangements of the multiset 1^r ... n^r:
// the coefficient of z_1^{a_1}...z_r^{a_r} counts arrangements with a_i
// distinct sets occurring exactly i times.
inline SparsePolynomial weight_polynomial_identical(unsigned r, unsigned n) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  return apply_iterated(build_operator(r), SparsePolynomial::one(r), n);
}

// Streams the weight polynomials for n = 1..n_max, invoking
// step(n, polynomial) after each recurrence step. Only the current
// polynomial is retained between steps; the previous one is released the
// moment its successor exists.
template <typename Step>
void sequence_identical_stream(unsigned r, unsigned n_max, Step&& step) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  const EvolutionOperator op = build_operator(r);
  SparsePolynomial p = SparsePolynomial::one(r);
  for (unsigned n = 1; n <= n_max; ++n) {
    p = apply(op, p);
    step(n, static_cast<const SparsePolynomial&>(p));
  }
}

// Counts of arrangements of 1^r ... n^r for n = 1..n_max.
inline std::vector<Integer> sequence_identical(unsigned r, unsigned n_max) {
  std::vector<Integer> out;
  out.reserve(n_max);
  sequence_identical_stream(r, n_max, [&](unsigned, const SparsePolynomial& p) {
    out.push_back(to_integer(p.evaluate_at_ones()));
  });
  return out;
}

// Arrangements of 1^r ... n^r in which every set occurs exactly once:
// the weight polynomial at z_1 = 1, z_2 = ... = z_r = 0.
inline std::vector<Integer> sequence_distinct_sets(unsigned r, unsigned n_max) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  std::vector<int> mask(r, 0);
  mask[0] = 1;
  std::vector<Integer> out;
  out.reserve(n_max);
  sequence_identical_stream(r, n_max, [&](unsigned, const SparsePolynomial& p) {
    out.push_back(to_integer(p.evaluate_with_mask(mask)));
  });
  return out;
}

namespace detail {

// Multiplicity classes must be consumed in ascending order: the class-i
// operator only accounts for recipient sets repeated at most i times, so it
// is sound only while the arrangement's maximum set multiplicity is <= i.
// Ascending application preserves that bound; descending breaks it (see the
// descending variant below, kept as a regression witness).
inline SparsePolynomial weight_polynomial_multiset_ordered(const MultiplicityProfile& profile,
                                                           bool ascending) {
  const std::size_t r = profile.m.size();
  if (r == 0) throw std::invalid_argument("profile must have at least one multiplicity class");
  SparsePolynomial p = SparsePolynomial::one(r);
  for (std::size_t step = 0; step < r; ++step) {
    const std::size_t i = ascending ? step + 1 : r - step;
    if (profile.m[i - 1] == 0) continue;
    const EvolutionOperator op = build_operator(static_cast<unsigned>(i), r);
    for (unsigned k = 0; k < profile.m[i - 1]; ++k) p = apply(op, p);
  }
  return p;
}

// Test hook only: applies the class operators largest class first. Gives
// wrong answers by design (e.g. profile {1,1} yields 1 instead of 2).
inline SparsePolynomial weight_polynomial_multiset_descending(const MultiplicityProfile& profile) {
  return weight_polynomial_multiset_ordered(profile, false);
}

}  // namespace detail

// Weight polynomial of an arbitrary multiset given by its multiplicity
// profile. Applies the class-1 operator m_1 times, then class 2, and so on,
// all widened to the profile's full arity. An all-zero profile yields the
// constant polynomial 1 (the empty arrangement).
inline SparsePolynomial weight_polynomial_multiset(const MultiplicityProfile& profile) {
  return detail::weight_polynomial_multiset_ordered(profile, true);
}

// Number of arrangements of the profile's multiset.
inline Integer count_multiset(const MultiplicityProfile& profile) {
  return to_integer(weight_polynomial_multiset(profile).evaluate_at_ones());
}

}  // namespace msetpart

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msetpart/bigint.hpp"
#include "msetpart/partitions.hpp"
#include "msetpart/polynomial.hpp"

namespace msetpart {

// One way of inserting the r new identical elements into an existing
// arrangement: c0 of them form a new repeated singleton group, and for each
// multiplicity class i the bounded partition partitions[i-1] describes how
// the rest cluster onto copies of multiplicity-i sets. Constraint:
// c0 + |lambda_1| + ... + |lambda_r| = r.
struct Scenario {
  unsigned r = 0;
  unsigned c0 = 0;
  std::vector<BoundedPartition> partitions;  // partitions[i-1] has bound i

  bool valid() const {
    if (r == 0 || partitions.size() != r) return false;
    unsigned total = c0;
    for (unsigned i = 1; i <= r; ++i) {
      if (partitions[i - 1].bound != i) return false;
      total += partitions[i - 1].size();
    }
    return total == r;
  }
};

// Every scenario, each exactly once, in a fixed order: c0 descending, then
// the sizes |lambda_1|..|lambda_r| and the partitions themselves in their
// own lexicographic orders.
inline std::vector<Scenario> scenarios(unsigned r) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  std::vector<Scenario> out;
  std::vector<BoundedPartition> chosen(r);
  auto rec = [&](auto&& self, unsigned i, unsigned remaining, unsigned c0) -> void {
    if (i > r) {
      if (remaining == 0) out.push_back(Scenario{r, c0, chosen});
      return;
    }
    for (unsigned s = 0; s <= remaining; ++s) {
      for (const auto& part : bounded_partitions(s, i)) {
        chosen[i - 1] = part;
        self(self, i + 1, remaining - s, c0);
      }
    }
  };
  for (unsigned k = 0; k <= r; ++k) {
    const unsigned c0 = r - k;
    rec(rec, 1, r - c0, c0);
  }
  return out;
}

// A normal-ordered operator summand: multiply by z^{z_exponents} AFTER
// taking the mixed derivative of orders deriv_orders. Keeping every term in
// this differentiate-then-multiply form is what makes summing and applying
// them straightforward; raw z/D factors are never composed.
struct OperatorTerm {
  Rational coefficient;
  ExponentVector z_exponents;
  std::vector<std::uint32_t> deriv_orders;

  std::uint64_t total_grade() const {
    return total_degree(z_exponents) + total_degree(deriv_orders);
  }
};

namespace detail {

// Display order for operator terms: graded lexicographic on the combined
// (z_exponents, deriv_orders) key, largest first.
inline bool term_display_before(const OperatorTerm& a, const OperatorTerm& b) {
  const auto ga = a.total_grade();
  const auto gb = b.total_grade();
  if (ga != gb) return ga > gb;
  if (a.z_exponents != b.z_exponents) return a.z_exponents > b.z_exponents;
  return a.deriv_orders > b.deriv_orders;
}

struct TermKeyHash {
  std::size_t operator()(const std::pair<ExponentVector, ExponentVector>& k) const noexcept {
    ExponentVectorHash h;
    return h(k.first) * 0x9e3779b97f4a7c15ull + h(k.second);
  }
};

}  // namespace detail

// Compiles one scenario into its normal-ordered term, widened to `arity`
// variables (arity >= sc.r; the extra variables stay untouched).
//
// The new repeated singleton group contributes z_{c0} (z_0 := 1). Each part
// j of lambda_i with multiplicity m sends m of the new elements into m
// distinct j-fold repeated copies of multiplicity-i sets: each such set
// loses its i-fold copy (one D_i) and leaves behind a j-fold and an
// (i-j)-fold group (z_j and, when i-j >= 1, z_{i-j}). The 1/m! turns the
// falling factorial produced by D_i^m into the binomial coefficient that
// counts unordered choices of the m target sets.
inline OperatorTerm term_from_scenario(const Scenario& sc, std::size_t arity) {
  if (!sc.valid()) throw std::invalid_argument("invalid scenario");
  if (arity < sc.r) throw std::invalid_argument("arity must be at least the scenario's r");
  OperatorTerm term;
  term.coefficient = 1;
  term.z_exponents.assign(arity, 0);
  term.deriv_orders.assign(arity, 0);
  if (sc.c0 >= 1) term.z_exponents[sc.c0 - 1] += 1;
  for (unsigned i = 1; i <= sc.r; ++i) {
    const auto& lambda = sc.partitions[i - 1];
    for (unsigned j = 1; j <= i; ++j) {
      const unsigned m = lambda.multiplicities[j - 1];
      if (m == 0) continue;
      term.coefficient /= Rational(factorial(m));
      term.z_exponents[j - 1] += m;
      if (i - j >= 1) term.z_exponents[i - j - 1] += m;
      term.deriv_orders[i - 1] += m;
    }
  }
  return term;
}

// The evolution operator for one multiplicity class: a merged sum of
// normal-ordered terms over `arity` variables. Immutable after
// construction; terms are held in canonical display order.
class EvolutionOperator {
 public:
  EvolutionOperator(unsigned r, std::size_t arity, std::vector<OperatorTerm> terms)
      : r_(r), arity_(arity), terms_(std::move(terms)) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    if (arity < r) throw std::invalid_argument("arity must be at least r");
    std::sort(terms_.begin(), terms_.end(), detail::term_display_before);
  }

  unsigned r() const { return r_; }
  std::size_t arity() const { return arity_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }

 private:
  unsigned r_;
  std::size_t arity_;
  std::vector<OperatorTerm> terms_;
};

// Sum of term_from_scenario over all scenarios of rank r, like terms merged
// on the (z_exponents, deriv_orders) key, widened to `arity` variables.
inline EvolutionOperator build_operator(unsigned r, std::size_t arity) {
  std::unordered_map<std::pair<ExponentVector, ExponentVector>, Rational, detail::TermKeyHash>
      merged;
  for (const auto& sc : scenarios(r)) {
    OperatorTerm t = term_from_scenario(sc, arity);
    merged[{std::move(t.z_exponents), std::move(t.deriv_orders)}] += t.coefficient;
  }
  std::vector<OperatorTerm> terms;
  terms.reserve(merged.size());
  for (auto& [key, coeff] : merged) {
    if (coeff == 0) continue;
    terms.push_back(OperatorTerm{std::move(coeff), key.first, key.second});
  }
  return EvolutionOperator(r, arity, std::move(terms));
}

inline EvolutionOperator build_operator(unsigned r) { return build_operator(r, r); }

// Applies the operator once: sum over terms of
// coefficient * z^{z_exponents} * (mixed falling-factorial derivative of p).
inline SparsePolynomial apply(const EvolutionOperator& op, const SparsePolynomial& p) {
  if (op.arity() != p.arity()) throw std::invalid_argument("operator/polynomial arity mismatch");
  const std::size_t arity = p.arity();
  SparsePolynomial out(arity);
  ExponentVector ne(arity);
  for (const auto& term : op.terms()) {
    for (const auto& [e, c] : p.terms()) {
      Integer ff = 1;
      bool vanished = false;
      for (std::size_t i = 0; i < arity; ++i) {
        const std::uint32_t a = e[i];
        const std::uint32_t d = term.deriv_orders[i];
        if (a < d) {
          vanished = true;
          break;
        }
        for (std::uint32_t t = 0; t < d; ++t) ff *= a - t;
        ne[i] = a - d + term.z_exponents[i];
      }
      if (vanished) continue;
      out.add_term(ne, c * term.coefficient * Rational(ff));
    }
  }
  return out;
}

// k-fold application; k = 0 returns p unchanged. Only the current
// polynomial is kept alive between steps.
inline SparsePolynomial apply_iterated(const EvolutionOperator& op, SparsePolynomial p,
                                       unsigned k) {
  if (op.arity() != p.arity()) throw std::invalid_argument("operator/polynomial arity mismatch");
  for (unsigned step = 0; step < k; ++step) p = apply(op, p);
  return p;
}

}  // namespace msetpart

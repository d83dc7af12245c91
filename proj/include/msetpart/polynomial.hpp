#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msetpart/bigint.hpp"

namespace msetpart {

// Exponent vector of a monomial z_1^{a_1} ... z_r^{a_r}; entry i-1 holds a_i.
// Length must always equal the owning polynomial's arity.
using ExponentVector = std::vector<std::uint32_t>;

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ e.size();
    for (std::uint32_t x : e) {
      h ^= x;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t total_degree(const ExponentVector& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Canonical display order: higher total degree first, ties broken by the
// lexicographically larger exponent vector. Gives e.g. z1^3 + z2^2 + z2
// and, within one degree, z1^2 before z1*z2 before z2^2.
inline bool display_before(const ExponentVector& a, const ExponentVector& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

// Sparse multivariate polynomial with exact rational coefficients in the
// catalytic variables z_1..z_r. Canonical form: no zero coefficient is ever
// stored, so structural equality is value equality. All operations are
// pure; instances may be shared read-only across threads.
class SparsePolynomial {
 public:
  using TermMap = std::unordered_map<ExponentVector, Rational, ExponentVectorHash>;

  explicit SparsePolynomial(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw std::invalid_argument("polynomial arity must be positive");
    ++live_count_;
  }

  // The constant polynomial 1; initial state of every recurrence.
  static SparsePolynomial one(std::size_t arity) {
    SparsePolynomial p(arity);
    p.terms_.emplace(ExponentVector(arity, 0), Rational(1));
    return p;
  }

  SparsePolynomial(const SparsePolynomial& other)
      : arity_(other.arity_), terms_(other.terms_) {
    ++live_count_;
  }
  SparsePolynomial(SparsePolynomial&& other) noexcept
      : arity_(other.arity_), terms_(std::move(other.terms_)) {
    ++live_count_;
  }
  SparsePolynomial& operator=(const SparsePolynomial&) = default;
  SparsePolynomial& operator=(SparsePolynomial&&) = default;
  ~SparsePolynomial() { --live_count_; }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Accumulates c onto the monomial with exponents e, dropping the term if
  // the sum cancels to zero.
  void add_term(const ExponentVector& e, const Rational& c) {
    check_length(e);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& q) {
    if (q.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch in +");
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial p, const SparsePolynomial& q) {
    p += q;
    return p;
  }

  // Applies D_var `order` times (var is 1-based). A monomial with exponent
  // a in z_var picks up the falling factorial a(a-1)...(a-order+1) and
  // drops to exponent a-order; monomials with a < order vanish.
  SparsePolynomial partial_derivative(std::size_t var, unsigned order = 1) const {
    if (var == 0 || var > arity_) throw std::invalid_argument("variable index out of range");
    SparsePolynomial out(arity_);
    if (order == 0) {
      out.terms_ = terms_;
      return out;
    }
    for (const auto& [e, c] : terms_) {
      const std::uint32_t a = e[var - 1];
      if (a < order) continue;
      Integer ff = 1;
      for (unsigned t = 0; t < order; ++t) ff *= a - t;
      ExponentVector ne = e;
      ne[var - 1] = a - order;
      out.add_term(ne, c * Rational(ff));
    }
    return out;
  }

  // Multiplies by the monomial z^e: shifts every exponent vector up by e.
  SparsePolynomial multiply_by_monomial(const ExponentVector& e) const {
    check_length(e);
    SparsePolynomial out(arity_);
    for (const auto& [old_e, c] : terms_) {
      ExponentVector ne = old_e;
      for (std::size_t i = 0; i < arity_; ++i) ne[i] += e[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  // Plugging z_i = 1 for all i: the sum of all coefficients.
  Rational evaluate_at_ones() const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  // Substitutes each z_i by 0 or 1. Only monomials whose exponent is zero
  // at every masked-out variable survive.
  Rational evaluate_with_mask(const std::vector<int>& values) const {
    if (values.size() != arity_) throw std::invalid_argument("mask length must equal arity");
    for (int v : values) {
      if (v != 0 && v != 1) throw std::invalid_argument("mask entries must be 0 or 1");
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      bool alive = true;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (values[i] == 0 && e[i] != 0) {
          alive = false;
          break;
        }
      }
      if (alive) sum += c;
    }
    return sum;
  }

  // max over monomials of sum_i i*a_i. For weight polynomials this is the
  // element count represented by the state, so it is bounded by r*n.
  std::uint64_t max_weighted_degree() const {
    std::uint64_t best = 0;
    for (const auto& [e, c] : terms_) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < arity_; ++i) w += (i + 1) * std::uint64_t{e[i]};
      best = std::max(best, w);
    }
    return best;
  }

  // Terms in canonical display order (see display_before).
  std::vector<std::pair<ExponentVector, Rational>> sorted_terms() const {
    std::vector<std::pair<ExponentVector, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    return out;
  }

  bool operator==(const SparsePolynomial& q) const {
    return arity_ == q.arity_ && terms_ == q.terms_;
  }
  bool operator!=(const SparsePolynomial& q) const { return !(*this == q); }

  // Number of currently alive instances. Lets tests pin the streaming
  // contract: a sequence run keeps one polynomial, not a history of them.
  static long live_instances() { return live_count_.load(); }

 private:
  void check_length(const ExponentVector& e) const {
    if (e.size() != arity_) throw std::invalid_argument("exponent vector length must equal arity");
  }

  std::size_t arity_;
  TermMap terms_;

  inline static std::atomic<long> live_count_{0};
};

inline SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q) {
  return p + q;
}

// True iff every stored coefficient is an integer.
inline bool all_integral(const SparsePolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (!is_integral(c)) return false;
  }
  return true;
}

}  // namespace msetpart

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include <msetpart/polynomial.hpp>

#include "test_support.hpp"

using namespace msetpart;

namespace {

SparsePolynomial monomial(std::size_t arity, ExponentVector e, Rational c = Rational(1)) {
  SparsePolynomial p(arity);
  p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("one is the constant polynomial of the requested arity") {
  const auto p = SparsePolynomial::one(1);
  REQUIRE(p.term_count() == 1);
  CHECK(p.coefficient({0}) == 1);
  CHECK(SparsePolynomial::one(2).evaluate_at_ones() == 1);
  CHECK(SparsePolynomial::one(3).term_count() == 1);
  CHECK_THROWS_AS(SparsePolynomial::one(0), std::invalid_argument);
  CHECK_THROWS_AS(SparsePolynomial(0), std::invalid_argument);
}

TEST_CASE("addition merges coefficients and keeps canonical form") {
  const auto z1 = monomial(1, {1});
  const auto sum = z1 + z1;
  CHECK(sum.coefficient({1}) == 2);
  CHECK(sum.term_count() == 1);

  const auto p = monomial(2, {1, 2}, Rational(3));
  CHECK(p + SparsePolynomial(2) == p);

  const auto cancelled = z1 + monomial(1, {1}, Rational(-1));
  CHECK(cancelled.is_zero());
  CHECK(cancelled.term_count() == 0);

  CHECK_THROWS_AS(SparsePolynomial::one(1) + SparsePolynomial::one(2), std::invalid_argument);
}

TEST_CASE("add_term drops explicit zeros") {
  SparsePolynomial p(2);
  p.add_term({1, 0}, Rational(0));
  CHECK(p.is_zero());
  p.add_term({1, 0}, Rational(2));
  p.add_term({1, 0}, Rational(-2));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term({1}, Rational(1)), std::invalid_argument);
}

TEST_CASE("partial derivative follows the falling-factorial rule") {
  const auto z2cubed = monomial(2, {0, 3});
  const auto d = z2cubed.partial_derivative(2);
  CHECK(d == monomial(2, {0, 2}, Rational(3)));

  CHECK(SparsePolynomial::one(1).partial_derivative(1).is_zero());

  const auto twice = monomial(2, {0, 2}).partial_derivative(2).partial_derivative(2);
  CHECK(twice == monomial(2, {0, 0}, Rational(2)));
  // one order-2 application is the same as two order-1 ones
  CHECK(monomial(2, {0, 2}).partial_derivative(2, 2) == twice);

  // exponent smaller than the order: the monomial vanishes
  CHECK(monomial(2, {0, 1}).partial_derivative(2, 2).is_zero());

  CHECK_THROWS_AS(z2cubed.partial_derivative(0), std::invalid_argument);
  CHECK_THROWS_AS(z2cubed.partial_derivative(3), std::invalid_argument);
}

TEST_CASE("derivative is linear") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testsupport::random_polynomial(rng, 3);
    const auto q = testsupport::random_polynomial(rng, 3);
    const std::size_t var = 1 + trial % 3;
    CHECK((p + q).partial_derivative(var) ==
          p.partial_derivative(var) + q.partial_derivative(var));
  }
}

TEST_CASE("monomial multiplication shifts exponents") {
  CHECK(SparsePolynomial::one(2).multiply_by_monomial({0, 1}) == monomial(2, {0, 1}));

  const auto p = monomial(2, {1, 0}) + monomial(2, {0, 1});
  const auto shifted = p.multiply_by_monomial({1, 0});
  CHECK(shifted == monomial(2, {2, 0}) + monomial(2, {1, 1}));

  CHECK(p.multiply_by_monomial({0, 0}) == p);
  CHECK_THROWS_AS(p.multiply_by_monomial({1}), std::invalid_argument);
}

TEST_CASE("evaluation at all ones sums the coefficients") {
  const auto p = monomial(2, {3, 0}) + monomial(2, {0, 1}) + monomial(2, {0, 2});
  CHECK(p.evaluate_at_ones() == 3);
  CHECK(SparsePolynomial::one(2).evaluate_at_ones() == 1);

  const auto bell3 = monomial(1, {3}) + monomial(1, {2}, Rational(3)) + monomial(1, {1});
  CHECK(bell3.evaluate_at_ones() == 5);
}

TEST_CASE("evaluation sums are additive") {
  std::mt19937_64 rng(987);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testsupport::random_polynomial(rng, 2);
    const auto q = testsupport::random_polynomial(rng, 2);
    CHECK((p + q).evaluate_at_ones() == p.evaluate_at_ones() + q.evaluate_at_ones());
  }
}

TEST_CASE("masked evaluation keeps only monomials clear of masked variables") {
  const auto p = monomial(2, {3, 0}) + monomial(2, {0, 1}) + monomial(2, {0, 2});
  CHECK(p.evaluate_with_mask({1, 0}) == 1);
  CHECK(monomial(2, {0, 1}).evaluate_with_mask({1, 0}) == 0);

  CHECK_THROWS_AS(p.evaluate_with_mask({1}), std::invalid_argument);
  CHECK_THROWS_AS(p.evaluate_with_mask({1, 2}), std::invalid_argument);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const auto q = testsupport::random_polynomial(rng, 3);
    CHECK(q.evaluate_with_mask({1, 1, 1}) == q.evaluate_at_ones());
  }
}

TEST_CASE("max weighted degree weights variable i by i") {
  CHECK((monomial(2, {3, 0}) + monomial(2, {0, 2})).max_weighted_degree() == 4);
  CHECK(SparsePolynomial::one(2).max_weighted_degree() == 0);
  CHECK(SparsePolynomial(3).max_weighted_degree() == 0);
  CHECK(monomial(3, {0, 0, 1}).max_weighted_degree() == 3);
}

TEST_CASE("structural equality is value equality") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testsupport::random_polynomial(rng, 2);
    const auto q = testsupport::random_polynomial(rng, 2);
    // build p + q in two different orders; canonical form must agree
    CHECK(p + q == q + p);
  }
  CHECK(SparsePolynomial(2) != SparsePolynomial::one(2));
}

TEST_CASE("sorted terms follow the graded display order") {
  const auto p = monomial(2, {0, 1}) + monomial(2, {3, 0}) + monomial(2, {0, 2});
  const auto sorted = p.sorted_terms();
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].first == ExponentVector{3, 0});
  CHECK(sorted[1].first == ExponentVector{0, 2});
  CHECK(sorted[2].first == ExponentVector{0, 1});

  // within one total degree, z1-heavy monomials come first
  const auto q = monomial(2, {0, 2}) + monomial(2, {1, 1}) + monomial(2, {2, 0});
  const auto qs = q.sorted_terms();
  CHECK(qs[0].first == ExponentVector{2, 0});
  CHECK(qs[1].first == ExponentVector{1, 1});
  CHECK(qs[2].first == ExponentVector{0, 2});
}

TEST_CASE("integrality helpers") {
  CHECK(is_integral(Rational(4, 2)));
  CHECK(!is_integral(Rational(1, 2)));
  CHECK(to_integer(Rational(6, 3)) == 2);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::domain_error);

  auto p = monomial(2, {1, 0}, Rational(1, 2));
  CHECK(!all_integral(p));
  p.add_term({1, 0}, Rational(1, 2));
  CHECK(all_integral(p));
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <msetpart/io.hpp>
#include <msetpart/oracle.hpp>

using namespace msetpart;

namespace {

// Relabels an arrangement through `perm` (old label i+1 -> perm[i]) and
// re-canonicalizes, for the label-order independence check.
Arrangement relabeled(const Arrangement& arr, const std::vector<unsigned>& perm) {
  Arrangement out = arr;
  for (auto& block : out.blocks) {
    for (auto& x : block) x = perm[x - 1];
  }
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("tiny multisets") {
  const auto single = enumerate_arrangements(MultisetSpec{{1}});
  REQUIRE(single.size() == 1);
  CHECK(single[0].blocks == std::vector<std::vector<unsigned>>{{1}});

  // two copies of one element can never share a set
  const auto twins = enumerate_arrangements(MultisetSpec{{2}});
  REQUIRE(twins.size() == 1);
  CHECK(twins[0].blocks == std::vector<std::vector<unsigned>>{{1}, {1}});
}

TEST_CASE("the two-pair multiset has exactly three arrangements") {
  const auto arrs = enumerate_arrangements(MultisetSpec{{2, 2}});
  REQUIRE(arrs.size() == 3);
  std::set<std::string> texts;
  for (const auto& arr : arrs) texts.insert(arrangement_to_text(arr));
  CHECK(texts == std::set<std::string>{"{1,2}|{1,2}", "{1,2}|{1}|{2}", "{1}|{1}|{2}|{2}"});
}

TEST_CASE("arrangement invariants hold for every enumerated arrangement") {
  const std::vector<MultisetSpec> specs = {
      MultisetSpec{{1, 1, 1, 1}}, MultisetSpec{{2, 2, 1}}, MultisetSpec{{3, 2}},
      MultisetSpec{{4, 1, 1}},    MultisetSpec{{2, 2, 2}},
  };
  for (const auto& spec : specs) {
    for (const auto& arr : enumerate_arrangements(spec)) {
      std::map<unsigned, unsigned> used;
      for (const auto& block : arr.blocks) {
        CHECK(!block.empty());
        CHECK(std::is_sorted(block.begin(), block.end()));
        CHECK(std::adjacent_find(block.begin(), block.end()) == block.end());
        for (unsigned x : block) ++used[x];
      }
      REQUIRE(used.size() == spec.multiplicities.size());
      for (std::size_t i = 0; i < spec.multiplicities.size(); ++i) {
        CHECK(used.at(static_cast<unsigned>(i + 1)) == spec.multiplicities[i]);
      }
    }
  }
}

TEST_CASE("count equals the weight polynomial at all ones") {
  const std::vector<MultisetSpec> specs = {
      MultisetSpec{{1}},       MultisetSpec{{2, 2}},    MultisetSpec{{1, 2, 3}},
      MultisetSpec{{2, 2, 2}}, MultisetSpec{{1, 1, 1, 1, 1}},
  };
  for (const auto& spec : specs) {
    const auto arrs = enumerate_arrangements(spec);
    const auto poly = oracle_weight_polynomial(spec, 8);
    CHECK(poly.evaluate_at_ones() == arrs.size());
  }
}

TEST_CASE("distinct-element multisets reproduce the Bell numbers") {
  const auto bell = bell_reference(7);
  for (unsigned n = 1; n <= 7; ++n) {
    MultisetSpec spec;
    spec.multiplicities.assign(n, 1);
    CHECK(enumerate_arrangements(spec).size() == bell[n]);
  }
}

TEST_CASE("enumeration does not depend on the label order") {
  // multiplicities [1,2,3] against all their distinct orderings
  const std::vector<std::vector<unsigned>> orders = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                     {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  const auto reference = enumerate_arrangements(MultisetSpec{{1, 2, 3}});
  const std::set<Arrangement> reference_set(reference.begin(), reference.end());
  for (const auto& mults : orders) {
    const auto arrs = enumerate_arrangements(MultisetSpec{mults});
    REQUIRE(arrs.size() == reference.size());
    // map label i (multiplicity mults[i-1]) to the reference label with the
    // same multiplicity, assigning duplicates in order
    std::vector<unsigned> perm(mults.size());
    std::vector<bool> taken(mults.size(), false);
    for (std::size_t i = 0; i < mults.size(); ++i) {
      for (std::size_t j = 0; j < mults.size(); ++j) {
        if (!taken[j] && mults[i] == std::vector<unsigned>{1, 2, 3}[j]) {
          perm[i] = static_cast<unsigned>(j + 1);
          taken[j] = true;
          break;
        }
      }
    }
    std::set<Arrangement> relabeled_set;
    for (const auto& arr : arrs) relabeled_set.insert(relabeled(arr, perm));
    CHECK(relabeled_set == reference_set);
  }
}

TEST_CASE("oracle weight polynomials") {
  const auto poly = oracle_weight_polynomial(MultisetSpec{{2, 2}}, 2);
  CHECK(poly.term_count() == 3);
  CHECK(poly.coefficient({3, 0}) == 1);
  CHECK(poly.coefficient({0, 1}) == 1);
  CHECK(poly.coefficient({0, 2}) == 1);

  const auto single = oracle_weight_polynomial(MultisetSpec{{1}}, 1);
  CHECK(single.term_count() == 1);
  CHECK(single.coefficient({1}) == 1);

  // {a, b, b}: {{a,b},{b}} and {{a},{b},{b}}
  const auto mixed = oracle_weight_polynomial(MultisetSpec{{1, 2}}, 2);
  CHECK(mixed.term_count() == 2);
  CHECK(mixed.coefficient({2, 0}) == 1);
  CHECK(mixed.coefficient({1, 1}) == 1);

  // {1,1} needs z2: arity 1 is too small
  CHECK_THROWS_AS(oracle_weight_polynomial(MultisetSpec{{2}}, 1), std::invalid_argument);
}

TEST_CASE("the element cap guards the enumeration") {
  MultisetSpec big;
  big.multiplicities.assign(13, 1);
  CHECK_THROWS_AS(enumerate_arrangements(big), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_arrangements(MultisetSpec{{3, 3}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_arrangements(MultisetSpec{{1, 0}}), std::invalid_argument);
}

TEST_CASE("bell reference values") {
  const auto bell = bell_reference(10);
  CHECK(bell == std::vector<Integer>{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975});
  CHECK(bell_reference(0) == std::vector<Integer>{1});
  CHECK(bell_reference(1)[1] == 1);
}

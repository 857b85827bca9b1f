#include <doctest.h>

#include <random>

#include "jstir/jsnumbers.hpp"
#include "jstir/posets.hpp"
#include "jstir/suites.hpp"
#include "oracles.hpp"

using namespace jstir;

namespace {

const LabeledPoset kFig1({1, 2, 3}, {{2, 1}, {2, 3}});

std::vector<LinearExtension> as_vectors(const LabeledPoset& p) { return linear_extensions(p); }

}  // namespace

TEST_CASE("linear extensions of small posets") {
  CHECK(as_vectors(kFig1) == std::vector<LinearExtension>{{2, 1, 3}, {2, 3, 1}});
  CHECK(as_vectors(build_R(1, {})) == std::vector<LinearExtension>{{1, 2, 3}, {2, 1, 3}});
  const LabeledPoset chain({1, 2, 3}, {{1, 2}, {2, 3}});
  CHECK(as_vectors(chain) == std::vector<LinearExtension>{{1, 2, 3}});
  CHECK(as_vectors(build_P_legendre(1)) == std::vector<LinearExtension>{{1, 3, 2}, {3, 1, 2}});
}

TEST_CASE("descent polynomials") {
  CHECK(descent_polynomial(kFig1) == IntPoly{0, 0, 2});
  CHECK(descent_polynomial(LabeledPoset({1, 2, 3}, {{1, 2}, {2, 3}})) == IntPoly{0, 1});
  const IntPoly r21 = descent_polynomial(build_R(2, {1}));
  CHECK(r21 == IntPoly{0, 1, 7, 4});
  // Agrees with the generating-function numerator of n(n+1)(n+2)(12n^2+9n-1)/120.
  RatPoly p{1};
  for (long r : {0L, 1L, 2L}) p = p * RatPoly{mpq_class(r), mpq_class(1)};
  p = p * RatPoly{mpq_class(-1, 120), mpq_class(3, 40), mpq_class(1, 10)};
  CHECK(r21 == gf_numerator(p, 5));
}

TEST_CASE("order polynomial values") {
  CHECK(order_polynomial_value(kFig1, 2) == 2);
  CHECK(order_polynomial_value(build_R(2, {1}), 1) == 1);
  // Strict chain 3 > 2 > 1 of labels going up cannot fit in [2].
  const LabeledPoset decreasing({1, 2, 3}, {{3, 2}, {2, 1}});
  CHECK(order_polynomial_value(decreasing, 2) == 0);
  CHECK(order_polynomial_value(decreasing, 3) == 1);
  CHECK(order_polynomial_value(build_P_legendre(1), 2) == 2);
  for (unsigned n = 1; n <= 6; ++n) {
    mpz_class two_binom = 2 * binomial(n + 1, 3);
    CHECK(order_polynomial_value(kFig1, n) == two_binom);
  }
  CHECK_THROWS_AS(order_polynomial_value(build_R(4, {}), 2), Error);
}

TEST_CASE("R_{k,S} and P_k construction") {
  const LabeledPoset r21 = build_R(2, {1});
  CHECK(r21.labels() == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(r21.less(2, 6));
  CHECK(r21.less(3, 6));
  CHECK_FALSE(r21.less(4, 5));
  const LabeledPoset r1 = build_R(1, {});
  CHECK(r1.less(1, 3));
  CHECK(r1.less(2, 3));
  CHECK_FALSE(r1.less(1, 2));
  CHECK(build_R(3, {1, 2, 3}).size() == 6);
  CHECK(build_R(3, {1, 2, 3}).labels() == std::vector<int>{2, 3, 5, 6, 8, 9});
  CHECK(build_P_legendre(2).size() == 6);
  CHECK(build_P_legendre(2).less(1, 5));
  CHECK(build_P_legendre(2).less(6, 5));
  CHECK_FALSE(build_P_legendre(2).less(5, 6));

  CHECK_THROWS_AS(build_R(2, {3}), Error);
  try {
    build_R(2, {0});
    FAIL("expected InvalidSubset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidSubset);
  }
}

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(LabeledPoset({1, 1}, {}), Error);
  CHECK_THROWS_AS(LabeledPoset({0, 1}, {}), Error);
  CHECK_THROWS_AS(LabeledPoset({1, 2}, {{1, 3}}), Error);
  CHECK_THROWS_AS(LabeledPoset({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}), Error);
  CHECK_THROWS_AS(linear_extensions(build_R(7, {})), Error);
  CHECK_FALSE(is_linear_extension(kFig1, std::vector<int>{1, 2, 3}));
  CHECK_FALSE(is_linear_extension(kFig1, std::vector<int>{2, 1}));
  CHECK(is_linear_extension(kFig1, std::vector<int>{2, 3, 1}));
}

TEST_CASE("product formula and counts") {
  CHECK(A_S_at_one(2, {1}) == 12);
  CHECK(A_S_at_one(2, {2}) == 8);
  CHECK(A_S_at_one(1, {}) == 2);
  CHECK(count_linext_level(2, 1) == 20);
  CHECK(count_linext_level(1, 0) == 2);
  CHECK(count_linext_level(3, 0) == 2240);
  CHECK(count_linext_level(4, 0) == 246400);
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        CHECK(descent_polynomial(build_R(k, s))(mpz_class(1)) == A_S_at_one(k, s));
      }
    }
  }
  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      mpz_class sum = 0;
      for (const Subset& s : subsets_of_size(k, i)) sum += k == 0 ? mpz_class(1) : A_S_at_one(k, s);
      CHECK(sum == count_linext_level(k, i));
      CHECK(count_linext_level_by_partitions(k, i) == count_linext_level(k, i));
    }
  }
}

TEST_CASE("subsets are lexicographic") {
  CHECK(subsets_of_size(3, 2) == std::vector<Subset>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(subsets_of_size(2, 0) == std::vector<Subset>{{}});
  CHECK(subsets_of_size(2, 3).empty());
}

TEST_CASE("sum over S reproduces A_{k,i}") {
  CHECK(descent_table_posets(4).same_values(descent_table_rec(4)));
  CHECK_THROWS_AS(descent_table_posets(5), Error);
}

TEST_CASE("random posets against brute-force oracles") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const LabeledPoset p = random_poset(rng, 6, 0.3);
    std::vector<LinearExtension> expected =
        oracle::linear_extensions_by_filter(p.labels(), p.covers());
    CHECK(linear_extensions(p) == expected);
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK(order_polynomial_value(p, n) == oracle::order_polynomial_by_maps(p.labels(), p.covers(), n));
    }
    CHECK(stanley_identity_holds(p, 10));
  }
}

TEST_CASE("Stanley identity on the named posets") {
  CHECK(stanley_identity_holds(kFig1, 10));
  CHECK(stanley_identity_holds(build_R(1, {}), 10));
  CHECK(stanley_identity_holds(build_R(2, {}), 10));
  CHECK(stanley_identity_holds(build_R(3, {1, 3}), 10));
  CHECK(stanley_identity_holds(build_P_legendre(2), 10));
}

TEST_CASE("order polynomial of P_k gives Legendre-Stirling numbers") {
  const JSTriangle t = build_triangle(Kind::kSecond, 8);
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(order_polynomial_value(build_P_legendre(k), n) == legendre_stirling(t, n - 1 + k, n - 1));
    }
  }
}

#include <doctest.h>

#include "jstir/diagonal.hpp"
#include "jstir/format.hpp"
#include "oracles.hpp"

using namespace jstir;

namespace {

RatPoly rat(std::initializer_list<std::pair<long, long>> c) {
  std::vector<mpq_class> v;
  for (auto [num, den] : c) {
    v.emplace_back(num, den);
    v.back().canonicalize();
  }
  return RatPoly(std::move(v));
}

// A_{k,i}(t) for k = 0..3.
const std::vector<std::vector<IntPoly>> kSmallTable{
    {IntPoly{1}},
    {IntPoly{0, 1, 1}, IntPoly{0, 1}},
    {IntPoly{0, 1, 14, 21, 4}, IntPoly{0, 2, 12, 6}, IntPoly{0, 1, 2}},
    {IntPoly{0, 1, 75, 603, 1065, 460, 36}, IntPoly{0, 3, 114, 501, 436, 66},
     IntPoly{0, 3, 55, 116, 36}, IntPoly{0, 1, 8, 6}},
};

}  // namespace

TEST_CASE("diagonal_second small cases") {
  CHECK(diagonal_second(0)[0] == RatPoly{1});
  const DiagonalPoly d1 = diagonal_second(1);
  CHECK(d1[1] == rat({{0, 1}, {1, 2}, {1, 2}}));
  CHECK(d1[0] == rat({{0, 1}, {1, 6}, {1, 2}, {1, 3}}));
  CHECK(diagonal_second(2)[1](mpq_class(1)) == 2);
}

TEST_CASE("diagonal_second matches the monotone-tuple formula") {
  for (unsigned k = 0; k <= 5; ++k) {
    const DiagonalPoly d = diagonal_second(k);
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned i = 0; i <= k; ++i) {
        CHECK(d[i](mpq_class(n)) == mpq_class(oracle::monotone_tuple_sum(k, n, i)));
      }
    }
  }
}

TEST_CASE("diagonal_first") {
  CHECK(diagonal_first(0)[0] == RatPoly{1});
  const DiagonalPoly q1 = diagonal_first(1);
  CHECK(q1[1] == rat({{0, 1}, {1, 2}, {-1, 2}}));
  CHECK(q1[1](mpq_class(2)) == -1);
  CHECK(q1.kind == Kind::kFirst);
  const JSTriangle t = build_triangle(Kind::kFirst, 12);
  for (unsigned k = 0; k <= 4; ++k) {
    const DiagonalPoly q = diagonal_first(k);
    for (unsigned n = k; n <= 12; ++n) {
      for (unsigned i = 0; i <= k; ++i) CHECK(q[i](mpq_class(n)) == t.entry(n, n - k).coeff(i));
    }
  }
}

TEST_CASE("structure of p_{k,i}") {
  const auto all = diagonal_second_upto(6);
  for (unsigned k = 0; k <= 6; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const RatPoly& p = all[k][i];
      CHECK(p.degree() == static_cast<int>(3 * k - i));
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 3, k - i);
      den *= mpz_class(1) << i;
      den *= factorial(i) * factorial(k - i);
      CHECK(p.leading() == mpq_class(mpz_class(1), den));
      CHECK(p.leading() == diagonal_leading_coefficient(k, i));
      for (long m = 0; k >= 1 && m <= static_cast<long>(k); ++m) CHECK(p(mpq_class(-m)) == 0);
    }
  }
}

TEST_CASE("small descent table by both methods") {
  const DescentTable gf = descent_table_gf(3);
  const DescentTable rec = descent_table_rec(3);
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      CHECK(gf.at(k, i) == kSmallTable[k][i]);
      CHECK(rec.at(k, i) == kSmallTable[k][i]);
    }
  }
  CHECK(rec.coeff(2, 1, 2) == 12);
  CHECK(rec.coeff(1, 0, 1) == 1);
  CHECK(rec.coeff(1, 0, 2) == 1);
  CHECK(gf.method() == DescentMethod::kGfTransform);
  CHECK(gf.same_values(rec));
}

TEST_CASE("generating function and recurrence agree up to k = 8") {
  CHECK(descent_table_gf(8).same_values(descent_table_rec(8)));
}

TEST_CASE("positivity, support and row sums") {
  const DescentTable t = descent_table_rec(8);
  for (unsigned k = 1; k <= 8; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const IntPoly& a = t.at(k, i);
      CHECK(a.coeff(0) == 0);
      CHECK(a.degree() == static_cast<int>(2 * k - i));
      for (unsigned j = 1; j <= 2 * k - i; ++j) CHECK(a.coeff(j) > 0);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 3, k - i);
      scale *= mpz_class(1) << i;
      scale *= factorial(i) * factorial(k - i);
      CHECK(a(mpz_class(1)) * scale == factorial(3 * k - i));
      CHECK(a(mpz_class(1)) == descent_row_sum(k, i));
    }
  }
}

TEST_CASE("first-kind reversal") {
  CHECK(first_kind_gf_check(1, 0));
  CHECK(first_kind_gf_check(0, 0));
  CHECK(first_kind_gf_check(2, 2));
  for (unsigned k = 0; k <= 5; ++k) {
    for (unsigned i = 0; i <= k; ++i) CHECK(first_kind_gf_check(k, i));
  }
  CHECK_THROWS_AS(first_kind_gf_check(1, 2), Error);
}

TEST_CASE("real-rootedness and unimodality for k <= 9") {
  const DescentTable t = descent_table_rec(9);
  for (unsigned k = 0; k <= 9; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const IntPoly& a = t.at(k, i);
      CHECK(is_real_rooted(a));
      const auto& c = a.coeffs();
      CHECK(is_unimodal(std::span<const mpz_class>(c.begin() + static_cast<long>(a.valuation()), c.end())));
    }
  }
}

TEST_CASE("descent table bounds") {
  DescentTable t(2, DescentMethod::kRecurrence);
  CHECK_THROWS_AS(t.at(3, 0), Error);
  CHECK_THROWS_AS(t.at(1, 2), Error);
  CHECK_THROWS_AS(t.set(2, 3, IntPoly{1}), Error);
  CHECK(t.coeff(2, 1, 40) == 0);
}

#pragma once

#include <vector>

#include "jstir/exactpoly.hpp"
#include "jstir/jsnumbers.hpp"

namespace jstir {

// The diagonal JS(n+k, n; z) (second kind) or js(n, n-k; z) (first kind) as
// a family of polynomials in n, one per power of z.
struct DiagonalPoly {
  unsigned k = 0;
  Kind kind = Kind::kSecond;
  std::vector<RatPoly> coeffs_by_i;  // i = 0..k

  const RatPoly& operator[](unsigned i) const { return coeffs_by_i.at(i); }
};

// p_{k,i}(n) by exact summation of
//   p_{k,i}(n) - p_{k,i}(n-1) = n^2 p_{k-1,i}(n) + n p_{k-1,i-1}(n),
// p_{k,i}(0) = 0 for k >= 1. Every step is cross-checked against the
// triangle JS(n+k, n; z) for n = 1..k+3; throws kCrossCheckFailure on a
// mismatch.
DiagonalPoly diagonal_second(unsigned k);
// All of diagonal_second(0..k_max) in one pass.
std::vector<DiagonalPoly> diagonal_second_upto(unsigned k_max);

// q_{k,i}(n) = (-1)^i p_{k,i}(-n), cross-checked against js(n, n-k; z) for
// n = k..k+4.
DiagonalPoly diagonal_first(unsigned k);

enum class DescentMethod { kGfTransform, kRecurrence, kPermutations, kPosets };

// A_{k,i}(t) for 0 <= i <= k <= k_max.
class DescentTable {
 public:
  DescentTable(unsigned k_max, DescentMethod method);

  unsigned k_max() const { return k_max_; }
  DescentMethod method() const { return method_; }

  const IntPoly& at(unsigned k, unsigned i) const;
  void set(unsigned k, unsigned i, IntPoly a);
  // a_{k,i,j}; zero outside the stored support.
  mpz_class coeff(unsigned k, unsigned i, unsigned j) const;

  // Same polynomials, regardless of method.
  bool same_values(const DescentTable& other) const;

 private:
  unsigned k_max_;
  DescentMethod method_;
  std::vector<std::vector<IntPoly>> rows_;
};

DescentTable descent_table_gf(unsigned k_max);
DescentTable descent_table_rec(unsigned k_max);

// Checks sum_{n>=1} q_{k,i}(n) t^n = (-1)^k t^{3k-i+1} A_{k,i}(1/t) / (1-t)^{3k-i+1}
// by comparing numerators exactly.
bool first_kind_gf_check(unsigned k, unsigned i);

// (3k-i)! / (3^{k-i} 2^i i! (k-i)!)
mpz_class descent_row_sum(unsigned k, unsigned i);
// 1 / (3^{k-i} 2^i i! (k-i)!)
mpq_class diagonal_leading_coefficient(unsigned k, unsigned i);

}  // namespace jstir

#pragma once

#include <vector>

#include "jstir/exactpoly.hpp"

namespace jstir {

enum class Kind { kSecond, kFirst };

// Triangle of Jacobi-Stirling numbers JS(n,k;z) (second kind) or js(n,k;z)
// (first kind) for 0 <= k <= n <= n_max, each stored as a polynomial in z.
class JSTriangle {
 public:
  static JSTriangle build(Kind kind, unsigned n_max);

  Kind kind() const { return kind_; }
  unsigned n_max() const { return n_max_; }

  // Throws kIndexOutOfRange unless k <= n <= n_max.
  const IntPoly& entry(unsigned n, unsigned k) const;

 private:
  JSTriangle(Kind kind, unsigned n_max) : kind_(kind), n_max_(n_max) {}

  Kind kind_;
  unsigned n_max_;
  std::vector<std::vector<IntPoly>> rows_;
};

inline JSTriangle build_triangle(Kind kind, unsigned n_max) {
  return JSTriangle::build(kind, n_max);
}

// Expands the connection identity at level n symbolically (polynomial in x
// with coefficients in Z[z]) and compares both sides exactly. n <= 12.
bool verify_defining_identity(Kind kind, unsigned n);

// Leading z-coefficient of JS(n,k;z): the Stirling number S(n,k).
mpz_class stirling2(const JSTriangle& t, unsigned n, unsigned k);
// Constant z-term of JS(n,k;z): the central factorial number T(2n,2k).
mpz_class central_T(const JSTriangle& t, unsigned n, unsigned k);
// Entry at z = 1: LS(n,k) for the second kind, ls(n,k) for the first.
mpz_class legendre_stirling(const JSTriangle& t, unsigned n, unsigned k);

}  // namespace jstir

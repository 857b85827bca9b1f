#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "jstir/error.hpp"

namespace jstir {

// Dense univariate polynomial, ascending degree. The coefficient vector is
// kept canonical: either empty (the zero polynomial) or with a nonzero last
// entry.
template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t deg) {
    std::vector<T> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  // Coefficient of x^i; zero past the degree.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  // Largest m with x^m dividing the polynomial.
  std::size_t valuation() const {
    std::size_t m = 0;
    while (m < coeffs_.size() && sgn(coeffs_[m]) == 0) ++m;
    return m;
  }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& c) {
    if (sgn(c) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const T& c) { return a *= c; }
  friend Poly operator*(const T& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p.coeffs()[i] * T(i);
  return Poly<T>(std::move(out));
}

// p(x) with x replaced by -x.
template <class T>
Poly<T> reflect(const Poly<T>& p) {
  std::vector<T> out = p.coeffs();
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Poly<T>(std::move(out));
}

// Multiplies p by x^shift.
template <class T>
Poly<T> shift_up(const Poly<T>& p, std::size_t shift) {
  if (p.is_zero()) return p;
  std::vector<T> out(shift, T(0));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly<T>(std::move(out));
}

mpz_class binomial(long n, long k);
mpz_class factorial(unsigned long n);

RatPoly to_rat(const IntPoly& p);
// Throws kNonIntegerCoefficient unless every coefficient is an integer.
IntPoly to_int(const RatPoly& p);

// Scales p to an integer polynomial with content 1 and positive leading
// coefficient. Zero maps to zero.
IntPoly primitive_part(const IntPoly& p);
IntPoly primitive_part(const RatPoly& p);
mpz_class content(const IntPoly& p);

// Euclidean division over the rationals; throws kZeroPolynomial for b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive.
IntPoly square_free_part(const IntPoly& p);

struct SquareFreeFactor {
  IntPoly factor;  // primitive, square-free, pairwise coprime
  unsigned multiplicity;
};
// Yun's algorithm: p = c * prod factor^multiplicity for a rational constant c.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p);

// Returns S with S(n) = p(1) + ... + p(n) for all integers n >= 0.
RatPoly discrete_sum(const RatPoly& p);

// Numerator A(t) = (1-t)^(d+1) * sum_{n>=0} p(n) t^n, i.e.
// a_j = sum_{l=0..j} (-1)^l C(d+1, l) p(j-l) for j = 0..d.
// Requires degree(p) <= d; throws kNonIntegerCoefficient if some a_j is not
// an integer.
IntPoly gf_numerator(const RatPoly& p, unsigned d);

// Same transform applied to an explicit prefix of series coefficients
// s_0..s_{len-1}; returns the first `len` numerator coefficients over
// (1-t)^power as exact rationals.
std::vector<mpq_class> series_numerator(std::span<const mpq_class> series,
                                        unsigned power);

// Sign (-1, 0, 1) of p at an exact rational point.
int sign_at(const IntPoly& p, const mpq_class& x);

// Sturm chain over the integers: p, p', then negated pseudo-remainders with
// the sign of lc^delta corrected and content removed.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Number of distinct real roots of p in the half-open interval (lo, hi].
std::size_t real_root_count(const IntPoly& p, const mpq_class& lo,
                            const mpq_class& hi);
// Number of distinct real roots of p on the whole line.
std::size_t real_root_count(const IntPoly& p);

bool is_real_rooted(const IntPoly& p);

// Weakly increasing then weakly decreasing.
bool is_unimodal(std::span<const mpz_class> seq);

}  // namespace jstir

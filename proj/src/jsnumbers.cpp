#include "jstir/jsnumbers.hpp"

#include <string>

namespace jstir {

JSTriangle JSTriangle::build(Kind kind, unsigned n_max) {
  JSTriangle t(kind, n_max);
  t.rows_.resize(n_max + 1);
  t.rows_[0].push_back(IntPoly{1});
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto& prev = t.rows_[n - 1];
    auto& row = t.rows_[n];
    row.resize(n + 1);
    // Zero-extension: prev has entries 0..n-1; prev[n] is treated as 0.
    for (unsigned k = 1; k <= n; ++k) {
      IntPoly value = prev[k - 1];
      if (k <= n - 1) {
        if (kind == Kind::kSecond) {
          // JS(n,k) = JS(n-1,k-1) + k(k+z) JS(n-1,k)
          IntPoly factor{mpz_class(k) * k, mpz_class(k)};
          value += factor * prev[k];
        } else {
          // js(n,k) = js(n-1,k-1) - (n-1)(n-1+z) js(n-1,k)
          const mpz_class m = n - 1;
          IntPoly factor{m * m, m};
          value -= factor * prev[k];
        }
      }
      row[k] = std::move(value);
    }
  }
  return t;
}

const IntPoly& JSTriangle::entry(unsigned n, unsigned k) const {
  if (n > n_max_ || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "(" + std::to_string(n) + "," + std::to_string(k) + ") outside triangle of size " +
                    std::to_string(n_max_));
  }
  return rows_[n][k];
}

namespace {

// Polynomial in x whose coefficients are polynomials in z.
using XPoly = std::vector<IntPoly>;

void trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// p * (x - i(z+i))
XPoly times_linear_factor(const XPoly& p, unsigned i) {
  const mpz_class ii = i;
  const IntPoly root{ii * ii, ii};  // i(z+i) = i^2 + i z
  XPoly out(p.size() + 1);
  for (std::size_t d = 0; d < p.size(); ++d) {
    out[d + 1] += p[d];
    out[d] -= root * p[d];
  }
  trim(out);
  return out;
}

}  // namespace

bool verify_defining_identity(Kind kind, unsigned n) {
  if (n > 12) throw Error(ErrorCode::kTooLarge, "defining identity check limited to n <= 12");
  const JSTriangle t = JSTriangle::build(kind, n);

  XPoly lhs;
  XPoly rhs;
  if (kind == Kind::kSecond) {
    // x^n = sum_k JS(n,k;z) prod_{i<k} (x - i(z+i))
    lhs.assign(n + 1, IntPoly{});
    lhs[n] = IntPoly{1};
    XPoly falling{IntPoly{1}};
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) falling = times_linear_factor(falling, k - 1);
      const IntPoly& c = t.entry(n, k);
      if (rhs.size() < falling.size()) rhs.resize(falling.size());
      for (std::size_t d = 0; d < falling.size(); ++d) rhs[d] += c * falling[d];
    }
  } else {
    // prod_{i<n} (x - i(z+i)) = sum_k js(n,k;z) x^k
    lhs = XPoly{IntPoly{1}};
    for (unsigned i = 0; i < n; ++i) lhs = times_linear_factor(lhs, i);
    rhs.resize(n + 1);
    for (unsigned k = 0; k <= n; ++k) rhs[k] = t.entry(n, k);
  }
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

namespace {

void require_second(const JSTriangle& t) {
  if (t.kind() != Kind::kSecond) {
    throw Error(ErrorCode::kInvalidArgument, "requires a second-kind triangle");
  }
}

}  // namespace

mpz_class stirling2(const JSTriangle& t, unsigned n, unsigned k) {
  require_second(t);
  const IntPoly& e = t.entry(n, k);
  return e.is_zero() ? mpz_class(0) : e.leading();
}

mpz_class central_T(const JSTriangle& t, unsigned n, unsigned k) {
  require_second(t);
  return t.entry(n, k).coeff(0);
}

mpz_class legendre_stirling(const JSTriangle& t, unsigned n, unsigned k) {
  return t.entry(n, k)(mpz_class(1));
}

}  // namespace jstir

#include "jstir/exactpoly.hpp"

#include <string>

namespace jstir {

mpz_class binomial(long n, long k) {
  mpz_class out;
  if (k < 0) return out;
  mpz_class nn = n;
  mpz_bin_ui(out.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpq_class& x = p.coeffs()[i];
    if (x.get_den() != 1) {
      throw Error(ErrorCode::kNonIntegerCoefficient,
                  "coefficient " + std::to_string(i) + " is " + x.get_str());
    }
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& x : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  mpz_class l = 1;
  for (const auto& x : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) {
    mpz_class v = l / x.get_den();
    c.push_back(v * x.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<mpq_class> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<mpq_class> q(r.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    mpq_class f = r[i + db] / b.leading();
    q[i] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  int delta = a.degree() - db + 1;
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.leading();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const std::size_t dr = r.size() - 1;
    const mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    const std::size_t off = dr - static_cast<std::size_t>(db);
    for (int j = 0; j <= db; ++j) r[off + j] -= lr * b.coeffs()[j];
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    --delta;
  }
  IntPoly rem(std::move(r));
  if (delta > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta));
    rem *= f;
  }
  return rem;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

namespace {

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::kCrossCheckFailure, "inexact polynomial division");
  }
  return q;
}

}  // namespace

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "square-free part of 0");
  IntPoly g = gcd(p, derivative(p));
  return primitive_part(exact_quotient(to_rat(p), to_rat(g)));
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "decomposition of 0");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;

  const RatPoly f = to_rat(p);
  const RatPoly c = to_rat(gcd(p, derivative(p)));
  RatPoly w = exact_quotient(f, c);
  RatPoly y = exact_quotient(derivative(f), c);
  RatPoly z = y - derivative(w);
  for (unsigned mult = 1; w.degree() > 0; ++mult) {
    RatPoly g = to_rat(gcd(primitive_part(w), primitive_part(z)));
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - derivative(w);
    if (g.degree() > 0) out.push_back({primitive_part(g), mult});
  }
  return out;
}

RatPoly discrete_sum(const RatPoly& p) {
  if (p.is_zero()) return {};
  const std::size_t d = static_cast<std::size_t>(p.degree());

  // Newton coefficients: p(n) = sum_j b_j C(n, j) with b_j = (Delta^j p)(0).
  std::vector<mpq_class> diffs(d + 1);
  for (std::size_t m = 0; m <= d; ++m) diffs[m] = p(mpq_class(static_cast<unsigned long>(m)));
  std::vector<mpq_class> b(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    b[j] = diffs[0];
    for (std::size_t m = 0; m + 1 < diffs.size() - j; ++m) diffs[m] = diffs[m + 1] - diffs[m];
  }

  // sum_{m=1..n} C(m, j) = C(n+1, j+1) - [j == 0].
  RatPoly out = RatPoly::constant(-b[0]);
  RatPoly choose{mpq_class(1), mpq_class(1)};  // C(n+1, 1)
  for (std::size_t j = 0; j <= d; ++j) {
    if (j > 0) {
      // C(n+1, j+1) = C(n+1, j) * (n+1-j) / (j+1)
      RatPoly step{mpq_class(1) - mpq_class(static_cast<unsigned long>(j)), mpq_class(1)};
      choose = choose * step;
      choose *= mpq_class(1, static_cast<unsigned long>(j + 1));
    }
    out += choose * b[j];
  }
  return out;
}

std::vector<mpq_class> series_numerator(std::span<const mpq_class> series,
                                        unsigned power) {
  std::vector<mpq_class> out(series.size());
  for (std::size_t j = 0; j < series.size(); ++j) {
    mpq_class acc = 0;
    for (std::size_t l = 0; l <= j && l <= power; ++l) {
      mpq_class term = series[j - l] * mpq_class(binomial(power, static_cast<long>(l)));
      if (l % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out[j] = acc;
  }
  return out;
}

IntPoly gf_numerator(const RatPoly& p, unsigned d) {
  if (p.degree() > static_cast<int>(d)) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree " + std::to_string(p.degree()) + " exceeds bound " + std::to_string(d));
  }
  std::vector<mpq_class> series(d + 1);
  for (unsigned n = 0; n <= d; ++n) series[n] = p(mpq_class(n));
  return to_int(RatPoly(series_numerator(series, d + 1)));
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  if (p.is_zero()) return 0;
  // Homogenized Horner: den^deg * p(num/den), den > 0.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = p.leading();
  mpz_class den_pow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc *= num;
    acc += p.coeffs()[static_cast<std::size_t>(i)] * den_pow;
  }
  return sgn(acc);
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPoly d = derivative(p);
  if (d.is_zero()) return chain;
  mpz_class g0 = content(d);
  std::vector<mpz_class> dc = d.coeffs();
  for (auto& x : dc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g0.get_mpz_t());
  chain.emplace_back(std::move(dc));
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * rem; the chain needs -rem up to a positive factor.
    const int delta = a.degree() - b.degree() + 1;
    const bool flip = sgn(b.leading()) < 0 && delta % 2 == 1;
    mpz_class g = content(r);
    if (!flip) g = -g;
    std::vector<mpz_class> c = r.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    chain.emplace_back(std::move(c));
  }
  return chain;
}

namespace {

template <class SignFn>
std::size_t variations(const std::vector<IntPoly>& chain, SignFn sign_of) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int sign_at_pos_inf(const IntPoly& q) { return sgn(q.leading()); }
int sign_at_neg_inf(const IntPoly& q) {
  int s = sgn(q.leading());
  return q.degree() % 2 == 0 ? s : -s;
}

}  // namespace

std::size_t real_root_count(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root count of 0");
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "empty interval");
  const auto chain = sturm_chain(square_free_part(p));
  const std::size_t vlo = variations(chain, [&](const IntPoly& q) { return sign_at(q, lo); });
  const std::size_t vhi = variations(chain, [&](const IntPoly& q) { return sign_at(q, hi); });
  return vlo - vhi;
}

std::size_t real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "root count of 0");
  const auto chain = sturm_chain(square_free_part(p));
  return variations(chain, sign_at_neg_inf) - variations(chain, sign_at_pos_inf);
}

bool is_real_rooted(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "real-rootedness of 0");
  const std::size_t m = p.valuation();
  IntPoly deflated(std::vector<mpz_class>(p.coeffs().begin() + static_cast<long>(m),
                                          p.coeffs().end()));
  std::size_t real = 0;
  for (const auto& [factor, mult] : square_free_decomposition(deflated)) {
    real += mult * real_root_count(factor);
  }
  return real == static_cast<std::size_t>(deflated.degree());
}

bool is_unimodal(std::span<const mpz_class> seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

}  // namespace jstir

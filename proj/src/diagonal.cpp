#include "jstir/diagonal.hpp"

#include <string>

namespace jstir {

namespace {

std::string cell(unsigned k, unsigned i) {
  return "(" + std::to_string(k) + "," + std::to_string(i) + ")";
}

// p_{k,i}(n) must equal [z^i] JS(n+k, n; z) for n = 1..k+3.
void cross_check_second(const DiagonalPoly& d, const JSTriangle& tri) {
  for (unsigned n = 1; n <= d.k + 3; ++n) {
    const IntPoly& entry = tri.entry(n + d.k, n);
    for (unsigned i = 0; i <= d.k; ++i) {
      if (d[i](mpq_class(n)) != mpq_class(entry.coeff(i))) {
        throw Error(ErrorCode::kCrossCheckFailure,
                    "p" + cell(d.k, i) + " disagrees with JS(" + std::to_string(n + d.k) + "," +
                        std::to_string(n) + ";z)");
      }
    }
  }
}

DiagonalPoly next_diagonal(const DiagonalPoly& prev) {
  DiagonalPoly out;
  out.k = prev.k + 1;
  out.kind = Kind::kSecond;
  const RatPoly n_poly{mpq_class(0), mpq_class(1)};
  const RatPoly n_squared{mpq_class(0), mpq_class(0), mpq_class(1)};
  for (unsigned i = 0; i <= out.k; ++i) {
    RatPoly step;
    if (i <= prev.k) step += n_squared * prev[i];
    if (i >= 1) step += n_poly * prev[i - 1];
    // discrete_sum fixes the value at n = 0 to zero.
    out.coeffs_by_i.push_back(discrete_sum(step));
  }
  return out;
}

}  // namespace

std::vector<DiagonalPoly> diagonal_second_upto(unsigned k_max) {
  const JSTriangle tri = JSTriangle::build(Kind::kSecond, 2 * k_max + 3);
  std::vector<DiagonalPoly> out;
  out.push_back(DiagonalPoly{0, Kind::kSecond, {RatPoly{1}}});
  cross_check_second(out.back(), tri);
  for (unsigned k = 1; k <= k_max; ++k) {
    out.push_back(next_diagonal(out.back()));
    cross_check_second(out.back(), tri);
  }
  return out;
}

DiagonalPoly diagonal_second(unsigned k) { return diagonal_second_upto(k).back(); }

DiagonalPoly diagonal_first(unsigned k) {
  const DiagonalPoly p = diagonal_second(k);
  DiagonalPoly q;
  q.k = k;
  q.kind = Kind::kFirst;
  for (unsigned i = 0; i <= k; ++i) {
    RatPoly r = reflect(p[i]);
    if (i % 2 == 1) r = -r;
    q.coeffs_by_i.push_back(std::move(r));
  }

  const JSTriangle tri = JSTriangle::build(Kind::kFirst, k + 4);
  for (unsigned n = k; n <= k + 4; ++n) {
    const IntPoly& entry = tri.entry(n, n - k);
    for (unsigned i = 0; i <= k; ++i) {
      if (q[i](mpq_class(n)) != mpq_class(entry.coeff(i))) {
        throw Error(ErrorCode::kCrossCheckFailure,
                    "q" + cell(k, i) + " disagrees with js(" + std::to_string(n) + "," +
                        std::to_string(n - k) + ";z)");
      }
    }
  }
  return q;
}

DescentTable::DescentTable(unsigned k_max, DescentMethod method)
    : k_max_(k_max), method_(method), rows_(k_max + 1) {
  for (unsigned k = 0; k <= k_max; ++k) rows_[k].resize(k + 1);
}

const IntPoly& DescentTable::at(unsigned k, unsigned i) const {
  if (k > k_max_ || i > k) {
    throw Error(ErrorCode::kIndexOutOfRange, "descent table cell " + cell(k, i));
  }
  return rows_[k][i];
}

void DescentTable::set(unsigned k, unsigned i, IntPoly a) {
  if (k > k_max_ || i > k) {
    throw Error(ErrorCode::kIndexOutOfRange, "descent table cell " + cell(k, i));
  }
  rows_[k][i] = std::move(a);
}

mpz_class DescentTable::coeff(unsigned k, unsigned i, unsigned j) const {
  return at(k, i).coeff(j);
}

bool DescentTable::same_values(const DescentTable& other) const {
  return rows_ == other.rows_;
}

DescentTable descent_table_gf(unsigned k_max) {
  DescentTable table(k_max, DescentMethod::kGfTransform);
  const auto diagonals = diagonal_second_upto(k_max);
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      table.set(k, i, gf_numerator(diagonals[k][i], 3 * k - i));
    }
  }
  return table;
}

DescentTable descent_table_rec(unsigned k_max) {
  DescentTable table(k_max, DescentMethod::kRecurrence);
  table.set(0, 0, IntPoly{1});
  // a_{k,i,j} with the zero boundary; level 0 holds only a_{0,0,0} = 1.
  auto prev = [&](unsigned k, long i, long j) -> mpz_class {
    if (i < 0 || j < 0 || i > static_cast<long>(k)) return 0;
    return table.coeff(k, static_cast<unsigned>(i), static_cast<unsigned>(j));
  };
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const long top = 2L * k - i;
      const long base = 3L * k - i;
      std::vector<mpz_class> a(static_cast<std::size_t>(top + 1));
      for (long j = 1; j <= top; ++j) {
        const long ii = i;
        mpz_class v = 0;
        v += mpz_class(j * j) * prev(k - 1, ii, j);
        v += mpz_class(2 * (j - 1) * (base - j - 1) + (base - 2)) * prev(k - 1, ii, j - 1);
        v += mpz_class((base - j) * (base - j)) * prev(k - 1, ii, j - 2);
        v += mpz_class(j) * prev(k - 1, ii - 1, j);
        v += mpz_class(base - j) * prev(k - 1, ii - 1, j - 1);
        a[static_cast<std::size_t>(j)] = v;
      }
      table.set(k, i, IntPoly(std::move(a)));
    }
  }
  return table;
}

bool first_kind_gf_check(unsigned k, unsigned i) {
  if (i > k) throw Error(ErrorCode::kInvalidArgument, "need i <= k");
  const DiagonalPoly q = diagonal_first(k);
  const unsigned d = 3 * k - i;
  const IntPoly a = gf_numerator(diagonal_second(k)[i], d);

  std::vector<mpq_class> series(d + 2);
  for (unsigned n = 1; n <= d + 1; ++n) series[n] = q[i](mpq_class(n));
  const std::vector<mpq_class> numer = series_numerator(series, d + 1);

  for (unsigned j = 0; j <= d + 1; ++j) {
    mpq_class expected(a.coeff(d + 1 - j));
    if (k % 2 == 1) expected = -expected;
    if (numer[j] != expected) return false;
  }
  return true;
}

mpz_class descent_row_sum(unsigned k, unsigned i) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, k - i);
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, i);
  den *= two * factorial(i) * factorial(k - i);
  return factorial(3 * k - i) / den;
}

mpq_class diagonal_leading_coefficient(unsigned k, unsigned i) {
  mpq_class out(mpz_class(1), factorial(3 * k - i) / descent_row_sum(k, i));
  out.canonicalize();
  return out;
}

}  // namespace jstir

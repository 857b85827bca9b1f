#include "jstir/suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jstir/diagonal.hpp"
#include "jstir/format.hpp"
#include "jstir/jsnumbers.hpp"
#include "jstir/permutations.hpp"

namespace jstir {

namespace {

std::string str(const mpz_class& x) { return x.get_str(); }
std::string str(const mpq_class& x) { return x.get_str(); }
std::string str(const IntPoly& p) { return to_text(p, "t"); }
std::string str(std::size_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const std::vector<int>& w) {
  std::string out;
  for (std::size_t l = 0; l < w.size(); ++l) out += (l ? " " : "") + std::to_string(w[l]);
  return out;
}
std::string str(const Word& w) { return to_string(w); }

std::string subset_id(const Subset& s) {
  std::string out = "{";
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
  return out + "}";
}

std::string ki(unsigned k, unsigned i) {
  return "k=" + std::to_string(k) + ",i=" + std::to_string(i);
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  template <class T>
  void expect_eq(const std::string& id, const T& expected, const T& actual) {
    ++report_.cases;
    if (!(expected == actual)) report_.failures.push_back({id, str(expected), str(actual)});
  }

  void expect(const std::string& id, bool ok, std::string expected, std::string actual) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({id, std::move(expected), std::move(actual)});
  }

  VerifyReport finish() {
    std::stable_sort(report_.failures.begin(), report_.failures.end(),
                     [](const Failure& a, const Failure& b) { return a.case_id < b.case_id; });
    return std::move(report_);
  }

 private:
  VerifyReport report_;
};

// Packs a word into one integer; distinct words of one multiset get distinct
// codes as long as the base-(2k+2) expansion fits in 64 bits.
std::uint64_t encode(std::span<const Letter> w) {
  std::uint64_t code = 0;
  for (const auto& l : w) code = code * 16 + static_cast<std::uint64_t>(2 * l.value + l.barred);
  return code;
}

std::uint64_t encode(std::span<const int> w) {
  std::uint64_t code = 0;
  for (int x : w) code = code * 16 + static_cast<std::uint64_t>(x);
  return code;
}

mpq_class pochhammer(const mpq_class& a, unsigned s) {
  mpq_class out = 1;
  for (unsigned r = 0; r < s; ++r) out *= a + r;
  return out;
}

// Coefficient of t^n in sum_j w_j t^j / (1-t)^(d+1).
mpz_class rational_series_coeff(const IntPoly& w, unsigned d, unsigned n) {
  mpz_class out = 0;
  for (unsigned j = 0; j <= n && j < w.size(); ++j) out += w.coeff(j) * binomial(n - j + d, d);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "diagonal", "posets",
                                              "bijections", "egge",     "all"};
  return names;
}

VerifyReport verify_identities() {
  Recorder rec("identities");
  for (unsigned n = 0; n <= 10; ++n) {
    rec.expect_eq("defining/second/n=" + std::to_string(n), true,
                  verify_defining_identity(Kind::kSecond, n));
    rec.expect_eq("defining/first/n=" + std::to_string(n), true,
                  verify_defining_identity(Kind::kFirst, n));
  }

  const JSTriangle tri = build_triangle(Kind::kSecond, 12);
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const std::string id = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
      mpz_class s = k <= n - 1 ? mpz_class(k * stirling2(tri, n - 1, k)) : mpz_class(0);
      s += stirling2(tri, n - 1, k - 1);
      rec.expect_eq("stirling2" + id, s, stirling2(tri, n, k));
      mpz_class t = k <= n - 1 ? mpz_class(k * k * central_T(tri, n - 1, k)) : mpz_class(0);
      t += central_T(tri, n - 1, k - 1);
      rec.expect_eq("central" + id, t, central_T(tri, n, k));
    }
  }

  const mpq_class a(2, 3);
  for (unsigned k = 1; k <= 20; ++k) {
    mpq_class lhs = 0;
    for (unsigned s = 0; s < k; ++s) lhs += pochhammer(a, s) / mpq_class(factorial(s));
    const mpq_class rhs = pochhammer(a + 1, k - 1) / mpq_class(factorial(k - 1));
    rec.expect_eq("pochhammer/k=" + std::to_string(k), rhs, lhs);
  }
  return rec.finish();
}

VerifyReport verify_diagonal() {
  Recorder rec("diagonal");
  const auto diagonals = diagonal_second_upto(6);
  for (unsigned k = 0; k <= 6; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const RatPoly& p = diagonals[k][i];
      rec.expect_eq("degree/" + ki(k, i), static_cast<std::size_t>(3 * k - i),
                    static_cast<std::size_t>(p.degree()));
      rec.expect_eq("leading/" + ki(k, i), diagonal_leading_coefficient(k, i), p.leading());
      if (k >= 1) {
        for (unsigned m = 0; m <= k; ++m) {
          rec.expect_eq("root/" + ki(k, i) + ",n=-" + std::to_string(m), mpq_class(0),
                        p(mpq_class(-static_cast<long>(m))));
        }
      }
      const unsigned d = 3 * k - i;
      const IntPoly a = gf_numerator(p, d);
      for (unsigned n = 0; n <= d + 5; ++n) {
        rec.expect_eq("gf-roundtrip/" + ki(k, i) + ",n=" + std::to_string(n), p(mpq_class(n)),
                      mpq_class(rational_series_coeff(a, d, n)));
      }
    }
  }

  const DescentTable gf = descent_table_gf(8);
  const DescentTable rc = descent_table_rec(8);
  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const IntPoly& a = gf.at(k, i);
      rec.expect_eq("gf-vs-rec/" + ki(k, i), rc.at(k, i), a);
      bool positive = a.coeff(0) == 0 || k == 0;
      const unsigned top = k == 0 ? 0 : 2 * k - i;
      for (unsigned j = k == 0 ? 0 : 1; j <= top; ++j) positive = positive && a.coeff(j) > 0;
      positive = positive && a.size() == top + 1;
      rec.expect("positivity/" + ki(k, i), positive, "support 1.." + std::to_string(top), str(a));
      rec.expect_eq("row-sum/" + ki(k, i), descent_row_sum(k, i), a(mpz_class(1)));
    }
  }

  for (unsigned k = 0; k <= 5; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      rec.expect_eq("first-kind/" + ki(k, i), true, first_kind_gf_check(k, i));
    }
  }

  for (const auto& v : check_conjecture(9)) {
    rec.expect_eq("real-rooted/" + ki(v.k, v.i), true, v.real_rooted);
    rec.expect_eq("unimodal/" + ki(v.k, v.i), true, v.unimodal);
  }
  return rec.finish();
}

VerifyReport verify_posets() {
  Recorder rec("posets");
  const DescentTable rc = descent_table_rec(8);
  const DescentTable by_posets = descent_table_posets(4);
  for (unsigned k = 0; k <= 4; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      rec.expect_eq("sum-over-S/" + ki(k, i), rc.at(k, i), by_posets.at(k, i));
    }
  }
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        rec.expect_eq("product-formula/k=" + std::to_string(k) + ",S=" + subset_id(s),
                      A_S_at_one(k, s), descent_polynomial(build_R(k, s))(mpz_class(1)));
      }
    }
  }
  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      mpz_class total = 0;
      for (const Subset& s : subsets_of_size(k, i)) total += k == 0 ? mpz_class(1) : A_S_at_one(k, s);
      rec.expect_eq("level-sum/" + ki(k, i), count_linext_level(k, i), total);
      rec.expect_eq("partitions/" + ki(k, i), count_linext_level(k, i),
                    count_linext_level_by_partitions(k, i));
      rec.expect_eq("level-vs-table/" + ki(k, i), count_linext_level(k, i),
                    rc.at(k, i)(mpz_class(1)));
    }
  }

  const JSTriangle tri = build_triangle(Kind::kSecond, 8);
  for (unsigned k = 1; k <= 3; ++k) {
    const LabeledPoset p = build_P_legendre(k);
    for (unsigned n = 1; n <= 5; ++n) {
      rec.expect_eq("omega-P/k=" + std::to_string(k) + ",n=" + std::to_string(n),
                    legendre_stirling(tri, n - 1 + k, n - 1), order_polynomial_value(p, n));
    }
  }

  constexpr unsigned kOrder = 10;
  std::vector<std::pair<std::string, LabeledPoset>> named;
  named.emplace_back("fig1", LabeledPoset({1, 2, 3}, {{2, 1}, {2, 3}}));
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        LabeledPoset p = build_R(k, s);
        if (p.size() <= 7) named.emplace_back("R/k=" + std::to_string(k) + ",S=" + subset_id(s), p);
      }
    }
  }
  named.emplace_back("P/k=1", build_P_legendre(1));
  named.emplace_back("P/k=2", build_P_legendre(2));
  for (const auto& [id, p] : named) {
    rec.expect_eq("stanley/" + id, true, stanley_identity_holds(p, kOrder));
  }
  std::mt19937_64 rng(20240531);
  for (unsigned r = 0; r < 200; ++r) {
    const LabeledPoset p = random_poset(rng, 7, 0.35);
    std::ostringstream id;
    id << "stanley/random/" << (r < 10 ? "00" : r < 100 ? "0" : "") << r;
    rec.expect_eq(id.str(), true, stanley_identity_holds(p, kOrder));
  }
  return rec.finish();
}

VerifyReport verify_bijections() {
  Recorder rec("bijections");
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        const std::string id = "k=" + std::to_string(k) + ",S=" + subset_id(s);
        const std::vector<Word> words = enumerate_jsp(k, s);
        std::vector<std::uint64_t> codes;
        codes.reserve(words.size());
        std::size_t bad_slots = 0;
        for (const Word& w : words) {
          codes.push_back(encode(w));
          const auto kinds = slot_kinds(w, DescentOrder::kJacobi);
          const auto d = static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), true));
          if (d != descents(w, DescentOrder::kJacobi) + 1) ++bad_slots;
        }
        std::sort(codes.begin(), codes.end());
        rec.expect_eq("slot-count/" + id, std::size_t{0}, bad_slots);

        const LabeledPoset poset = build_R(k, s);
        std::vector<std::uint64_t> images;
        std::size_t extensions = 0;
        std::string first_bad;
        for_each_linear_extension(poset, [&](std::span<const int> ext) {
          ++extensions;
          const Word w = phi(ext);
          const LinearExtension back = phi_inverse(w);
          const bool ok = descents(w, DescentOrder::kJacobi) == label_descents(ext) &&
                          std::equal(back.begin(), back.end(), ext.begin(), ext.end()) &&
                          std::binary_search(codes.begin(), codes.end(), encode(w));
          if (!ok && first_bad.empty()) {
            first_bad = str(std::vector<int>(ext.begin(), ext.end())) + " -> " + str(w);
          }
          images.push_back(encode(w));
        });
        std::sort(images.begin(), images.end());
        rec.expect("phi/" + id, first_bad.empty(), "descent-preserving roundtrip", first_bad);
        rec.expect_eq("phi-count/" + id, words.size(), extensions);
        rec.expect_eq("phi-onto/" + id, true, images == codes);

        std::string bad_inverse;
        for (const Word& w : words) {
          if (!(phi(phi_inverse(w)) == w) && bad_inverse.empty()) bad_inverse = str(w);
        }
        rec.expect("phi-inverse/" + id, bad_inverse.empty(), "roundtrip", bad_inverse);
      }
    }
  }

  for (unsigned k = 1; k <= 3; ++k) {
    const std::string id = "k=" + std::to_string(k);
    const LabeledPoset poset = build_P_legendre(k);
    std::vector<std::uint64_t> targets;
    for_each_linear_extension(poset, [&](std::span<const int> e) { targets.push_back(encode(e)); });
    std::sort(targets.begin(), targets.end());

    std::vector<std::uint64_t> images;
    std::string first_bad;
    const std::vector<Word> words = enumerate_jsp(k, {});
    for (const Word& w : words) {
      const LinearExtension e = psi(w);
      const bool ok = label_descents(e) == descents(w, DescentOrder::kLegendre) + 1 &&
                      psi_inverse(e) == w && is_linear_extension(poset, e);
      if (!ok && first_bad.empty()) first_bad = str(w) + " -> " + str(e);
      images.push_back(encode(e));
    }
    std::sort(images.begin(), images.end());
    rec.expect("psi/" + id, first_bad.empty(), "descent-shifting roundtrip", first_bad);
    rec.expect_eq("psi-onto/" + id, true, images == targets);
  }
  return rec.finish();
}

VerifyReport verify_egge() {
  Recorder rec("egge");
  const DescentTable rc = descent_table_rec(3);
  const std::vector<IntPoly> b = b_table_enum(3);
  for (unsigned k = 1; k <= 3; ++k) {
    const std::string id = "k=" + std::to_string(k);
    std::vector<IntPoly> row;
    for (unsigned i = 0; i <= k; ++i) row.push_back(rc.at(k, i));
    rec.expect_eq("transform/" + id, b[k], js_to_ls_transform(row));
    // Extensions of P_k are counted by t^des, one power below descent_polynomial.
    std::vector<mpz_class> by_des = descent_polynomial(build_P_legendre(k)).coeffs();
    by_des.erase(by_des.begin());
    rec.expect_eq("poset/" + id, b[k], IntPoly(std::move(by_des)));

    // Pattern-free words of every M_{k,S}, by Jacobi descents, against b.
    std::vector<unsigned long> counts(3 * k + 2, 0);
    std::vector<std::uint64_t> restored;
    std::string first_bad;
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        for (const Word& w : enumerate_jsp(k, s)) {
          if (has_bar_pattern(w)) continue;
          const unsigned d = descents(w, DescentOrder::kJacobi);
          ++counts[d + 1];
          const Word full = restore_bars(w, k);
          const bool ok = is_stirling_word(full) && full.size() == 3 * k &&
                          descents(full, DescentOrder::kLegendre) == d &&
                          strip_paired_bars(full) == w;
          if (!ok && first_bad.empty()) first_bad = str(w) + " -> " + str(full);
          restored.push_back(encode(full));
        }
      }
    }
    std::vector<mpz_class> c;
    for (unsigned long x : counts) c.emplace_back(x);
    rec.expect_eq("pattern-free/" + id, b[k], IntPoly(std::move(c)));
    rec.expect("restore/" + id, first_bad.empty(), "Legendre-Stirling, same descents", first_bad);
    std::sort(restored.begin(), restored.end());
    const bool distinct = std::adjacent_find(restored.begin(), restored.end()) == restored.end();
    rec.expect_eq("restore-bijective/" + id, true,
                  distinct && restored.size() == enumerate_jsp(k, {}).size());
  }
  return rec.finish();
}

VerifyReport run_suite(std::string_view name) {
  if (name == "identities") return verify_identities();
  if (name == "diagonal") return verify_diagonal();
  if (name == "posets") return verify_posets();
  if (name == "bijections") return verify_bijections();
  if (name == "egge") return verify_egge();
  if (name == "all") {
    VerifyReport all{"all", 0, {}};
    for (const auto& part : {verify_identities(), verify_diagonal(), verify_posets(),
                             verify_bijections(), verify_egge()}) {
      all.cases += part.cases;
      for (const auto& f : part.failures) all.failures.push_back({part.suite + "/" + f.case_id, f.expected, f.actual});
    }
    return all;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<ConjectureVerdict> check_conjecture(unsigned k_max) {
  const DescentTable table = descent_table_rec(k_max);
  std::vector<ConjectureVerdict> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const IntPoly& a = table.at(k, i);
      const auto& c = a.coeffs();
      const std::span<const mpz_class> support(c.begin() + static_cast<long>(a.valuation()), c.end());
      out.push_back({k, i, is_real_rooted(a), is_unimodal(support)});
    }
  }
  return out;
}

VerifyReport conjecture_report(const std::vector<ConjectureVerdict>& verdicts) {
  Recorder rec("conjecture");
  for (const auto& v : verdicts) {
    rec.expect_eq("real-rooted/" + ki(v.k, v.i), true, v.real_rooted);
    rec.expect_eq("unimodal/" + ki(v.k, v.i), true, v.unimodal);
  }
  return rec.finish();
}

bool stanley_identity_holds(const LabeledPoset& p, unsigned order) {
  const IntPoly w = descent_polynomial(p);
  const auto d = static_cast<unsigned>(p.size());
  for (unsigned n = 0; n <= order; ++n) {
    if (order_polynomial_value(p, n) != rational_series_coeff(w, d, n)) return false;
  }
  return true;
}

LabeledPoset random_poset(std::mt19937_64& rng, std::size_t max_size, double density) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  const std::size_t n = size_dist(rng);
  std::vector<int> pool(2 * max_size);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  // pool[0..n) in this order is a topological order of the result.
  std::vector<int> labels(pool.begin(), pool.begin() + static_cast<long>(n));
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge(rng)) rel.emplace_back(labels[a], labels[b]);
    }
  }
  return LabeledPoset(std::move(labels), std::move(rel));
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", failures}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& f : r.failures) {
    out << "FAIL " << f.case_id << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  out << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
  return out.str();
}

}  // namespace jstir

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "jstir/diagonal.hpp"
#include "jstir/permutations.hpp"
#include "jstir/posets.hpp"
#include "oracles.hpp"

using namespace jstir;

namespace {

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(std::string(JSTIR_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

Word w(std::string_view text) { return parse_word(text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("word text round trip") {
  const Word x = w("1 1 2' 2 2 1'");
  CHECK(x.size() == 6);
  CHECK(x[2] == Letter{2, true});
  CHECK(to_string(x) == "1 1 2' 2 2 1'");
  CHECK(parse_word("").empty());
  CHECK(code_of([] { parse_word("1 x"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_word("0"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_word("1''"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("letter orders") {
  CHECK(letter_less({1, true}, {1, false}, DescentOrder::kJacobi));
  CHECK_FALSE(letter_less({1, true}, {1, false}, DescentOrder::kLegendre));
  CHECK_FALSE(letter_less({1, false}, {1, true}, DescentOrder::kLegendre));
  CHECK(letter_less({1, false}, {2, true}, DescentOrder::kJacobi));
  CHECK(letter_less({1, false}, {2, true}, DescentOrder::kLegendre));
}

TEST_CASE("small enumerations") {
  CHECK(sorted(enumerate_jsp(1, {})) == sorted({w("1 1 1'"), w("1' 1 1")}));
  CHECK(enumerate_jsp(1, {1}) == std::vector<Word>{w("1 1")});
  CHECK(enumerate_jsp(0, {}) == std::vector<Word>{Word{}});
  CHECK(enumerate_jsp(2, {}).size() == 40);
  CHECK(enumerate_jsp(2, {1, 2}).size() == 3);
  CHECK(code_of([] { enumerate_jsp(7, {}); }) == ErrorCode::kTooLarge);
}

TEST_CASE("the twenty words of level one for k = 2") {
  std::set<std::string> expected;
  for (const auto& line : golden_lines("jsp_k2_i1.txt")) expected.insert(to_string(w(line)));
  REQUIRE(expected.size() == 20);
  std::set<std::string> got;
  for (const Subset& s : subsets_of_size(2, 1)) {
    for (const Word& x : enumerate_jsp(2, s)) got.insert(to_string(x));
  }
  CHECK(got == expected);
}

TEST_CASE("enumeration matches filtered permutations") {
  for (unsigned k = 0; k <= 3; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        const std::vector<Word> got = enumerate_jsp(k, s);
        CHECK(sorted(got) == oracle::stirling_words_by_filter(k, s));
        CHECK(std::set<Word>(got.begin(), got.end()).size() == got.size());
        for (const Word& x : got) CHECK(is_stirling_word(x));
      }
    }
  }
  CHECK_FALSE(is_stirling_word(w("1 1' 1")));
  CHECK(is_stirling_word(w("1 2 2 1")));
  CHECK_FALSE(is_stirling_word(w("2 1 2")));
}

TEST_CASE("descent counts") {
  CHECK(descents(w("1 2 2 2' 1 1'"), DescentOrder::kLegendre) == 1);
  CHECK(descents(w("1 2 2 2' 1 1'"), DescentOrder::kJacobi) == 3);
  CHECK(descents(w("1 1 2 3' 2 3 3 1'"), DescentOrder::kJacobi) == 2);
  CHECK(slot_kinds(w("2 1"), DescentOrder::kJacobi) == std::vector<bool>{false, true, true});
  CHECK(slot_kinds(std::vector<int>{1, 3, 2}) == std::vector<bool>{false, false, true, true});
  CHECK(slot_kinds(std::vector<int>{}) == std::vector<bool>{false});
}

TEST_CASE("descent slots number one more than descents") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        for_each_stirling_permutation(jsp_multiset(k, s), [&](std::span<const Letter> x) {
          for (auto order : {DescentOrder::kJacobi, DescentOrder::kLegendre}) {
            const auto kinds = slot_kinds(x, order);
            REQUIRE(kinds.size() == x.size() + 1);
            CHECK(static_cast<unsigned>(std::count(kinds.begin(), kinds.end(), true)) ==
                  descents(x, order) + 1);
          }
        });
      }
    }
  }
}

TEST_CASE("inserting the top block") {
  // Putting kk into a descent slot keeps the descent count; any other slot adds one.
  for (unsigned k = 2; k <= 4; ++k) {
    for (const Word& x : enumerate_jsp(k - 1, {})) {
      const auto kinds = slot_kinds(x, DescentOrder::kJacobi);
      const unsigned d = descents(x, DescentOrder::kJacobi);
      const int v = static_cast<int>(k);
      for (std::size_t slot = 0; slot <= x.size(); ++slot) {
        Word y = x;
        y.insert(y.begin() + static_cast<long>(slot), {Letter{v, false}, Letter{v, false}});
        CHECK(is_stirling_word(y));
        CHECK(descents(y, DescentOrder::kJacobi) == d + (kinds[slot] ? 0 : 1));
      }
    }
  }
}

TEST_CASE("enumerated descent table") {
  CHECK(a_table_enum(4).same_values(descent_table_rec(4)));
  CHECK(a_table_enum(2).at(2, 1) == IntPoly{0, 2, 12, 6});
  CHECK(code_of([] { a_table_enum(6); }) == ErrorCode::kTooLarge);
  CHECK(jsp_descent_polynomial(2, {1}, DescentOrder::kJacobi) +
            jsp_descent_polynomial(2, {2}, DescentOrder::kJacobi) ==
        IntPoly{0, 2, 12, 6});
}

TEST_CASE("Legendre-Stirling descent polynomials") {
  const auto b = b_table_enum(3);
  CHECK(b[0] == IntPoly{1});
  CHECK(b[1] == IntPoly{0, 2});
  CHECK(b[2] == IntPoly{0, 4, 24, 12});
  CHECK(b[3] == IntPoly{0, 8, 240, 984, 864, 144});
  for (const auto& line : golden_lines("egge_k2.txt")) {
    const auto space = line.find(' ');
    const long j = std::stol(line.substr(0, space));
    CHECK(b[2].coeff(static_cast<std::size_t>(j)) == mpz_class(line.substr(space + 1)));
  }
  CHECK(code_of([] { b_table_enum(5); }) == ErrorCode::kTooLarge);
}

TEST_CASE("Jacobi to Legendre transform") {
  const DescentTable a = descent_table_rec(4);
  CHECK(js_to_ls_transform(std::vector<IntPoly>{IntPoly{1}}) == IntPoly{1});
  const auto b = b_table_enum(4);
  for (unsigned k = 0; k <= 4; ++k) {
    std::vector<IntPoly> row;
    for (unsigned i = 0; i <= k; ++i) row.push_back(a.at(k, i));
    CHECK(js_to_ls_transform(row) == b[k]);
  }
  CHECK(code_of([] { js_to_ls_transform(std::vector<IntPoly>{}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("phi on examples") {
  CHECK(phi(std::vector<int>{1, 2, 3}) == w("1' 1 1"));
  CHECK(phi(std::vector<int>{2, 1, 3}) == w("1 1 1'"));
  CHECK(phi(std::vector<int>{2, 3}) == w("1 1"));
  CHECK(phi(std::vector<int>{2, 5, 1, 3, 7, 8, 6, 9}) == w("1 1 2 3' 2 3 3 1'"));
  CHECK(phi_inverse(w("1 1 2 3' 2 3 3 1'")) == LinearExtension{2, 5, 1, 3, 7, 8, 6, 9});
  CHECK(phi_inverse(w("1' 1 1")) == LinearExtension{1, 2, 3});
  CHECK(code_of([] { phi(std::vector<int>{1, 3, 2}); }) == ErrorCode::kNotAnExtension);
  CHECK(code_of([] { phi(std::vector<int>{1, 2}); }) == ErrorCode::kNotAnExtension);
  CHECK(code_of([] { phi_inverse(w("1 1' 1")); }) == ErrorCode::kNotAStirlingWord);
  CHECK(code_of([] { phi_inverse(w("1 1 2")); }) == ErrorCode::kNotAStirlingWord);
}

TEST_CASE("phi is a descent-preserving bijection") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        std::vector<Word> images;
        for_each_linear_extension(build_R(k, s), [&](std::span<const int> e) {
          const Word x = phi(e);
          CHECK(descents(x, DescentOrder::kJacobi) == label_descents(e));
          CHECK(phi_inverse(x) == LinearExtension(e.begin(), e.end()));
          images.push_back(x);
        });
        CHECK(sorted(images) == sorted(enumerate_jsp(k, s)));
      }
    }
  }
}

TEST_CASE("psi on examples") {
  CHECK(psi(w("1 1 1'")) == LinearExtension{1, 3, 2});
  CHECK(psi(w("1' 1 1")) == LinearExtension{3, 1, 2});
  CHECK(psi(w("2' 1 2 2 3 3 3' 1 1'")) == LinearExtension{6, 1, 4, 7, 9, 3, 2, 5, 8});
  CHECK(psi_inverse(std::vector<int>{6, 1, 4, 7, 9, 3, 2, 5, 8}) == w("2' 1 2 2 3 3 3' 1 1'"));
  CHECK(psi_inverse(std::vector<int>{3, 1, 2}) == w("1' 1 1"));
  CHECK(code_of([] { psi_inverse(std::vector<int>{1, 2, 3}); }) == ErrorCode::kNotAnExtension);
  CHECK(code_of([] { psi(w("1 1")); }) == ErrorCode::kNotAStirlingWord);
}

TEST_CASE("psi is a bijection shifting descents by one") {
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<LinearExtension> images;
    for (const Word& x : enumerate_jsp(k, {})) {
      const LinearExtension e = psi(x);
      CHECK(label_descents(e) == descents(x, DescentOrder::kLegendre) + 1);
      CHECK(psi_inverse(e) == x);
      images.push_back(e);
    }
    std::sort(images.begin(), images.end());
    CHECK(images == linear_extensions(build_P_legendre(k)));
  }
}

TEST_CASE("paired bar deletion") {
  CHECK(has_bar_pattern(w("1 1 1' 2 2")));
  CHECK_FALSE(has_bar_pattern(w("1' 1 1 2 2")));
  CHECK(strip_paired_bars(w("1 1 1' 2 2 2'")) == w("1 1 2 2"));
  CHECK(strip_paired_bars(w("1' 1 1 2 2 2'")) == w("1' 1 1 2 2"));
  CHECK(restore_bars(w("1 1 2 2"), 2) == w("1 1 1' 2 2 2'"));
  CHECK(restore_bars(w("1' 2 2 1 1"), 2) == w("1' 2 2 2' 1 1"));
  // Restoring then stripping is the identity on words without a paired bar.
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (const Subset& s : subsets_of_size(k, i)) {
        for (const Word& x : enumerate_jsp(k, s)) {
          const Word full = restore_bars(x, k);
          CHECK(is_stirling_word(full));
          CHECK(full.size() == 3 * k);
          if (!has_bar_pattern(x)) CHECK(strip_paired_bars(full) == x);
        }
      }
    }
  }
}

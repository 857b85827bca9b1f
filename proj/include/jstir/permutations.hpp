#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jstir/diagonal.hpp"
#include "jstir/exactpoly.hpp"
#include "jstir/posets.hpp"

namespace jstir {

struct Letter {
  int value = 0;
  bool barred = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  // Storage order only (value, then barred first); not a descent order.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class DescentOrder {
  kJacobi,    // 1' < 1 < 2' < 2 < ...
  kLegendre,  // 1' = 1 < 2' = 2 < ...
};

bool letter_less(const Letter& a, const Letter& b, DescentOrder order);

using Word = std::vector<Letter>;

// "1 1 2' 2 2 1'"
std::string to_string(const Word& w);
// Inverse of to_string; throws kInvalidArgument on malformed text.
Word parse_word(std::string_view text);

// Letters available for a Stirling-type permutation: `copies[v-1]` unbarred
// copies of v plus one barred copy when `barred[v-1]` is set.
struct LetterMultiset {
  std::vector<unsigned> copies;
  std::vector<bool> barred;

  std::size_t length() const;
};

// M_k with the barred letters of `removed` deleted.
LetterMultiset jsp_multiset(unsigned k, const Subset& removed);

// Letters strictly between two equal letters are larger in the Jacobi order.
bool is_stirling_word(std::span<const Letter> w);

// Visits every Stirling permutation of `m` once. Built by insertion: for
// v = 1, 2, ... insert v' into a slot, then the block of v's into a slot,
// slots tried left to right.
void for_each_stirling_permutation(const LetterMultiset& m,
                                   const std::function<void(std::span<const Letter>)>& visit);

constexpr unsigned kMaxJspK = 6;

// Jacobi-Stirling permutations of M_k minus the barred letters in `removed`.
// Throws kTooLarge for k > 6.
std::vector<Word> enumerate_jsp(unsigned k, const Subset& removed);

unsigned descents(std::span<const Letter> w, DescentOrder order);

// Descent flag per slot 0..m of a word with sentinels w_0 = w_{m+1} = 0.
std::vector<bool> slot_kinds(std::span<const Letter> w, DescentOrder order);
std::vector<bool> slot_kinds(std::span<const int> w);

// a'_{k,i,j}: Jacobi-Stirling permutations in JSP_{k,i} with j-1 descents.
// k_max <= 5.
DescentTable a_table_enum(unsigned k_max);
// Descent polynomial of JSP_{k,S}, sum t^(des+1).
IntPoly jsp_descent_polynomial(unsigned k, const Subset& removed, DescentOrder order);

// Index k holds sum_j b_{k,j} t^j, counted over Legendre-Stirling
// permutations with Legendre descents. k_max <= 4.
std::vector<IntPoly> b_table_enum(unsigned k_max);

// sum_{i} sum_{l} (-1)^l C(i,l) a_{k,i,j-l}, for the row A_{k,0..k}.
IntPoly js_to_ls_transform(std::span<const IntPoly> a_row);

// Descent-preserving bijection L(R_{k,S}) -> JSP_{k,S'}, where S' holds the
// barred copies of S. Throws kNotAnExtension.
Word phi(std::span<const int> extension);
// Throws kNotAStirlingWord.
LinearExtension phi_inverse(std::span<const Letter> word);

// Bijection LSP_k -> L(P_k) with des psi(w) = des_legendre(w) + 1.
// Throws kNotAStirlingWord.
LinearExtension psi(std::span<const Letter> word);
// Throws kNotAnExtension.
Word psi_inverse(std::span<const int> extension);

// True when some u' sits immediately after a u.
bool has_bar_pattern(std::span<const Letter> w);
// Deletes every u' that sits immediately after its second u.
Word strip_paired_bars(std::span<const Letter> w);
// Puts every missing u' (u <= k) right after the second u.
Word restore_bars(std::span<const Letter> w, unsigned k);

}  // namespace jstir

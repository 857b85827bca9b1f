#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "jstir/diagonal.hpp"
#include "jstir/exactpoly.hpp"

namespace jstir {

using Subset = std::vector<unsigned>;  // sorted, distinct
using LinearExtension = std::vector<int>;

// All i-element subsets of {1..k}, lexicographic.
std::vector<Subset> subsets_of_size(unsigned k, unsigned i);

// Finite poset on distinct positive integer labels, given by a generating
// relation (usually the cover pairs). Labels are never renumbered.
class LabeledPoset {
 public:
  static constexpr std::size_t kMaxSize = 64;

  // Throws kInvalidArgument on duplicate or non-positive labels, relations
  // mentioning unknown labels, or cycles.
  LabeledPoset(std::vector<int> labels, std::vector<std::pair<int, int>> covers);

  std::size_t size() const { return labels_.size(); }
  // Ascending.
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Index of a label in labels(); throws kInvalidArgument if absent.
  std::size_t index_of(int label) const;
  // Bitmask over indices of the elements covered by element `idx`.
  std::uint64_t lower_mask(std::size_t idx) const { return lower_[idx]; }
  // Strict order from the transitive closure.
  bool less(int a, int b) const;

 private:
  std::vector<int> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> lower_;
  std::vector<std::uint64_t> below_;  // transitive closure
};

constexpr std::size_t kMaxExtensionPosetSize = 18;

// Visits every linear extension once, in lexicographic order of the label
// words. Throws kTooLarge above kMaxExtensionPosetSize elements.
void for_each_linear_extension(const LabeledPoset& p,
                               const std::function<void(std::span<const int>)>& visit);
std::vector<LinearExtension> linear_extensions(const LabeledPoset& p);

bool is_linear_extension(const LabeledPoset& p, std::span<const int> word);

// Descents of a label word in the natural integer order.
unsigned label_descents(std::span<const int> word);

// sum over linear extensions of t^(des + 1).
IntPoly descent_polynomial(const LabeledPoset& p);

constexpr std::size_t kMaxOrderPolySize = 10;
constexpr unsigned kMaxOrderPolyArg = 12;

// Number of (P, omega)-partitions with parts in [n], by exhaustive search.
mpz_class order_polynomial_value(const LabeledPoset& p, unsigned n);

// Jacobi-Stirling poset: labels {1..3k} minus {3m-2 : m in s}; 3m covers
// 3m-2 (if present), 3m-1 and 3(m-1). Throws kInvalidSubset unless s is a
// subset of {1..k}.
LabeledPoset build_R(unsigned k, const Subset& s);

// Legendre-Stirling poset: labels {1..3k}; 3m-1 covers 3m-2, 3m and 3m-4.
LabeledPoset build_P_legendre(unsigned k);

constexpr unsigned kMaxPosetTableK = 4;

// A_{k,i}(t) as the sum over |S| = i of descent_polynomial(R_{k,S}).
// Throws kTooLarge for k_max > 4.
DescentTable descent_table_posets(unsigned k_max);

// (3k-i)! / prod_{j=1..k} (3j - l_j(S)), l_j(S) = |{s in S : s <= j}|.
mpz_class A_S_at_one(unsigned k, const Subset& s);

// Closed form (3k-i)! / (3^{k-i} 2^i i! (k-i)!).
mpz_class count_linext_level(unsigned k, unsigned i);
// 2^{k-i} times the number of partitions of [3k-i] into k-i blocks of size 3
// and i blocks of size 2, counted by the smallest-element recursion.
mpz_class count_linext_level_by_partitions(unsigned k, unsigned i);

}  // namespace jstir

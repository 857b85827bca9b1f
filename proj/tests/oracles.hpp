#pragma once

// Slow, independent reference computations. None of these call into the
// algorithm they are used to check.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jstir/permutations.hpp"

namespace oracle {

// Number of set partitions of [n] into k blocks, by restricted growth strings.
std::uint64_t set_partitions(unsigned n, unsigned k);

// T(n,k) from x^n = sum_k T(n,k) x prod_{i=1}^{k-1}(x + k/2 - i), by
// triangular back-substitution over the rationals.
mpq_class central_factorial(unsigned n, unsigned k);

// [z^i] of sum_{1<=j_1<=...<=j_k<=n} prod_r j_r (z + j_r), by listing tuples.
mpz_class monotone_tuple_sum(unsigned k, unsigned n, unsigned i);

// JS(n,k;z) at an integer z by solving the connection identity numerically.
std::vector<mpz_class> js_second_at(unsigned n, long z);

// Distinct permutations of the multiset, kept when letters between two equal
// letters are all larger (Jacobi order); sorted.
std::vector<jstir::Word> stirling_words_by_filter(unsigned k, const std::vector<unsigned>& removed);

// All label orders compatible with the relation, sorted.
std::vector<std::vector<int>> linear_extensions_by_filter(
    std::vector<int> labels, const std::vector<std::pair<int, int>>& relation);

// Maps f: labels -> [n] that are weakly increasing along the transitive
// closure and strictly increasing across relation pairs (a,b) with a > b,
// checked on every comparable pair.
mpz_class order_polynomial_by_maps(const std::vector<int>& labels,
                                   const std::vector<std::pair<int, int>>& relation, unsigned n);

}  // namespace oracle

#include "jstir/posets.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace jstir {

std::vector<Subset> subsets_of_size(unsigned k, unsigned i) {
  std::vector<Subset> out;
  if (i > k) return out;
  Subset cur;
  std::function<void(unsigned)> rec = [&](unsigned next) {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = next; v + (i - cur.size()) <= k + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

LabeledPoset::LabeledPoset(std::vector<int> labels, std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  std::sort(labels_.begin(), labels_.end());
  if (labels_.size() > kMaxSize) {
    throw Error(ErrorCode::kTooLarge, "poset has more than 64 elements");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] <= 0) throw Error(ErrorCode::kInvalidArgument, "labels must be positive");
    if (i > 0 && labels_[i] == labels_[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate label " + std::to_string(labels_[i]));
    }
  }
  lower_.assign(labels_.size(), 0);
  for (const auto& [a, b] : covers_) {
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    if (ia == ib) throw Error(ErrorCode::kInvalidArgument, "reflexive relation");
    lower_[ib] |= std::uint64_t{1} << ia;
  }

  // Kahn-style pass: closure in topological order, failing on a cycle.
  below_.assign(labels_.size(), 0);
  std::uint64_t done = 0;
  const std::uint64_t all =
      labels_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << labels_.size()) - 1;
  while (done != all) {
    bool progressed = false;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((done & bit) || (lower_[i] & ~done)) continue;
      std::uint64_t b = lower_[i];
      for (std::uint64_t m = lower_[i]; m; m &= m - 1) b |= below_[std::countr_zero(m)];
      below_[i] = b;
      done |= bit;
      progressed = true;
    }
    if (!progressed) throw Error(ErrorCode::kInvalidArgument, "relation has a cycle");
  }
}

std::size_t LabeledPoset::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw Error(ErrorCode::kInvalidArgument, "unknown label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool LabeledPoset::less(int a, int b) const {
  return (below_[index_of(b)] >> index_of(a)) & 1U;
}

void for_each_linear_extension(const LabeledPoset& p,
                               const std::function<void(std::span<const int>)>& visit) {
  const std::size_t n = p.size();
  if (n > kMaxExtensionPosetSize) {
    throw Error(ErrorCode::kTooLarge,
                "linear extensions limited to " + std::to_string(kMaxExtensionPosetSize) +
                    " elements");
  }
  std::vector<int> word;
  word.reserve(n);
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
    if (word.size() == n) {
      visit(word);
      return;
    }
    // Indices follow ascending labels, so this emits words lexicographically.
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (p.lower_mask(i) & ~placed)) continue;
      word.push_back(p.labels()[i]);
      rec(placed | bit);
      word.pop_back();
    }
  };
  rec(0);
}

std::vector<LinearExtension> linear_extensions(const LabeledPoset& p) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, [&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

bool is_linear_extension(const LabeledPoset& p, std::span<const int> word) {
  if (word.size() != p.size()) return false;
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != p.labels()) return false;
  std::vector<std::size_t> position(p.size());
  for (std::size_t pos = 0; pos < word.size(); ++pos) position[p.index_of(word[pos])] = pos;
  for (const auto& [a, b] : p.covers()) {
    if (position[p.index_of(a)] > position[p.index_of(b)]) return false;
  }
  return true;
}

unsigned label_descents(std::span<const int> word) {
  unsigned d = 0;
  for (std::size_t l = 0; l + 1 < word.size(); ++l) d += word[l] > word[l + 1];
  return d;
}

IntPoly descent_polynomial(const LabeledPoset& p) {
  std::vector<unsigned long> counts(p.size() + 1, 0);
  for_each_linear_extension(p, [&](std::span<const int> w) { ++counts[label_descents(w) + 1]; });
  std::vector<mpz_class> c;
  c.reserve(counts.size());
  for (unsigned long x : counts) c.emplace_back(x);
  return IntPoly(std::move(c));
}

mpz_class order_polynomial_value(const LabeledPoset& p, unsigned n) {
  if (p.size() > kMaxOrderPolySize || n > kMaxOrderPolyArg) {
    throw Error(ErrorCode::kTooLarge, "brute-force order polynomial limited to " +
                                          std::to_string(kMaxOrderPolySize) + " elements and n <= " +
                                          std::to_string(kMaxOrderPolyArg));
  }
  if (n == 0) return p.size() == 0 ? 1 : 0;
  const std::size_t size = p.size();

  // Elements with nothing above them are constrained only from below, so
  // they are counted in closed form after everything else is fixed.
  std::uint64_t has_upper = 0;
  for (std::size_t i = 0; i < size; ++i) has_upper |= p.lower_mask(i);
  std::vector<std::size_t> inner;
  std::vector<std::size_t> tops;
  {
    std::uint64_t done = 0;
    while (inner.size() + tops.size() < size) {
      for (std::size_t i = 0; i < size; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((done & bit) || (p.lower_mask(i) & ~done)) continue;
        done |= bit;
        ((has_upper & bit) ? inner : tops).push_back(i);
      }
    }
  }

  std::vector<unsigned> value(size, 0);
  auto lower_bound = [&](std::size_t i) {
    unsigned lb = 1;
    for (std::uint64_t m = p.lower_mask(i); m; m &= m - 1) {
      const std::size_t a = static_cast<std::size_t>(std::countr_zero(m));
      const unsigned strict = p.labels()[a] > p.labels()[i] ? 1U : 0U;
      lb = std::max(lb, value[a] + strict);
    }
    return lb;
  };

  std::uint64_t total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == inner.size()) {
      std::uint64_t prod = 1;
      for (std::size_t t : tops) {
        const unsigned lb = lower_bound(t);
        if (lb > n) return;
        prod *= n - lb + 1;
      }
      total += prod;
      return;
    }
    const std::size_t i = inner[depth];
    for (unsigned v = lower_bound(i); v <= n; ++v) {
      value[i] = v;
      rec(depth + 1);
    }
    value[i] = 0;
  };
  rec(0);
  return mpz_class(static_cast<unsigned long>(total));
}

namespace {

void check_subset(unsigned k, const Subset& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1 || s[j] > k || (j > 0 && s[j] <= s[j - 1])) {
      throw Error(ErrorCode::kInvalidSubset,
                  "subset must be strictly increasing within 1.." + std::to_string(k));
    }
  }
}

bool contains(const Subset& s, unsigned m) { return std::binary_search(s.begin(), s.end(), m); }

}  // namespace

LabeledPoset build_R(unsigned k, const Subset& s) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "R_k needs k >= 1");
  check_subset(k, s);
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;
  for (unsigned m = 1; m <= k; ++m) {
    const int top = static_cast<int>(3 * m);
    if (!contains(s, m)) {
      labels.push_back(top - 2);
      covers.emplace_back(top - 2, top);
    }
    labels.push_back(top - 1);
    labels.push_back(top);
    covers.emplace_back(top - 1, top);
    if (m > 1) covers.emplace_back(top - 3, top);
  }
  return LabeledPoset(std::move(labels), std::move(covers));
}

LabeledPoset build_P_legendre(unsigned k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "P_k needs k >= 1");
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;
  for (unsigned m = 1; m <= k; ++m) {
    const int spine = static_cast<int>(3 * m - 1);
    labels.insert(labels.end(), {spine - 1, spine, spine + 1});
    covers.emplace_back(spine - 1, spine);
    covers.emplace_back(spine + 1, spine);
    if (m > 1) covers.emplace_back(spine - 3, spine);
  }
  return LabeledPoset(std::move(labels), std::move(covers));
}

DescentTable descent_table_posets(unsigned k_max) {
  if (k_max > kMaxPosetTableK) {
    throw Error(ErrorCode::kTooLarge,
                "poset enumeration limited to k <= " + std::to_string(kMaxPosetTableK));
  }
  DescentTable table(k_max, DescentMethod::kPosets);
  table.set(0, 0, IntPoly{1});
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      IntPoly a;
      for (const Subset& s : subsets_of_size(k, i)) a += descent_polynomial(build_R(k, s));
      table.set(k, i, std::move(a));
    }
  }
  return table;
}

mpz_class A_S_at_one(unsigned k, const Subset& s) {
  check_subset(k, s);
  const unsigned i = static_cast<unsigned>(s.size());
  mpz_class den = 1;
  unsigned l = 0;
  for (unsigned j = 1; j <= k; ++j) {
    if (contains(s, j)) ++l;
    den *= 3 * j - l;
  }
  return factorial(3 * k - i) / den;
}

mpz_class count_linext_level(unsigned k, unsigned i) {
  if (i > k) throw Error(ErrorCode::kInvalidArgument, "need i <= k");
  return descent_row_sum(k, i);
}

mpz_class count_linext_level_by_partitions(unsigned k, unsigned i) {
  if (i > k) throw Error(ErrorCode::kInvalidArgument, "need i <= k");
  const unsigned triples = k - i;
  const unsigned pairs = i;
  // table[a][b]: partitions of a (3a+2b)-set into a triples and b pairs.
  std::vector<std::vector<mpz_class>> table(triples + 1, std::vector<mpz_class>(pairs + 1));
  for (unsigned a = 0; a <= triples; ++a) {
    for (unsigned b = 0; b <= pairs; ++b) {
      if (a == 0 && b == 0) {
        table[a][b] = 1;
        continue;
      }
      // The block holding the smallest element is a triple or a pair.
      const long rest = 3L * a + 2L * b - 1;
      mpz_class v = 0;
      if (a > 0) v += binomial(rest, 2) * table[a - 1][b];
      if (b > 0) v += mpz_class(rest) * table[a][b - 1];
      table[a][b] = v;
    }
  }
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, triples);
  return two * table[triples][pairs];
}

}  // namespace jstir

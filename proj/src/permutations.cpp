#include "jstir/permutations.hpp"

#include <algorithm>
#include <sstream>

namespace jstir {

bool letter_less(const Letter& a, const Letter& b, DescentOrder order) {
  if (a.value != b.value) return a.value < b.value;
  return order == DescentOrder::kJacobi && a.barred && !b.barred;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i].value);
    if (w[i].barred) out += '\'';
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (tok.back() == '\'') {
      l.barred = true;
      tok.pop_back();
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "bad letter '" + tok + "'");
    }
    l.value = v;
    w.push_back(l);
  }
  return w;
}

std::size_t LetterMultiset::length() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < copies.size(); ++v) n += copies[v] + (barred[v] ? 1 : 0);
  return n;
}

LetterMultiset jsp_multiset(unsigned k, const Subset& removed) {
  for (std::size_t j = 0; j < removed.size(); ++j) {
    if (removed[j] < 1 || removed[j] > k || (j > 0 && removed[j] <= removed[j - 1])) {
      throw Error(ErrorCode::kInvalidSubset, "barred subset must lie in 1.." + std::to_string(k));
    }
  }
  LetterMultiset m{std::vector<unsigned>(k, 2), std::vector<bool>(k, true)};
  for (unsigned v : removed) m.barred[v - 1] = false;
  return m;
}

bool is_stirling_word(std::span<const Letter> w) {
  for (std::size_t u = 0; u < w.size(); ++u) {
    for (std::size_t x = u + 2; x < w.size(); ++x) {
      if (!(w[x] == w[u])) continue;
      for (std::size_t v = u + 1; v < x; ++v) {
        if (!letter_less(w[u], w[v], DescentOrder::kJacobi)) return false;
      }
    }
  }
  return true;
}

void for_each_stirling_permutation(const LetterMultiset& m,
                                   const std::function<void(std::span<const Letter>)>& visit) {
  Word w;
  w.reserve(m.length());
  const int top = static_cast<int>(m.copies.size());
  std::function<void(int)> place_value = [&](int v) {
    if (v > top) {
      visit(w);
      return;
    }
    const unsigned copies = m.copies[static_cast<std::size_t>(v - 1)];
    auto place_block = [&] {
      if (copies == 0) {
        place_value(v + 1);
        return;
      }
      for (std::size_t slot = 0; slot <= w.size(); ++slot) {
        w.insert(w.begin() + static_cast<long>(slot), copies, Letter{v, false});
        place_value(v + 1);
        w.erase(w.begin() + static_cast<long>(slot),
                w.begin() + static_cast<long>(slot + copies));
      }
    };
    if (m.barred[static_cast<std::size_t>(v - 1)]) {
      for (std::size_t slot = 0; slot <= w.size(); ++slot) {
        w.insert(w.begin() + static_cast<long>(slot), Letter{v, true});
        place_block();
        w.erase(w.begin() + static_cast<long>(slot));
      }
    } else {
      place_block();
    }
  };
  place_value(1);
}

std::vector<Word> enumerate_jsp(unsigned k, const Subset& removed) {
  if (k > kMaxJspK) {
    throw Error(ErrorCode::kTooLarge, "enumeration limited to k <= " + std::to_string(kMaxJspK));
  }
  std::vector<Word> out;
  for_each_stirling_permutation(jsp_multiset(k, removed), [&](std::span<const Letter> w) {
    out.emplace_back(w.begin(), w.end());
  });
  return out;
}

unsigned descents(std::span<const Letter> w, DescentOrder order) {
  unsigned d = 0;
  for (std::size_t l = 0; l + 1 < w.size(); ++l) d += letter_less(w[l + 1], w[l], order);
  return d;
}

std::vector<bool> slot_kinds(std::span<const Letter> w, DescentOrder order) {
  std::vector<bool> kinds(w.size() + 1, false);
  for (std::size_t j = 1; j <= w.size(); ++j) {
    kinds[j] = j == w.size() || letter_less(w[j], w[j - 1], order);
  }
  return kinds;
}

std::vector<bool> slot_kinds(std::span<const int> w) {
  std::vector<bool> kinds(w.size() + 1, false);
  for (std::size_t j = 1; j <= w.size(); ++j) kinds[j] = j == w.size() || w[j] < w[j - 1];
  return kinds;
}

namespace {

// A slot identified by its kind and its rank among the non-excluded slots
// of that kind, counted left to right.
struct SlotRef {
  bool descent;
  std::size_t ordinal;
};

bool excluded_at(const std::vector<bool>& excluded, std::size_t slot) {
  return slot < excluded.size() && excluded[slot];
}

SlotRef locate(const std::vector<bool>& kinds, std::size_t slot,
               const std::vector<bool>& excluded = {}) {
  SlotRef ref{kinds[slot], 0};
  for (std::size_t j = 0; j < slot; ++j) {
    if (kinds[j] == ref.descent && !excluded_at(excluded, j)) ++ref.ordinal;
  }
  return ref;
}

std::size_t find_slot(const std::vector<bool>& kinds, SlotRef ref,
                      const std::vector<bool>& excluded = {}) {
  std::size_t seen = 0;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    if (kinds[j] != ref.descent || excluded_at(excluded, j)) continue;
    if (seen++ == ref.ordinal) return j;
  }
  throw Error(ErrorCode::kCrossCheckFailure, "slot ordinal out of range");
}

template <class T>
std::size_t erase_first(std::vector<T>& v, const T& x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw Error(ErrorCode::kCrossCheckFailure, "expected element missing");
  const std::size_t pos = static_cast<std::size_t>(it - v.begin());
  v.erase(it);
  return pos;
}

constexpr Letter plain(int v) { return Letter{v, false}; }
constexpr Letter bar(int v) { return Letter{v, true}; }

void insert_pair(Word& w, std::size_t slot, int v) {
  w.insert(w.begin() + static_cast<long>(slot), 2, plain(v));
}

std::size_t erase_pair(Word& w, int v) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] == plain(v) && w[p + 1] == plain(v)) {
      w.erase(w.begin() + static_cast<long>(p), w.begin() + static_cast<long>(p + 2));
      return p;
    }
  }
  throw Error(ErrorCode::kNotAStirlingWord, "copies of " + std::to_string(v) + " not adjacent");
}

// Checks `w` is a Stirling word over M_k minus some barred letters and
// returns k. With `full`, every barred letter must be present.
unsigned validate_word(std::span<const Letter> w, bool full) {
  int k = 0;
  for (const auto& l : w) k = std::max(k, l.value);
  if (k < 1) throw Error(ErrorCode::kNotAStirlingWord, "empty word");
  std::vector<unsigned> plain_count(static_cast<std::size_t>(k), 0);
  std::vector<unsigned> bar_count(static_cast<std::size_t>(k), 0);
  for (const auto& l : w) {
    if (l.value < 1) throw Error(ErrorCode::kNotAStirlingWord, "letter below 1");
    auto& c = l.barred ? bar_count : plain_count;
    ++c[static_cast<std::size_t>(l.value - 1)];
  }
  for (int v = 0; v < k; ++v) {
    const auto sv = static_cast<std::size_t>(v);
    if (plain_count[sv] != 2 || bar_count[sv] > 1 || (full && bar_count[sv] != 1)) {
      throw Error(ErrorCode::kNotAStirlingWord,
                  "wrong multiplicity for letter " + std::to_string(v + 1) + " in " +
                      to_string(Word(w.begin(), w.end())));
    }
  }
  if (!is_stirling_word(w)) {
    throw Error(ErrorCode::kNotAStirlingWord,
                "Stirling condition fails for " + to_string(Word(w.begin(), w.end())));
  }
  return static_cast<unsigned>(k);
}

Word phi_rec(std::vector<int> pi, int k, const std::vector<bool>& in_s) {
  if (k == 0) return {};
  pi.pop_back();  // 3k is the maximum of R_{k,S}
  const std::size_t slot_b = erase_first(pi, 3 * k - 1);
  const SlotRef ref_b = locate(slot_kinds(pi), slot_b);

  Word w;
  if (!in_s[static_cast<std::size_t>(k)]) {
    const std::size_t slot_a = erase_first(pi, 3 * k - 2);
    const SlotRef ref_a = locate(slot_kinds(pi), slot_a);
    w = phi_rec(std::move(pi), k - 1, in_s);
    const std::size_t s = find_slot(slot_kinds(w, DescentOrder::kJacobi), ref_a);
    w.insert(w.begin() + static_cast<long>(s), bar(k));
  } else {
    w = phi_rec(std::move(pi), k - 1, in_s);
  }
  insert_pair(w, find_slot(slot_kinds(w, DescentOrder::kJacobi), ref_b), k);
  return w;
}

std::vector<int> phi_inverse_rec(Word w, int k) {
  if (k == 0) return {};
  const std::size_t slot_b = erase_pair(w, k);
  const SlotRef ref_b = locate(slot_kinds(w, DescentOrder::kJacobi), slot_b);

  std::vector<int> pi;
  auto it = std::find(w.begin(), w.end(), bar(k));
  if (it != w.end()) {
    const std::size_t slot_a = static_cast<std::size_t>(it - w.begin());
    w.erase(it);
    const SlotRef ref_a = locate(slot_kinds(w, DescentOrder::kJacobi), slot_a);
    pi = phi_inverse_rec(std::move(w), k - 1);
    pi.insert(pi.begin() + static_cast<long>(find_slot(slot_kinds(pi), ref_a)), 3 * k - 2);
  } else {
    pi = phi_inverse_rec(std::move(w), k - 1);
  }
  pi.insert(pi.begin() + static_cast<long>(find_slot(slot_kinds(pi), ref_b)), 3 * k - 1);
  pi.push_back(3 * k);
  return pi;
}

// Where the block kk (resp. label 3k-2) goes: right before k' (resp. 3k),
// or at a descent / non-descent ordinal with that special slot excluded.
struct PsiSecondSlot {
  bool before_top;
  SlotRef ref;
};

std::vector<bool> only(std::size_t size, std::initializer_list<std::size_t> slots) {
  std::vector<bool> mask(size, false);
  for (std::size_t s : slots) mask[s] = true;
  return mask;
}

// Ranks slots of a word ending in 3k-1 for inserting 3k-2. Slot order,
// except that when 3k does not directly precede 3k-1 the slot after 3k (a
// descent slot where 3k-2 would add a descent) and the slot before 3k-1 (a
// non-descent slot where it would not) trade places.
std::vector<std::size_t> low_slot_order(std::span<const int> w, int top) {
  std::vector<std::size_t> order(w.size() + 1);
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  const std::size_t at_top =
      static_cast<std::size_t>(std::find(w.begin(), w.end(), top) - w.begin());
  if (at_top + 2 < w.size()) std::swap(order[at_top + 1], order[w.size() - 1]);
  return order;
}

std::vector<int> psi_rec(Word w, int k) {
  if (k == 0) return {};
  const auto leg = DescentOrder::kLegendre;

  const std::size_t slot_kk = erase_pair(w, k);
  const std::size_t before_bar =
      static_cast<std::size_t>(std::find(w.begin(), w.end(), bar(k)) - w.begin());
  PsiSecondSlot second{slot_kk == before_bar, {}};
  if (!second.before_top) {
    const auto kinds = slot_kinds(w, leg);
    second.ref = locate(kinds, slot_kk, only(kinds.size(), {before_bar}));
  }

  w.erase(w.begin() + static_cast<long>(before_bar));
  const SlotRef ref_bar = locate(slot_kinds(w, leg), before_bar);

  std::vector<int> pi = psi_rec(std::move(w), k - 1);
  pi.push_back(3 * k - 1);
  {
    const auto kinds = slot_kinds(pi);
    const std::size_t s = find_slot(kinds, ref_bar, only(kinds.size(), {pi.size()}));
    pi.insert(pi.begin() + static_cast<long>(s), 3 * k);
  }
  const std::size_t before_top =
      static_cast<std::size_t>(std::find(pi.begin(), pi.end(), 3 * k) - pi.begin());
  std::size_t s = before_top;
  if (!second.before_top) {
    const auto kinds = slot_kinds(pi);
    const auto order = low_slot_order(pi, 3 * k);
    s = order[find_slot(kinds, second.ref, only(kinds.size(), {pi.size(), before_top}))];
  }
  pi.insert(pi.begin() + static_cast<long>(s), 3 * k - 2);
  return pi;
}

Word psi_inverse_rec(std::vector<int> pi, int k) {
  if (k == 0) return {};
  const auto leg = DescentOrder::kLegendre;

  const std::size_t slot_low = erase_first(pi, 3 * k - 2);
  const std::size_t before_top =
      static_cast<std::size_t>(std::find(pi.begin(), pi.end(), 3 * k) - pi.begin());
  PsiSecondSlot second{slot_low == before_top, {}};
  if (!second.before_top) {
    const auto kinds = slot_kinds(pi);
    const auto order = low_slot_order(pi, 3 * k);
    second.ref = locate(kinds, order[slot_low], only(kinds.size(), {pi.size(), before_top}));
  }

  pi.erase(pi.begin() + static_cast<long>(before_top));
  SlotRef ref_top;
  {
    const auto kinds = slot_kinds(pi);
    ref_top = locate(kinds, before_top, only(kinds.size(), {pi.size()}));
  }
  pi.pop_back();  // 3k-1

  Word w = psi_inverse_rec(std::move(pi), k - 1);
  const std::size_t at_bar = find_slot(slot_kinds(w, leg), ref_top);
  w.insert(w.begin() + static_cast<long>(at_bar), bar(k));
  std::size_t s = at_bar;
  if (!second.before_top) {
    const auto kinds = slot_kinds(w, leg);
    s = find_slot(kinds, second.ref, only(kinds.size(), {at_bar}));
  }
  insert_pair(w, s, k);
  return w;
}

}  // namespace

IntPoly jsp_descent_polynomial(unsigned k, const Subset& removed, DescentOrder order) {
  if (k > kMaxJspK) {
    throw Error(ErrorCode::kTooLarge, "enumeration limited to k <= " + std::to_string(kMaxJspK));
  }
  std::vector<unsigned long> counts(3 * k + 2, 0);
  for_each_stirling_permutation(jsp_multiset(k, removed), [&](std::span<const Letter> w) {
    ++counts[descents(w, order) + 1];
  });
  std::vector<mpz_class> c;
  for (unsigned long x : counts) c.emplace_back(x);
  return IntPoly(std::move(c));
}

DescentTable a_table_enum(unsigned k_max) {
  if (k_max > 5) throw Error(ErrorCode::kTooLarge, "a-table enumeration limited to k <= 5");
  DescentTable table(k_max, DescentMethod::kPermutations);
  table.set(0, 0, IntPoly{1});
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      IntPoly a;
      for (const Subset& s : subsets_of_size(k, i)) {
        a += jsp_descent_polynomial(k, s, DescentOrder::kJacobi);
      }
      table.set(k, i, std::move(a));
    }
  }
  return table;
}

std::vector<IntPoly> b_table_enum(unsigned k_max) {
  if (k_max > 4) throw Error(ErrorCode::kTooLarge, "b-table enumeration limited to k <= 4");
  std::vector<IntPoly> out{IntPoly{1}};
  for (unsigned k = 1; k <= k_max; ++k) {
    out.push_back(jsp_descent_polynomial(k, {}, DescentOrder::kLegendre));
  }
  return out;
}

IntPoly js_to_ls_transform(std::span<const IntPoly> a_row) {
  if (a_row.empty()) throw Error(ErrorCode::kInvalidArgument, "empty row");
  const std::size_t k = a_row.size() - 1;
  std::size_t top = 0;
  for (const auto& a : a_row) top = std::max(top, a.size());
  std::vector<mpz_class> b(top + k, 0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t l = 0; l <= i && l <= j; ++l) {
        mpz_class term = binomial(static_cast<long>(i), static_cast<long>(l)) * a_row[i].coeff(j - l);
        if (l % 2 == 0) {
          b[j] += term;
        } else {
          b[j] -= term;
        }
      }
    }
  }
  return IntPoly(std::move(b));
}

Word phi(std::span<const int> extension) {
  if (extension.empty()) throw Error(ErrorCode::kNotAnExtension, "empty word");
  const int top = *std::max_element(extension.begin(), extension.end());
  if (top < 3 || top % 3 != 0) {
    throw Error(ErrorCode::kNotAnExtension, "largest label must be 3k");
  }
  const unsigned k = static_cast<unsigned>(top / 3);
  Subset s;
  std::vector<bool> in_s(k + 1, false);
  for (unsigned m = 1; m <= k; ++m) {
    if (std::find(extension.begin(), extension.end(), static_cast<int>(3 * m - 2)) ==
        extension.end()) {
      s.push_back(m);
      in_s[m] = true;
    }
  }
  if (!is_linear_extension(build_R(k, s), extension)) {
    throw Error(ErrorCode::kNotAnExtension, "not a linear extension of R_{k,S}");
  }
  return phi_rec(std::vector<int>(extension.begin(), extension.end()), static_cast<int>(k), in_s);
}

LinearExtension phi_inverse(std::span<const Letter> word) {
  const unsigned k = validate_word(word, false);
  return phi_inverse_rec(Word(word.begin(), word.end()), static_cast<int>(k));
}

LinearExtension psi(std::span<const Letter> word) {
  const unsigned k = validate_word(word, true);
  return psi_rec(Word(word.begin(), word.end()), static_cast<int>(k));
}

Word psi_inverse(std::span<const int> extension) {
  if (extension.empty() || extension.size() % 3 != 0) {
    throw Error(ErrorCode::kNotAnExtension, "length must be 3k with k >= 1");
  }
  const unsigned k = static_cast<unsigned>(extension.size() / 3);
  if (!is_linear_extension(build_P_legendre(k), extension)) {
    throw Error(ErrorCode::kNotAnExtension, "not a linear extension of P_k");
  }
  return psi_inverse_rec(std::vector<int>(extension.begin(), extension.end()), static_cast<int>(k));
}

bool has_bar_pattern(std::span<const Letter> w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (!w[p].barred && w[p + 1].barred && w[p].value == w[p + 1].value) return true;
  }
  return false;
}

Word strip_paired_bars(std::span<const Letter> w) {
  Word out;
  std::vector<unsigned> seen;
  for (const auto& l : w) {
    const auto v = static_cast<std::size_t>(l.value);
    if (seen.size() <= v) seen.resize(v + 1, 0);
    if (l.barred && !out.empty() && out.back() == plain(l.value) && seen[v] == 2) continue;
    if (!l.barred) ++seen[v];
    out.push_back(l);
  }
  return out;
}

Word restore_bars(std::span<const Letter> w, unsigned k) {
  std::vector<bool> present(k + 1, false);
  for (const auto& l : w) {
    if (l.barred && l.value >= 1 && static_cast<unsigned>(l.value) <= k) present[l.value] = true;
  }
  Word out;
  std::vector<unsigned> seen(k + 1, 0);
  for (const auto& l : w) {
    out.push_back(l);
    if (l.barred || l.value < 1 || static_cast<unsigned>(l.value) > k) continue;
    if (++seen[l.value] == 2 && !present[l.value]) out.push_back(bar(l.value));
  }
  return out;
}

}  // namespace jstir

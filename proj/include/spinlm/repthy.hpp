#pragma once

// Tensor-space side: Young symmetrizers acting on word tensors, the modules
// they span, the contraction subspace, and the evaluation map into the
// matrix-defined rings.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlm/echelon.hpp"
#include "spinlm/field.hpp"
#include "spinlm/indexcomb.hpp"
#include "spinlm/rings.hpp"
#include "spinlm/tableaux.hpp"

namespace spinlm {

// Sparse tensor: word (letter codes, fixed length) -> coefficient.
template <class K>
struct TensorVector {
  std::map<std::vector<int>, K> terms;

  void add(const std::vector<int>& w, const K& c) {
    if (spinlm::is_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
      return;
    }
    it->second = it->second + c;
    if (spinlm::is_zero(it->second)) terms.erase(it);
  }

  bool is_zero() const { return terms.empty(); }

  bool operator==(const TensorVector& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto a = terms.begin();
    auto b = o.terms.begin();
    for (; a != terms.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
};

// Position bookkeeping for one shape: cell ids 1..l filled column by column,
// leftmost column first; row and column position groups drive the
// symmetrizer.
struct YoungData {
  Partition lambda;
  int l = 0;
  Tableau positions;
  std::vector<std::vector<int>> rows;  // position ids per row
  std::vector<std::vector<int>> cols;  // position ids per column
  long row_order = 1;
  long col_order = 1;
};

YoungData young_data(const Partition& lambda);

// Signed placement maps of the symmetrizer: entry k of the output word reads
// entry map[k] of the input. Row permutations are applied first, the signed
// column permutations second; this order makes the canonical-tableau image
// exactly row_order times the column-antisymmetrized word.
struct SymmetrizerMaps {
  std::vector<std::vector<int>> maps;  // 0-based placement arrays
  std::vector<int> signs;
};

SymmetrizerMaps symmetrizer_maps(const YoungData& yd);

constexpr int kMaxYoungLetters = 6;

template <class F>
void require_young_feasible(const F& field, int l) {
  if (l > kMaxYoungLetters)
    throw budget_error("word length " + std::to_string(l) +
                       " exceeds budget " + std::to_string(kMaxYoungLetters));
  uint32_t p = field.characteristic();
  if (p != 0 && static_cast<int>(p) <= l)
    throw std::domain_error("characteristic " + std::to_string(p) +
                            " too small for length " + std::to_string(l));
}

template <class F>
TensorVector<typename F::Elt> young_apply(const F& field,
                                          const Partition& lambda,
                                          const std::vector<int>& letters,
                                          int N) {
  using K = typename F::Elt;
  YoungData yd = young_data(lambda);
  if (static_cast<int>(letters.size()) != yd.l)
    throw std::invalid_argument("word length does not match the shape");
  for (int x : letters)
    if (x < 1 || x > N) throw std::invalid_argument("letter out of range");
  require_young_feasible(field, yd.l);

  SymmetrizerMaps sm = symmetrizer_maps(yd);
  std::map<std::vector<int>, long> acc;
  std::vector<int> out(yd.l);
  for (size_t i = 0; i < sm.maps.size(); ++i) {
    for (int k = 0; k < yd.l; ++k) out[k] = letters[sm.maps[i][k]];
    acc[out] += sm.signs[i];
  }
  TensorVector<K> tv;
  for (const auto& [w, c] : acc)
    if (c != 0) tv.terms.emplace(w, field(c));
  return tv;
}

inline long word_space_size(int l, int N) {
  long s = 1;
  for (int i = 0; i < l; ++i) s *= N;
  return s;
}

inline long word_index(const std::vector<int>& w, int N) {
  long idx = 0;
  for (int x : w) idx = idx * N + (x - 1);
  return idx;
}

// All fillings of the shape's positions, optionally restricted to columns
// that strictly increase; the restriction drops only vectors that are zero
// or sign-duplicates under the column antisymmetrization.
std::vector<std::vector<int>> module_fillings(const YoungData& yd, int N,
                                              bool column_strict_only);

template <class F>
long m_lambda_dim(const F& field, const Partition& lambda, int N,
                  bool column_strict_only = true) {
  using EC = EchelonChoice<F>;
  using K = typename F::Elt;
  YoungData yd = young_data(lambda);
  require_young_feasible(field, yd.l);
  long width = word_space_size(yd.l, N);
  SymmetrizerMaps sm = symmetrizer_maps(yd);
  auto ech = EC::make(field, static_cast<int>(width));
  long rank = 0;
  std::vector<int> out(yd.l);
  for (const auto& fill : module_fillings(yd, N, column_strict_only)) {
    std::vector<long> row(width, 0);
    for (size_t i = 0; i < sm.maps.size(); ++i) {
      for (int k = 0; k < yd.l; ++k) out[k] = fill[sm.maps[i][k]];
      row[word_index(out, N)] += sm.signs[i];
    }
    std::vector<K> krow;
    krow.reserve(width);
    for (long v : row) krow.push_back(field(v));
    if (EC::insert(ech, field, std::move(krow))) ++rank;
  }
  return rank;
}

// Generators of the pairing-contraction subspace: for each position pair and
// each filling of the other positions, the sum over mirrored letter pairs.
template <class F>
std::vector<TensorVector<typename F::Elt>> contraction_subspace(const F& field,
                                                                int l, int N) {
  using K = typename F::Elt;
  std::vector<TensorVector<K>> out;
  if (l < 2) return out;
  std::vector<int> rest_positions;
  for (int p = 1; p <= l; ++p)
    for (int q = p + 1; q <= l; ++q) {
      rest_positions.clear();
      for (int r = 1; r <= l; ++r)
        if (r != p && r != q) rest_positions.push_back(r);
      int nr = static_cast<int>(rest_positions.size());
      std::vector<int> fill(nr, 1);
      while (true) {
        TensorVector<K> tv;
        for (int a = 1; a <= N; ++a) {
          std::vector<int> w(l);
          w[p - 1] = a;
          w[q - 1] = bar(a, N);
          for (int i = 0; i < nr; ++i) w[rest_positions[i] - 1] = fill[i];
          tv.add(w, field(1));
        }
        out.push_back(std::move(tv));
        int i = nr - 1;
        while (i >= 0 && fill[i] == N) {
          fill[i] = 1;
          --i;
        }
        if (i < 0) break;
        ++fill[i];
      }
    }
  return out;
}

// dim of the symmetrizer module modulo its intersection with the contraction
// subspace, computed as rank(M + U) - rank(U); rational arithmetic only.
long o_lambda_dim(const Partition& lambda, int N);

struct RepnRow {
  int N = 0;
  Partition lambda;
  long dim_M = 0;
  long dim_O = 0;
  long count_ON = 0;
  bool match = false;
};

// One row per shape with 1 <= |shape| <= max_cells satisfying the two-column
// length bound.
std::vector<RepnRow> repn_table(int N, int max_cells);

// Evaluation map gateway: the canonical bideterminant takes value one at the
// barred-diagonal point, and every pairing contraction of variables lies in
// the plain ideal.
template <class F>
bool verify_evaluation_map(const F& field, int N, const Partition& lambda,
                           Budget budget = Budget{}) {
  using K = typename F::Elt;
  if (lambda.empty()) return true;
  if (!is_valid_partition(lambda)) throw std::invalid_argument("invalid shape");
  int m = N / 2;
  int nrows = static_cast<int>(lambda.size());
  if (nrows > m) throw std::invalid_argument("first column too long");

  Tableau tl = canonical_tableau(lambda, N);
  VarMatrix X(N, N);
  auto p = bideterminant(field, Bitableau{tl, tl}, X);
  std::vector<K> point;
  point.reserve(N * N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      bool barred_diag = (a == b) && (a % 2 == 1) && (a <= 2 * m - 1);
      point.push_back(field(barred_diag ? 1 : 0));
    }
  K val = evaluate(field, p, point);
  if (!(val == field(1))) return false;

  GradedRing<F> ring(field, IdealSpec{N, MatrixForm::J, Variant::naive}, budget);
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k) {
      auto q = poly_zero(field, N * N);
      for (int a = 1; a <= N; ++a)
        q = q + poly_var(field, N * N, X.var(j, a)) *
                    poly_var(field, N * N, X.var(k, bar(a, N)));
      if (!ring.membership(q)) return false;
    }
  return true;
}

}  // namespace spinlm

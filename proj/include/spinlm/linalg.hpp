#pragma once
// Dense exact matrices: elimination-based determinant, rank and inverse.
// Sizes here are small (identity checks, group elements); the big graded
// ranks live in rings.hpp with their own fraction-free engine.

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinlm/field.hpp"
#include "spinlm/indexcomb.hpp"

namespace spinlm {

template <class K>
struct DenseMat {
  int nr = 0, nc = 0;
  std::vector<K> a;

  DenseMat() = default;
  DenseMat(int r, int c, K fill) : nr(r), nc(c), a(static_cast<std::size_t>(r) * c, fill) {}
  K& at(int r, int c) { return a[static_cast<std::size_t>(r) * nc + c]; }
  const K& at(int r, int c) const { return a[static_cast<std::size_t>(r) * nc + c]; }
  bool operator==(const DenseMat& o) const {
    return nr == o.nr && nc == o.nc && a == o.a;
  }
};

template <class F>
DenseMat<typename F::Elt> mat_zero(const F& field, int r, int c) {
  return DenseMat<typename F::Elt>(r, c, field(0));
}

template <class F>
DenseMat<typename F::Elt> mat_identity(const F& field, int n) {
  auto m = mat_zero(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field(1);
  return m;
}

template <class F>
DenseMat<typename F::Elt> mat_from_pattern(const F& field,
                                           const std::vector<std::vector<int>>& pat) {
  int r = static_cast<int>(pat.size());
  int c = r == 0 ? 0 : static_cast<int>(pat[0].size());
  auto m = mat_zero(field, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = field(pat[i][j]);
  return m;
}

template <class K>
DenseMat<K> mat_mul(const DenseMat<K>& a, const DenseMat<K>& b) {
  if (a.nc != b.nr) throw std::invalid_argument("mat_mul: shape mismatch");
  DenseMat<K> r(a.nr, b.nc, a.a.empty() ? K{} : a.a[0] - a.a[0]);
  for (int i = 0; i < a.nr; ++i)
    for (int k = 0; k < a.nc; ++k) {
      const K& x = a.at(i, k);
      if (is_zero(x)) continue;
      for (int j = 0; j < b.nc; ++j) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

template <class K>
DenseMat<K> mat_add(const DenseMat<K>& a, const DenseMat<K>& b) {
  if (a.nr != b.nr || a.nc != b.nc) throw std::invalid_argument("mat_add: shape");
  DenseMat<K> r = a;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += b.a[i];
  return r;
}

template <class K>
DenseMat<K> mat_sub(const DenseMat<K>& a, const DenseMat<K>& b) {
  if (a.nr != b.nr || a.nc != b.nc) throw std::invalid_argument("mat_sub: shape");
  DenseMat<K> r = a;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
  return r;
}

template <class K>
DenseMat<K> mat_transpose(const DenseMat<K>& a) {
  DenseMat<K> r = a;
  r.nr = a.nc;
  r.nc = a.nr;
  for (int i = 0; i < a.nr; ++i)
    for (int j = 0; j < a.nc; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

// 1-based index sequences, order-sensitive.
template <class K>
DenseMat<K> submatrix(const DenseMat<K>& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  DenseMat<K> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                m.a.empty() ? K{} : m.a[0] - m.a[0]);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 1 || rows[i] > m.nr || cols[j] < 1 || cols[j] > m.nc)
        throw std::invalid_argument("submatrix index out of range");
      r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i] - 1, cols[j] - 1);
    }
  return r;
}

template <class F>
typename F::Elt mat_det(const F& field, DenseMat<typename F::Elt> m) {
  if (m.nr != m.nc) throw std::invalid_argument("det of non-square matrix");
  int n = m.nr;
  auto det = field(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return field(0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    typename F::Elt inv = field(1) / m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m.at(r, col))) continue;
      typename F::Elt f = m.at(r, col) * inv;
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

template <class F>
int mat_rank(const F& field, DenseMat<typename F::Elt> m) {
  int rank = 0;
  for (int col = 0; col < m.nc && rank < m.nr; ++col) {
    int piv = -1;
    for (int r = rank; r < m.nr; ++r)
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < m.nc; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    typename F::Elt inv = field(1) / m.at(rank, col);
    for (int r = rank + 1; r < m.nr; ++r) {
      if (is_zero(m.at(r, col))) continue;
      typename F::Elt f = m.at(r, col) * inv;
      for (int c = col; c < m.nc; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::optional<DenseMat<typename F::Elt>> mat_inverse(const F& field,
                                                     DenseMat<typename F::Elt> m) {
  if (m.nr != m.nc) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.nr;
  auto inv = mat_identity(field, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(m.at(piv, c), m.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    typename F::Elt pinv = field(1) / m.at(col, col);
    for (int c = 0; c < n; ++c) {
      m.at(col, c) *= pinv;
      inv.at(col, c) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(m.at(r, col))) continue;
      typename F::Elt f = m.at(r, col);
      for (int c = 0; c < n; ++c) {
        m.at(r, c) -= f * m.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

// Minor over (1-based) index sequences; empty minor is 1.
template <class F>
typename F::Elt minor_det(const F& field, const DenseMat<typename F::Elt>& m,
                          const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs equal row/col counts");
  if (rows.empty()) return field(1);
  return mat_det(field, submatrix(m, rows, cols));
}

}  // namespace spinlm

#pragma once
// Sparse multivariate polynomials over an exact field, with the minor and
// bideterminant constructors everything downstream is built from.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlm/field.hpp"
#include "spinlm/tableaux.hpp"

namespace spinlm {

struct Mono {
  std::vector<uint8_t> e;

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool operator==(const Mono& o) const { return e == o.e; }
};

inline Mono mono_one(int nvars) { return Mono{std::vector<uint8_t>(nvars, 0)}; }

inline Mono mono_var(int nvars, int v, int pow = 1) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable out of range");
  Mono m = mono_one(nvars);
  m.e[v] = static_cast<uint8_t>(pow);
  return m;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  if (a.e.size() != b.e.size()) throw std::invalid_argument("mixed rings");
  Mono m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    int s = m.e[i] + b.e[i];
    if (s > 255) throw budget_error("exponent overflow");
    m.e[i] = static_cast<uint8_t>(s);
  }
  return m;
}

// Graded reverse-lexicographic, arranged so map iteration starts at the
// leading monomial.
struct MonoGrevlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int v = static_cast<int>(a.e.size()) - 1; v >= 0; --v)
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    return false;
  }
};

template <class K>
struct Poly {
  int nvars = 0;
  std::map<Mono, K, MonoGrevlexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : terms.begin()->first.degree(); }

  void add_term(const Mono& m, const K& c) {
    if (spinlm::is_zero(c)) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (spinlm::is_zero(it->second)) terms.erase(it);
    }
  }

  bool operator==(const Poly& o) const {
    return nvars == o.nvars && terms == o.terms;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

template <class F>
Poly<typename F::Elt> poly_zero(const F&, int nvars) {
  Poly<typename F::Elt> p;
  p.nvars = nvars;
  return p;
}

template <class F>
Poly<typename F::Elt> poly_const(const F& field, int nvars, long c) {
  auto p = poly_zero(field, nvars);
  p.add_term(mono_one(nvars), field(c));
  return p;
}

template <class F>
Poly<typename F::Elt> poly_var(const F& field, int nvars, int v) {
  auto p = poly_zero(field, nvars);
  p.add_term(mono_var(nvars, v), field(1));
  return p;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("mixed rings");
  Poly<K> r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
  Poly<K> r = a;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
  return a + (-b);
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("mixed rings");
  Poly<K> r;
  r.nvars = a.nvars;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

template <class K>
Poly<K> scale(const Poly<K>& a, const K& c) {
  Poly<K> r;
  r.nvars = a.nvars;
  if (spinlm::is_zero(c)) return r;
  for (const auto& [m, coef] : a.terms) r.add_term(m, coef * c);
  return r;
}

template <class K>
bool is_homogeneous(const Poly<K>& a) {
  int d = -2;
  for (const auto& [m, c] : a.terms) {
    if (d == -2) d = m.degree();
    if (m.degree() != d) return false;
  }
  return true;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& a, int n, const Poly<K>& unit) {
  Poly<K> r = unit;
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// Every variable gets an image; the result lives in the images' ring.
template <class F>
Poly<typename F::Elt> substitute(const F& field, const Poly<typename F::Elt>& p,
                                 const std::vector<Poly<typename F::Elt>>& images) {
  if (static_cast<int>(images.size()) != p.nvars)
    throw std::invalid_argument("substitute: one image per variable required");
  int out_vars = images.empty() ? 0 : images[0].nvars;
  auto unit = poly_const(field, out_vars, 1);
  auto r = poly_zero(field, out_vars);
  for (const auto& [m, c] : p.terms) {
    auto term = scale(unit, c);
    for (int v = 0; v < p.nvars; ++v)
      if (m.e[v] > 0) term = term * poly_pow(images[v], m.e[v], unit);
    r = r + term;
  }
  return r;
}

template <class F>
typename F::Elt evaluate(const F& field, const Poly<typename F::Elt>& p,
                         const std::vector<typename F::Elt>& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    throw std::invalid_argument("evaluate: wrong point size");
  auto total = field(0);
  for (const auto& [m, c] : p.terms) {
    auto t = c;
    for (int v = 0; v < p.nvars; ++v)
      for (int k = 0; k < m.e[v]; ++k) t *= point[v];
    total += t;
  }
  return total;
}

template <class K>
std::string poly_to_string(const Poly<K>& p,
                           const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (int v = 0; v < p.nvars; ++v)
      if (m.e[v] > 0) {
        out += "*" + names[v];
        if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
      }
  }
  return out;
}

// The generic matrix of indeterminates x_{ab}; variable layout is row-major.
struct VarMatrix {
  int nrows = 0, ncols = 0;

  VarMatrix() = default;
  VarMatrix(int r, int c) : nrows(r), ncols(c) {}
  int nvars() const { return nrows * ncols; }
  int var(int a, int b) const {  // 1-based
    if (a < 1 || a > nrows || b < 1 || b > ncols)
      throw std::invalid_argument("matrix entry out of range");
    return (a - 1) * ncols + (b - 1);
  }
};

// Determinant of the submatrix with the listed (1-based) row and column
// sequences, order-sensitive; repeated indices cancel to zero.  The ambient
// polynomial ring may be larger than the matrix (total_vars).
template <class F>
Poly<typename F::Elt> minor_poly(const F& field, const VarMatrix& X,
                                 const std::vector<int>& rows,
                                 const std::vector<int>& cols,
                                 int total_vars = -1) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs equal row/col counts");
  int nv = total_vars < 0 ? X.nvars() : total_vars;
  if (nv < X.nvars()) throw std::invalid_argument("ambient ring too small");
  auto r = poly_zero(field, nv);
  int d = static_cast<int>(rows.size());
  if (d == 0) return poly_const(field, nv, 1);
  std::vector<int> perm(d);
  std::vector<bool> used(d, false);
  std::function<void(int, int)> rec = [&](int pos, int sign) {
    if (pos == d) {
      Mono m = mono_one(nv);
      for (int i = 0; i < d; ++i)
        m = mono_mul(m, mono_var(nv, X.var(rows[i], cols[perm[i]])));
      r.add_term(m, field(sign));
      return;
    }
    for (int j = 0; j < d; ++j) {
      if (used[j]) continue;
      int swaps = 0;
      for (int k = 0; k < j; ++k)
        if (!used[k]) ++swaps;
      used[j] = true;
      perm[pos] = j;
      rec(pos + 1, swaps % 2 == 0 ? sign : -sign);
      used[j] = false;
    }
  };
  rec(0, 1);
  return r;
}

// Product over columns of the column minors: rows of the matrix indexed by
// the left tableau's column, columns by the right one's.
template <class F>
Poly<typename F::Elt> bideterminant(const F& field, const Bitableau& bt,
                                    const VarMatrix& X, int total_vars = -1) {
  if (bt.s.shape() != bt.t.shape())
    throw std::invalid_argument("bitableau shapes differ");
  int nv = total_vars < 0 ? X.nvars() : total_vars;
  auto r = poly_const(field, nv, 1);
  int ncols = bt.s.rows.empty() ? 0 : static_cast<int>(bt.s.rows[0].size());
  for (int c = 0; c < ncols; ++c)
    r = r * minor_poly(field, X, bt.s.column(c), bt.t.column(c), nv);
  return r;
}

}  // namespace spinlm

#include "spinlm/linalg.hpp"

namespace spinlm {

// Images of x_{ab} under X -> L X R (either factor may be null = identity);
// the workhorse behind base change and group actions on the variables.
template <class F>
std::vector<Poly<typename F::Elt>> sandwich_images(
    const F& field, const VarMatrix& X, const DenseMat<typename F::Elt>* left,
    const DenseMat<typename F::Elt>* right) {
  if (left && (left->nr != X.nrows || left->nc != X.nrows))
    throw std::invalid_argument("sandwich: left factor shape");
  if (right && (right->nr != X.ncols || right->nc != X.ncols))
    throw std::invalid_argument("sandwich: right factor shape");
  std::vector<Poly<typename F::Elt>> images;
  images.reserve(X.nvars());
  for (int a = 1; a <= X.nrows; ++a)
    for (int b = 1; b <= X.ncols; ++b) {
      auto img = poly_zero(field, X.nvars());
      for (int r = 1; r <= X.nrows; ++r) {
        if (!left && r != a) continue;
        for (int s = 1; s <= X.ncols; ++s) {
          if (!right && s != b) continue;
          auto c = field(1);
          if (left) c *= left->at(a - 1, r - 1);
          if (right) c *= right->at(s - 1, b - 1);
          img.add_term(mono_var(X.nvars(), X.var(r, s)), c);
        }
      }
      images.push_back(std::move(img));
    }
  return images;
}

// x_{ab} -> (C^t X C)_{ab}
template <class F>
Poly<typename F::Elt> conjugate_variables(const F& field,
                                          const Poly<typename F::Elt>& p,
                                          const VarMatrix& X,
                                          const DenseMat<typename F::Elt>& C) {
  if (X.nrows != X.ncols || C.nr != X.nrows || C.nc != X.nrows)
    throw std::invalid_argument("conjugate_variables: square shapes required");
  auto Ct = mat_transpose(C);
  return substitute(field, p, sandwich_images(field, X, &Ct, &C));
}

// Determinant of a matrix of polynomials; expansion along the first row,
// skipping structural zeros.
template <class F>
Poly<typename F::Elt> det_poly(const F& field,
                               const std::vector<std::vector<Poly<typename F::Elt>>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) throw std::invalid_argument("det of empty matrix");
  int nv = m[0][0].nvars;
  if (n == 1) return m[0][0];
  auto r = poly_zero(field, nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<typename F::Elt>>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<typename F::Elt>> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    auto term = m[0][j] * det_poly(field, sub);
    r = (j % 2 == 0) ? r + term : r - term;
  }
  return r;
}

}  // namespace spinlm

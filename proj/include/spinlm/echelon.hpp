#pragma once

// Incremental exact row-echelon engines used for slice ranks, ideal
// membership, and independence certificates.
//
// FieldEchelon<F> eliminates with field division (intended for F_p).
// IntEchelon keeps integer rows and eliminates fraction-free with content
// reduction after every step (intended for rational input).
//
// Both engines accept one row at a time; rows keep their full width. Pivot
// columns are unique across stored rows, so rank == number of stored rows.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spinlm/field.hpp"

namespace spinlm {

template <class F>
class FieldEchelon {
 public:
  using K = typename F::Elt;

  explicit FieldEchelon(const F& field, int width)
      : field_(field), width_(width) {}

  int width() const { return width_; }
  long rank() const { return static_cast<long>(rows_.size()); }

  // Reduces `row` against the stored rows; if a nonzero remainder is left it
  // is normalized and stored. Returns true when the rank grew.
  bool insert(std::vector<K> row) {
    if (static_cast<int>(row.size()) != width_)
      throw std::invalid_argument("FieldEchelon: row width mismatch");
    int piv = reduce_(row);
    if (piv < 0) return false;
    K inv = row[piv].inv();
    for (int c = piv; c < width_; ++c) row[c] = row[c] * inv;
    pivot_of_col_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
  }

  bool in_span(std::vector<K> row) const {
    if (static_cast<int>(row.size()) != width_)
      throw std::invalid_argument("FieldEchelon: row width mismatch");
    return reduce_(row) < 0;
  }

 private:
  // Returns the pivot column of the remainder, or -1 when fully reduced.
  int reduce_(std::vector<K>& row) const {
    for (int c = 0; c < width_; ++c) {
      if (row[c].is_zero()) continue;
      auto it = pivot_of_col_.find(c);
      if (it == pivot_of_col_.end()) return c;
      const std::vector<K>& piv = rows_[it->second];
      K factor = row[c];  // pivot rows are normalized to leading 1
      for (int j = c; j < width_; ++j) row[j] = row[j] - factor * piv[j];
    }
    return -1;
  }

  F field_;
  int width_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
  std::map<int, int> pivot_of_col_;
};

// Fraction-free echelon over the integers. Rational rows are scaled to a
// primitive integer vector first; each elimination step is followed by a
// content division, so entries stay near the size of the underlying minors.
class IntEchelon {
 public:
  explicit IntEchelon(int width) : width_(width) {}

  int width() const { return width_; }
  long rank() const { return static_cast<long>(rows_.size()); }

  bool insert(const std::vector<Rat>& row) { return insert_z(to_integer(row)); }

  bool insert_z(std::vector<mpz_class> row) {
    if (static_cast<int>(row.size()) != width_)
      throw std::invalid_argument("IntEchelon: row width mismatch");
    int piv = reduce_(row);
    if (piv < 0) return false;
    normalize_(row, piv);
    pivot_of_col_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
  }

  bool in_span(const std::vector<Rat>& row) const {
    std::vector<mpz_class> z = to_integer(row);
    return reduce_(z) < 0;
  }

  std::vector<mpz_class> to_integer(const std::vector<Rat>& row) const {
    if (static_cast<int>(row.size()) != width_)
      throw std::invalid_argument("IntEchelon: row width mismatch");
    mpz_class scale(1);
    for (const Rat& q : row) {
      mpz_class den = q.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    }
    std::vector<mpz_class> z(width_);
    for (int c = 0; c < width_; ++c) {
      mpz_class num = row[c].get_num();
      mpz_class den = row[c].get_den();
      z[c] = num * (scale / den);
    }
    return z;
  }

 private:
  int reduce_(std::vector<mpz_class>& row) const {
    for (int c = 0; c < width_; ++c) {
      if (row[c] == 0) continue;
      auto it = pivot_of_col_.find(c);
      if (it == pivot_of_col_.end()) return c;
      const std::vector<mpz_class>& piv = rows_[it->second];
      mpz_class a = piv[c];
      mpz_class b = row[c];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      // row := a*row - b*piv zeroes column c exactly.
      mpz_class content(0);
      for (int j = c; j < width_; ++j) {
        row[j] = a * row[j] - b * piv[j];
        if (row[j] != 0) {
          if (content == 0)
            mpz_abs(content.get_mpz_t(), row[j].get_mpz_t());
          else
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
        }
      }
      if (content > 1)
        for (int j = c; j < width_; ++j) row[j] /= content;
    }
    return -1;
  }

  static void normalize_(std::vector<mpz_class>& row, int piv) {
    mpz_class content(0);
    for (size_t j = piv; j < row.size(); ++j) {
      if (row[j] != 0) {
        if (content == 0)
          mpz_abs(content.get_mpz_t(), row[j].get_mpz_t());
        else
          mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
      }
    }
    if (content > 1)
      for (size_t j = piv; j < row.size(); ++j) row[j] /= content;
    if (row[piv] < 0)
      for (size_t j = piv; j < row.size(); ++j) row[j] = -row[j];
  }

  int width_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<int> pivots_;
  std::map<int, int> pivot_of_col_;
};

// Uniform alias: modular fields eliminate with division, the rational field
// goes through the fraction-free integer engine.
template <class F>
struct EchelonChoice {
  using type = FieldEchelon<F>;
  static type make(const F& field, int width) { return type(field, width); }
  static bool insert(type& e, const F&, std::vector<typename F::Elt> row) {
    return e.insert(std::move(row));
  }
  static bool in_span(const type& e, const F&,
                      std::vector<typename F::Elt> row) {
    return e.in_span(std::move(row));
  }
};

template <>
struct EchelonChoice<QQ> {
  using type = IntEchelon;
  static type make(const QQ&, int width) { return type(width); }
  static bool insert(type& e, const QQ&, std::vector<Rat> row) {
    return e.insert(row);
  }
  static bool in_span(const type& e, const QQ&, std::vector<Rat> row) {
    return e.in_span(row);
  }
};

}  // namespace spinlm

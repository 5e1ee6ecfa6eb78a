#pragma once
// Scalar-matrix minor identities used as oracles: Laplace expansion along a
// fixed row set, the product formula for minors, and the minors-of-inverse
// identity (plain and half-size sign form).

#include <vector>

#include "spinlm/field.hpp"
#include "spinlm/indexcomb.hpp"
#include "spinlm/linalg.hpp"

namespace spinlm {

// Parity of (F, complement of F) as a permutation of [1,d], times the same
// for U.  This is the unique convention under which the expansion below
// holds; cross-checked on identity matrices in tests.
inline int laplace_sign(const Subset& F, const Subset& U, int d) {
  std::vector<int> seq = F;
  for (int x : complement(F, d)) seq.push_back(x);
  int s = perm_sign_by_inversions(seq);
  seq = U;
  for (int x : complement(U, d)) seq.push_back(x);
  return s * perm_sign_by_inversions(seq);
}

template <class F>
bool check_laplace(const F& field, const DenseMat<typename F::Elt>& A,
                   const Subset& Fset) {
  if (A.nr != A.nc) throw std::invalid_argument("check_laplace: square matrix only");
  int d = A.nr;
  auto rhs = field(0);
  Subset rest = complement(Fset, d);
  for (const Subset& U : subsets_of(d, static_cast<int>(Fset.size()))) {
    typename F::Elt part = minor_det(field, A, Fset, U) *
                            minor_det(field, A, rest, complement(U, d));
    rhs += field(laplace_sign(Fset, U, d)) * part;
  }
  return mat_det(field, A) == rhs;
}

template <class F>
bool check_binet_cauchy(const F& field, const DenseMat<typename F::Elt>& A,
                        const DenseMat<typename F::Elt>& B, const Subset& S,
                        const Subset& Sp) {
  if (A.nc != B.nr) throw std::invalid_argument("check_binet_cauchy: shapes");
  if (S.size() != Sp.size()) throw std::invalid_argument("check_binet_cauchy: sizes");
  auto lhs = minor_det(field, mat_mul(A, B), S, Sp);
  auto rhs = field(0);
  for (const Subset& U : subsets_of(A.nc, static_cast<int>(S.size())))
    rhs += minor_det(field, A, S, U) * minor_det(field, B, U, Sp);
  return lhs == rhs;
}

struct JacobiReport {
  bool plain = false;
  bool sign_form = false;       // meaningful only when applicable
  bool sign_applicable = false; // d even and p = d/2
  bool ok() const { return plain && (!sign_applicable || sign_form); }
};

template <class F>
JacobiReport check_jacobi(const F& field, const DenseMat<typename F::Elt>& A,
                          const Subset& S, const Subset& Sp) {
  if (A.nr != A.nc) throw std::invalid_argument("check_jacobi: square matrix only");
  if (S.size() != Sp.size()) throw std::invalid_argument("check_jacobi: sizes");
  int d = A.nr;
  auto inv = mat_inverse(field, A);
  if (!inv) throw std::domain_error("check_jacobi: singular matrix");
  auto lhs = minor_det(field, A, S, Sp);
  auto comp = minor_det(field, *inv, complement(Sp, d), complement(S, d));
  long sum = 0;
  for (int x : S) sum += x;
  for (int x : Sp) sum += x;
  auto det = mat_det(field, A);
  JacobiReport rep;
  rep.plain = lhs == det * field(sum % 2 == 0 ? 1 : -1) * comp;
  int p = static_cast<int>(S.size());
  if (d % 2 == 0 && 2 * p == d) {
    rep.sign_applicable = true;
    int n = d / 2;
    rep.sign_form =
        lhs == det * field(sign_sigma(S, n) * sign_sigma(Sp, n)) * comp;
  }
  return rep;
}

}  // namespace spinlm

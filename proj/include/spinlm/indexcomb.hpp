#pragma once
// Barred alphabet, subset complements and the three sign conventions.
//
// The alphabet for even N=2m is 1' < 1 < 2' < 2 < ... < m' < m (x' is the
// barred letter); odd N appends 0 as the largest letter.  Codes: x' -> 2x-1,
// x -> 2x, 0 -> N.  The ambient order of codes is the alphabet order.

#include <string>
#include <vector>

namespace spinlm {

// Sorted ascending, distinct entries; ambient range passed alongside.
using Subset = std::vector<int>;

// bar involution on codes: swaps 2x-1 <-> 2x, fixes the odd tail letter.
int bar(int a, int N);
bool is_barred(int a, int N);
std::string index_label(int a, int N);

// All k-subsets of [1,n], lexicographic.
std::vector<Subset> subsets_of(int n, int k);
Subset complement(const Subset& S, int ambient);

// Parity of the permutation sorting seq ascending; seq must have distinct
// entries.  Returns +1 or -1.
int perm_sign_by_inversions(const std::vector<int>& seq);

// ---- plain-integer world: S is an n-subset of [1,2n] ----

Subset star_subset(const Subset& S, int n);  // {2n+1-s : s in S}
Subset perp_subset(const Subset& S, int n);  // [1,2n] minus star_subset

// sigma_S maps [1,n] onto S and [n+1,2n] onto the complement, increasingly;
// sign computed by counting inversions of (sorted S, sorted complement).
int sign_sigma(const Subset& S, int n);
// Closed form (-1)^{sum S + ceil(n/2)}; kept as a cross-check oracle only.
int sign_sigma_formula(const Subset& S, int n);

int d_of(const Subset& S, int n, int i);  // #(S  ∩  [2n-i+1, 2n])

struct DComparison {
  int cmp;           // -1, 0, +1 for d_S vs d_{S^perp}
  bool window_rule;  // #(S ∩ [i+1, 2n-i]) >= n-i
};
DComparison d_comparison_predicate(const Subset& S, int n, int i);

// ---- barred-alphabet world: U is an m-subset of the N=2m letters ----

Subset bar_subset(const Subset& U, int N);
Subset perp_barred(const Subset& U, int N);  // complement of bar(U)

// tau_U rearranges (sorted U, then bars of sorted perp_barred(U)) into
// alphabet order; requires N even.
int sign_tau(const Subset& U, int N);

// 0/1 patterns of the two symmetric forms and the base-change between them.
std::vector<std::vector<int>> j_pattern(int N);  // 1 at (a, bar a)
std::vector<std::vector<int>> h_pattern(int N);  // 1 at (a, N+1-a)
std::vector<std::vector<int>> c_pattern(int N);  // h = c^t j c

}  // namespace spinlm

#pragma once
// Partitions, tableaux over the barred alphabet, and the standardness
// predicates that index ring bases.

#include <vector>

#include "spinlm/indexcomb.hpp"

namespace spinlm {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);

// Strict partial order: smaller size first; equal sizes compared by
// prefix-sum domination.
bool partition_dominance_less(const Partition& a, const Partition& b);
// Total refinement of the above (equal sizes fall back to lex on parts).
bool partition_total_less(const Partition& a, const Partition& b);

// Rows of letter codes, left-justified; row lengths weakly decreasing.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  std::vector<int> column(int c) const;  // 0-based column index
  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator!=(const Tableau& o) const { return rows != o.rows; }
};

struct Bitableau {
  Tableau s, t;  // same shape; s indexes rows of the matrix, t columns
};

// Strict comparison of same-shape tableaux: in the right-most differing
// column, the top-most differing entry decides.
bool tableau_order_prec(const Tableau& a, const Tableau& b);

bool is_gl_standard(const Tableau& t, int N);
bool is_on_standard(const Tableau& t, int N);

// Requires N even and first column of length N/2.
Tableau tableau_perp(const Tableau& t, int N);
int sign_tau_tableau(const Tableau& t, int N);  // tau of the first column set

// The +/- tie-break against the perped tableau; N even, first column of
// length N/2.  sign is +1 or -1.
bool so_tiebreak_holds(const Tableau& t, int N, int sign);

// O(N)-standard and (first column shorter than N/2, or the '+' tie-break).
bool is_so_standard(const Tableau& t, int N);
bool is_so_standard_signed(const Tableau& t, int N, int sign);

// Row j constant equal to the j-th barred letter.
Tableau canonical_tableau(const Partition& shape, int N);

// All fillings with entries in the N-letter alphabet, row-reading-word
// lexicographic order.
std::vector<Tableau> enumerate_fillings(const Partition& shape, int N);
std::vector<Tableau> enumerate_gl_standard(const Partition& shape, int N);
// Empty when the two-column bound fails; dedup is inherent (fillings are
// generated once each).
std::vector<Tableau> enumerate_on_standard(const Partition& shape, int N);
std::vector<Tableau> enumerate_so_standard(const Partition& shape, int N);

// All partitions of d (optionally capped at max_rows parts), total order.
std::vector<Partition> partitions_of(int d, int max_rows = -1);

}  // namespace spinlm

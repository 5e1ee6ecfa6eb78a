#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "spinlm/tableaux.hpp"

using namespace spinlm;

namespace {

// Hook content formula for the count of column-strict row-weak fillings on N
// letters; independent oracle for the enumerators.
long schur_dim(const Partition& shape, int N) {
  Partition conj = conjugate(shape);
  long num = 1, den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) {
      int arm = shape[i] - j;
      int leg = conj[j - 1] - static_cast<int>(i) - 1;
      num *= N + j - static_cast<int>(i) - 1;
      den *= arm + leg + 1;
    }
  return num / den;
}

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }

}  // namespace

TEST_CASE("conjugate and partition orders") {
  CHECK(conjugate(Partition{2, 2, 1}) == Partition{3, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(partition_dominance_less({1, 1}, {2}));
  CHECK(!partition_dominance_less({2}, {1, 1}));
  CHECK(partition_dominance_less({2}, {2, 1}));  // smaller size first
  // (2,1,1) and (2,2) of size 4: prefix sums 2,3,4 vs 2,4,4
  CHECK(partition_dominance_less({2, 1, 1}, {2, 2}));
  // dominance implies the total refinement
  for (const Partition& a : partitions_of(5))
    for (const Partition& b : partitions_of(5))
      if (partition_dominance_less(a, b)) CHECK(partition_total_less(a, b));
}

TEST_CASE("tableau order compares right-most differing column first") {
  Tableau a = tab({{1, 2}, {3}});
  Tableau b = tab({{1, 4}, {3}});
  Tableau c = tab({{2, 2}, {3}});
  CHECK(tableau_order_prec(a, b));
  CHECK(!tableau_order_prec(b, a));
  CHECK(tableau_order_prec(c, b));  // column 2 decides before column 1
  CHECK(!tableau_order_prec(a, a));
}

TEST_CASE("GL-standard counts match the hook content formula") {
  for (int N : {2, 3, 4}) {
    for (int d = 1; d <= 4; ++d)
      for (const Partition& sh : partitions_of(d)) {
        auto all = enumerate_gl_standard(sh, N);
        CHECK(static_cast<long>(all.size()) ==
              (static_cast<int>(sh.size()) > N ? 0 : schur_dim(sh, N)));
        for (const Tableau& t : all) CHECK(is_gl_standard(t, N));
      }
  }
}

TEST_CASE("single boxes: three letters for N=3") {
  CHECK(enumerate_on_standard({1}, 3).size() == 3);
  CHECK(enumerate_gl_standard({1}, 3).size() == 3);
}

TEST_CASE("row pairs for N=2: the mixed row fails the hollow condition") {
  auto on = enumerate_on_standard({2}, 2);
  REQUIRE(on.size() == 2);
  CHECK(on[0] == tab({{1, 1}}));
  CHECK(on[1] == tab({{2, 2}}));
  CHECK(!is_on_standard(tab({{1, 2}}), 2));
}

TEST_CASE("frozen small counts against classical dimensions") {
  CHECK(enumerate_on_standard({2}, 3).size() == 5);
  CHECK(enumerate_on_standard({1, 1}, 3).size() == 3);
  CHECK(enumerate_on_standard({2}, 4).size() == 9);
  CHECK(enumerate_on_standard({1, 1}, 4).size() == 6);
  CHECK(enumerate_on_standard({1}, 4).size() == 4);
  // two-column bound: first two column lengths may not exceed N
  CHECK(enumerate_on_standard({1, 1, 1}, 2).empty());
  CHECK(enumerate_on_standard({2, 2, 2}, 4).empty());
}

TEST_CASE("second-column pivot condition distinguishes fillings") {
  // column 1 = (1',2',2), column 2 = (2'): standard
  CHECK(is_on_standard(tab({{1, 3}, {3}, {4}}), 4));
  // column 1 = (1',1,2), column 2 = (2'): the cell above the pivot is wrong
  CHECK(!is_on_standard(tab({{1, 3}, {2}, {4}}), 4));
}

TEST_CASE("canonical tableau is standard and self-perp") {
  for (int N : {2, 4, 6}) {
    int m = N / 2;
    for (int d = 1; d <= 3; ++d)
      for (const Partition& sh : partitions_of(d, m)) {
        Tableau c = canonical_tableau(sh, N);
        CHECK(is_on_standard(c, N));
        Partition conj = conjugate(sh);
        if (!conj.empty() && conj[0] == m) {
          CHECK(tableau_perp(c, N) == c);
          CHECK(is_so_standard(c, N));
        }
      }
  }
}

TEST_CASE("perp is an involution preserving standardness") {
  for (int N : {2, 4}) {
    int m = N / 2;
    for (int d = m; d <= m + 2; ++d)
      for (const Partition& sh : partitions_of(d)) {
        Partition conj = conjugate(sh);
        if (conj.empty() || conj[0] != m) continue;
        for (const Tableau& t : enumerate_on_standard(sh, N)) {
          Tableau tp = tableau_perp(t, N);
          CHECK(tableau_perp(tp, N) == t);
          CHECK(is_on_standard(tp, N));
        }
      }
  }
}

TEST_CASE("tie-break picks one tableau per non-fixed perp pair") {
  for (int N : {2, 4}) {
    int m = N / 2;
    for (int d = m; d <= m + 2; ++d)
      for (const Partition& sh : partitions_of(d)) {
        Partition conj = conjugate(sh);
        if (conj.empty() || conj[0] != m) continue;
        for (const Tableau& t : enumerate_on_standard(sh, N)) {
          Tableau tp = tableau_perp(t, N);
          if (tp != t) {
            CHECK((so_tiebreak_holds(t, N, 1) ^ so_tiebreak_holds(tp, N, 1)));
            CHECK(so_tiebreak_holds(t, N, 1) == so_tiebreak_holds(t, N, -1));
          } else {
            CHECK(so_tiebreak_holds(t, N, 1) != so_tiebreak_holds(t, N, -1));
          }
        }
      }
  }
}

TEST_CASE("signed standard counts split the self-perp tableaux") {
  // (1,1) at N=4: six standard columns, four self-perp, split 2/2
  auto on = enumerate_on_standard({1, 1}, 4);
  REQUIRE(on.size() == 6);
  int plus = 0, minus = 0, selfperp = 0;
  for (const Tableau& t : on) {
    if (tableau_perp(t, 4) == t) ++selfperp;
    if (is_so_standard_signed(t, 4, 1)) ++plus;
    if (is_so_standard_signed(t, 4, -1)) ++minus;
  }
  CHECK(selfperp == 4);
  CHECK(plus == 3);
  CHECK(minus == 3);
}

TEST_CASE("single column for N=2: only the barred letter is plus-standard") {
  CHECK(is_so_standard(tab({{1}}), 2));
  CHECK(!is_so_standard(tab({{2}}), 2));
  CHECK(is_so_standard_signed(tab({{2}}), 2, -1));
  CHECK(!is_so_standard_signed(tab({{1}}), 2, -1));
}

TEST_CASE("enumeration order is row-reading-word lexicographic") {
  auto all = enumerate_gl_standard({2, 1}, 3);
  for (std::size_t k = 1; k < all.size(); ++k) {
    std::vector<int> wa, wb;
    for (const auto& r : all[k - 1].rows) wa.insert(wa.end(), r.begin(), r.end());
    for (const auto& r : all[k].rows) wb.insert(wb.end(), r.begin(), r.end());
    CHECK(wa < wb);
  }
}

TEST_CASE("fillings enumeration covers the full cube") {
  CHECK(enumerate_fillings({2}, 3).size() == 9);
  CHECK(enumerate_fillings({1, 1}, 4).size() == 16);
}

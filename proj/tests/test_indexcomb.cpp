#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlm/indexcomb.hpp"

using namespace spinlm;

TEST_CASE("bar is an involution and fixes the odd tail letter") {
  for (int N : {2, 3, 4, 5, 6, 7}) {
    for (int a = 1; a <= N; ++a) CHECK(bar(bar(a, N), N) == a);
    if (N % 2 == 1) {
      CHECK(bar(N, N) == N);
      CHECK(index_label(N, N) == "0");
    }
  }
  CHECK(bar(1, 4) == 2);
  CHECK(bar(4, 4) == 3);
  CHECK(index_label(1, 4) == "1'");
  CHECK(index_label(4, 4) == "2");
}

TEST_CASE("subset enumeration is lexicographic and complete") {
  auto subs = subsets_of(4, 2);
  REQUIRE(subs.size() == 6);
  CHECK(subs.front() == Subset{1, 2});
  CHECK(subs.back() == Subset{3, 4});
  CHECK(subsets_of(5, 0).size() == 1);
  CHECK(complement(Subset{2, 3}, 4) == Subset{1, 4});
}

TEST_CASE("perp is an involution on n-subsets, exhaustively to 2n=12") {
  for (int n = 1; n <= 6; ++n)
    for (const Subset& S : subsets_of(2 * n, n))
      CHECK(perp_subset(perp_subset(S, n), n) == S);
}

TEST_CASE("inversion-count sign agrees with the closed formula") {
  for (int n = 1; n <= 6; ++n)
    for (const Subset& S : subsets_of(2 * n, n))
      CHECK(sign_sigma(S, n) == sign_sigma_formula(S, n));
}

TEST_CASE("sign_sigma is invariant under perp") {
  for (int n = 1; n <= 5; ++n)
    for (const Subset& S : subsets_of(2 * n, n))
      CHECK(sign_sigma(S, n) == sign_sigma(perp_subset(S, n), n));
}

TEST_CASE("sign_tau frozen values for N=2 and N=4") {
  CHECK(sign_tau(Subset{1}, 2) == 1);   // barred letter
  CHECK(sign_tau(Subset{2}, 2) == -1);  // unbarred letter

  CHECK(sign_tau(Subset{1, 3}, 4) == -1);  // {1',2'}
  CHECK(sign_tau(Subset{2, 4}, 4) == -1);  // {1,2}
  CHECK(sign_tau(Subset{1, 4}, 4) == 1);   // {1',2}
  CHECK(sign_tau(Subset{2, 3}, 4) == 1);   // {1,2'}
  CHECK(sign_tau(Subset{1, 2}, 4) == -1);  // {1',1}
  CHECK(sign_tau(Subset{3, 4}, 4) == -1);  // {2',2}
}

TEST_CASE("perp_barred is an involution") {
  for (int N : {2, 4, 6}) {
    for (const Subset& U : subsets_of(N, N / 2))
      CHECK(perp_barred(perp_barred(U, N), N) == U);
  }
}

TEST_CASE("d_of window counts") {
  CHECK(d_of(Subset{2, 3}, 2, 1) == 0);
  CHECK(d_of(perp_subset(Subset{2, 3}, 2), 2, 1) == 1);  // perp is {1,4}
  CHECK(d_of(Subset{1, 4, 5, 6}, 4, 2) == 0);
  CHECK(d_of(Subset{1, 4, 7, 8}, 4, 2) == 2);
}

TEST_CASE("d comparison matches the window reformulation, exhaustively") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Subset& S : subsets_of(2 * n, n)) {
        DComparison r = d_comparison_predicate(S, n, i);
        CHECK((r.cmp <= 0) == r.window_rule);
      }
}

TEST_CASE("form patterns: h = c^t j c") {
  for (int N = 2; N <= 6; ++N) {
    auto J = j_pattern(N), H = h_pattern(N), C = c_pattern(N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int v = 0;
        for (int r = 0; r < N; ++r)
          for (int s = 0; s < N; ++s) v += C[r][a] * J[r][s] * C[s][b];
        CHECK(v == H[a][b]);
      }
  }
}

TEST_CASE("j and h are symmetric involutions as 0/1 matrices") {
  for (int N = 2; N <= 7; ++N) {
    auto J = j_pattern(N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        CHECK(J[a][b] == J[b][a]);
        int v = 0;
        for (int r = 0; r < N; ++r) v += J[a][r] * J[r][b];
        CHECK(v == (a == b ? 1 : 0));
      }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlm/repthy.hpp"

using namespace spinlm;

namespace {
const QQ Q;

TensorVector<Rat> tv_of(std::initializer_list<std::pair<std::vector<int>, long>> ts) {
  TensorVector<Rat> tv;
  for (const auto& [w, c] : ts) tv.add(w, Rat(c));
  return tv;
}
}  // namespace

TEST_CASE("position tableau fills columns first") {
  YoungData yd = young_data(Partition{2, 1});
  REQUIRE(yd.l == 3);
  CHECK(yd.positions.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(yd.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(yd.cols == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(yd.row_order == 2);
  CHECK(yd.col_order == 2);

  YoungData w = young_data(Partition{1, 1, 1});
  CHECK(w.positions.rows == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(w.row_order == 1);
  CHECK(w.col_order == 6);
}

TEST_CASE("single column symmetrizer is the wedge embedding") {
  auto tv = young_apply(Q, Partition{1, 1}, {1, 3}, 4);
  CHECK(tv == tv_of({{{1, 3}, 1}, {{3, 1}, -1}}));
  auto zero = young_apply(Q, Partition{1, 1}, {2, 2}, 4);
  CHECK(zero.is_zero());
  auto tv3 = young_apply(Q, Partition{1, 1, 1}, {1, 2, 3}, 4);
  CHECK(tv3.terms.size() == 6);
  CHECK(tv3.terms.at({1, 2, 3}) == Rat(1));
  CHECK(tv3.terms.at({2, 1, 3}) == Rat(-1));
  CHECK(tv3.terms.at({3, 1, 2}) == Rat(1));
}

TEST_CASE("canonical words produce the scaled wedge product") {
  // hook shape: positions (1,3 / 2), canonical letters (1,3,1)
  auto tv = young_apply(Q, Partition{2, 1}, {1, 3, 1}, 4);
  CHECK(tv == tv_of({{{1, 3, 1}, 2}, {{3, 1, 1}, -2}}));

  // square shape: positions (1,3 / 2,4), canonical letters (1,3,1,3)
  auto sq = young_apply(Q, Partition{2, 2}, {1, 3, 1, 3}, 4);
  CHECK(sq == tv_of({{{1, 3, 1, 3}, 4},
                     {{3, 1, 1, 3}, -4},
                     {{1, 3, 3, 1}, -4},
                     {{3, 1, 3, 1}, 4}}));
}

TEST_CASE("module dimensions at small sizes") {
  CHECK(m_lambda_dim(Q, Partition{1, 1}, 2) == 1);
  CHECK(m_lambda_dim(Q, Partition{1}, 2) == 2);
  CHECK(m_lambda_dim(Q, Partition{2}, 3) == 6);
  CHECK(m_lambda_dim(Q, Partition{2}, 2) == 3);
  CHECK(m_lambda_dim(Q, Partition{1, 1}, 3) == 3);
}

TEST_CASE("column-strict restriction spans the same module") {
  for (int N : {2, 3}) {
    for (int d = 1; d <= 4; ++d) {
      for (const Partition& lam : partitions_of(d)) {
        if (static_cast<int>(lam.size()) > N) continue;  // all fillings collapse
        long fast = m_lambda_dim(Q, lam, N, true);
        long full = m_lambda_dim(Q, lam, N, false);
        CHECK(fast == full);
      }
    }
  }
}

TEST_CASE("contraction subspace generators") {
  auto u22 = contraction_subspace(Q, 2, 2);
  REQUIRE(u22.size() == 1);
  CHECK(u22[0] == tv_of({{{1, 2}, 1}, {{2, 1}, 1}}));
  CHECK(contraction_subspace(Q, 1, 2).empty());
  CHECK(contraction_subspace(Q, 0, 2).empty());
  auto u32 = contraction_subspace(Q, 3, 2);
  CHECK(u32.size() == 6);  // three position pairs, two letters for the rest
  auto u23 = contraction_subspace(Q, 2, 3);
  REQUIRE(u23.size() == 1);
  CHECK(u23[0] == tv_of({{{1, 2}, 1}, {{2, 1}, 1}, {{3, 3}, 1}}));
}

TEST_CASE("quotient dimensions match standard tableau counts at size 2") {
  CHECK(o_lambda_dim(Partition{1}, 2) == 2);
  CHECK(o_lambda_dim(Partition{1, 1}, 2) == 1);
  CHECK(o_lambda_dim(Partition{2}, 2) == 2);
  CHECK_THROWS_AS(o_lambda_dim(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("quotient dimensions match standard tableau counts up to three cells") {
  for (int N : {2, 3, 4}) {
    for (int d = 1; d <= 3; ++d) {
      for (const Partition& lam : partitions_of(d)) {
        Partition conj = conjugate(lam);
        int c1 = conj.empty() ? 0 : conj[0];
        int c2 = conj.size() > 1 ? conj[1] : 0;
        if (c1 + c2 > N) continue;
        long dim = o_lambda_dim(lam, N);
        long count = static_cast<long>(enumerate_on_standard(lam, N).size());
        CHECK(dim == count);
      }
    }
  }
}

TEST_CASE("representation table reports matches") {
  auto rows = repn_table(2, 2);
  REQUIRE(rows.size() == 3);  // (1), (2), (1,1)
  for (const auto& r : rows) {
    CHECK(r.match);
    CHECK(r.dim_O <= r.dim_M);
  }
}

TEST_CASE("length and characteristic guards") {
  CHECK_THROWS_AS(young_apply(Q, Partition{4, 3}, {1, 1, 1, 1, 1, 1, 1}, 4),
                  budget_error);
  GFp F3(3);
  CHECK_THROWS_AS(young_apply(F3, Partition{2, 2}, {1, 2, 1, 2}, 4),
                  std::domain_error);
  GFp F5(5);
  auto tv = young_apply(F5, Partition{2, 2}, {1, 3, 1, 3}, 4);
  CHECK(tv.terms.size() == 4);
  GFp F7(7);
  CHECK(m_lambda_dim(F7, Partition{2, 1}, 2) == m_lambda_dim(Q, Partition{2, 1}, 2));
}

TEST_CASE("word length must match the shape") {
  CHECK_THROWS_AS(young_apply(Q, Partition{2}, {1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(young_apply(Q, Partition{2}, {1, 5}, 2), std::invalid_argument);
}

TEST_CASE("evaluation map gateway") {
  CHECK(verify_evaluation_map(Q, 2, Partition{}));
  CHECK(verify_evaluation_map(Q, 2, Partition{1}));
  CHECK(verify_evaluation_map(Q, 2, Partition{3}));
  CHECK(verify_evaluation_map(Q, 4, Partition{2, 1}));
  CHECK(verify_evaluation_map(Q, 3, Partition{2}));
  CHECK_THROWS_AS(verify_evaluation_map(Q, 4, Partition{1, 1, 1}),
                  std::invalid_argument);
  GFp F5(5);
  CHECK(verify_evaluation_map(F5, 2, Partition{1}));
}

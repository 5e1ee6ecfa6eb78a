#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "spinlm/localmodel.hpp"

using namespace spinlm;

namespace {

const QQ Q;

DenseMat<Rat> zero_mat(int n) { return DenseMat<Rat>(n, n, Rat(0)); }

}  // namespace

TEST_CASE("chart configs are validated") {
  CHECK_THROWS_AS(validate_chart(ChartConfig{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_chart(ChartConfig{2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_chart(ChartConfig{3, 2}), std::invalid_argument);
  CHECK_NOTHROW(validate_chart(ChartConfig{2, 1}));
  CHECK_NOTHROW(validate_chart(ChartConfig{3, 0}));
  CHECK_NOTHROW(validate_chart(ChartConfig{4, 2}));
}

TEST_CASE("chart ring variable layout") {
  ChartRing cr(ChartConfig{3, 1});
  CHECK(cr.nvars_full == 19);
  CHECK(cr.nvars_small == 10);
  CHECK(cr.mvar(1, 1) == 0);
  CHECK(cr.mvar(1, 3) == 2);
  CHECK(cr.mpvar(1, 1) == 3);   // starts after the i*n block
  CHECK(cr.mpvar(2, 3) == 8);
  CHECK(cr.nvar_full(1, 1) == 9);
  CHECK(cr.nvar_full(3, 3) == 17);
  CHECK(cr.pi_full() == 18);
  CHECK(cr.nvar_small(1, 1) == 0);
  CHECK(cr.nvar_small(3, 3) == 8);
  CHECK(cr.pi_small() == 9);
  CHECK_THROWS_AS(cr.mvar(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cr.nvar_small(0, 1), std::invalid_argument);
}

TEST_CASE("dependent blocks are eliminated by the linear system") {
  for (auto [n, i] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}}) {
    auto r = derive_lm2(ChartConfig{n, i});
    CHECK(r.span_match);
    CHECK(r.solution_kills);
    CHECK(r.ok);
    REQUIRE(r.identities.size() == 9);
  }
}

TEST_CASE("elimination also works on the empty-chart side") {
  for (int n : {2, 4}) {
    auto r = derive_lm2(ChartConfig{n, 0});
    CHECK(r.ok);
  }
}

TEST_CASE("reduced system equals the residual system as ideals") {
  for (auto [n, i] :
       {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}, {2, 0}, {4, 0}}) {
    auto r = derive_lm3(ChartConfig{n, i});
    CHECK(r.forced_ok);
    CHECK(r.targets_from_derived);
    CHECK(r.derived_from_targets);
    CHECK(r.n7n8_determined);
    CHECK(r.ok);
  }
}

TEST_CASE("stack minors on pure unit rows are constants") {
  ChartConfig cfg{2, 1};
  ChartRing cr(cfg);
  // Rows 1 and 4 pick the two unit rows: a permutation determinant.
  auto p = a_s_minor(cfg, Subset{1, 4});
  CHECK(p == poly_const(Q, cr.nvars_small, -1));
  // Rows 2 and 3 pick the square block itself.
  auto det = poly_var(Q, cr.nvars_small, cr.nvar_small(1, 1)) *
                 poly_var(Q, cr.nvars_small, cr.nvar_small(2, 2)) -
             poly_var(Q, cr.nvars_small, cr.nvar_small(1, 2)) *
                 poly_var(Q, cr.nvars_small, cr.nvar_small(2, 1));
  CHECK(a_s_minor(cfg, Subset{2, 3}) == det);
}

TEST_CASE("stack minor rejects malformed row sets") {
  ChartConfig cfg{2, 1};
  CHECK_THROWS_AS(a_s_minor(cfg, Subset{1}), std::invalid_argument);
  CHECK_THROWS_AS(a_s_minor(cfg, Subset{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(a_s_minor(cfg, Subset{1, 5}), std::invalid_argument);
}

TEST_CASE("unbalanced minors realize every small-block minor") {
  for (auto [n, i, cases] :
       {std::tuple{2, 1, 1L}, {3, 1, 1L}, {4, 1, 1L}, {4, 2, 16L}}) {
    auto rep = verify_prop_wedge(ChartConfig{n, i});
    CHECK(rep.ok);
    CHECK(rep.cases == cases);
  }
  auto vac = verify_prop_wedge(ChartConfig{3, 0});
  CHECK(vac.ok);
  CHECK(vac.cases == 0);
}

TEST_CASE("balanced minors match signed bideterminants bijectively") {
  for (auto [n, i, cases] :
       {std::tuple{2, 1, 4L}, {3, 1, 4L}, {4, 1, 4L}, {4, 2, 36L}}) {
    auto rep = verify_prop_sign(ChartConfig{n, i});
    CHECK(rep.ok);
    CHECK(rep.bijective);
    CHECK(rep.cases == cases);
  }
  auto vac = verify_prop_sign(ChartConfig{2, 0});
  CHECK(vac.ok);
  CHECK(vac.cases == 1);  // the forced row set, with the empty pair
}

TEST_CASE("midpoint parity agrees with the triangular number") {
  // The balanced-case sign chain needs (-1)^{ceil(n/2)} = (-1)^{n(n+1)/2}.
  for (int n = 1; n <= 12; ++n)
    CHECK(((n + 1) / 2) % 2 == (n * (n + 1) / 2) % 2);
}

TEST_CASE("chart equations present the matrix-defined quotient") {
  for (auto v : {Variant::naive, Variant::plus, Variant::minus}) {
    auto p = build_chart_presentation(ChartConfig{2, 1}, v);
    CHECK(p.quadratics_match);
    CHECK(p.minors_match);
    CHECK(p.spin_match);
    CHECK(p.ok);
    CHECK(p.free_count == 0);
    CHECK(p.spec.N == 2);
    CHECK(p.spec.form == MatrixForm::H);
  }
  auto p31 = build_chart_presentation(ChartConfig{3, 1}, Variant::naive);
  CHECK(p31.ok);
  CHECK(p31.free_count == 2);
  auto p42 = build_chart_presentation(ChartConfig{4, 2}, Variant::plus);
  CHECK(p42.ok);
  CHECK(p42.free_count == 0);
  CHECK(p42.spec.N == 4);
  CHECK_THROWS_AS(build_chart_presentation(ChartConfig{2, 0}, Variant::naive),
                  std::invalid_argument);
}

TEST_CASE("smallest chart cuts out the two-line ring") {
  // At n = 2, i = 1 the chart equations are exactly the size-2 relations in
  // the second pairing form, so the coordinate ring has dimensions 1,2,2,...
  auto p = build_chart_presentation(ChartConfig{2, 1}, Variant::plus);
  GradedRing<QQ> ring(Q, p.spec);
  CHECK(ring.quotient_dim(0) == 1);
  CHECK(ring.quotient_dim(1) == 2);
  CHECK(ring.quotient_dim(2) == 2);
  auto od = poly_var(Q, 4, ring.X().var(1, 1)) *
            poly_var(Q, 4, ring.X().var(2, 2));
  CHECK(ring.membership(od));  // the diagonal product collapses

  auto pn = build_chart_presentation(ChartConfig{2, 1}, Variant::naive);
  GradedRing<QQ> naive(Q, pn.spec);
  CHECK(naive.quotient_dim(1) == 4);
  CHECK(naive.quotient_dim(2) == 4);
}

TEST_CASE("wedge entries at the smallest chart, frozen") {
  auto find = [](const WedgeBasisReport& w, const Subset& S) {
    for (const auto& e : w.entries)
      if (e.S == S) return e;
    FAIL("row set not listed");
    return w.entries.front();
  };
  auto wp = wedge_lattice_basis(ChartConfig{2, 1}, +1);
  auto wm = wedge_lattice_basis(ChartConfig{2, 1}, -1);

  // {1,2} is its own mirror with positive sign: kept by '+', dropped by '-'.
  auto e12 = find(wp, Subset{1, 2});
  CHECK(e12.self_perp);
  CHECK(e12.sigma_sign == 1);
  CHECK(e12.in_B0);
  CHECK_FALSE(find(wm, Subset{1, 2}).in_B0);

  // {1,4} is one deep; its mirror {2,3} has depth zero.
  auto e14 = find(wp, Subset{1, 4});
  CHECK(e14.Sperp == Subset{2, 3});
  CHECK(e14.d_S == 1);
  CHECK(e14.d_Sperp == 0);
  CHECK(e14.pi_power == 1);
  CHECK(e14.g_S_power == 0);
  CHECK(e14.g_Sperp_power == 1);
}

TEST_CASE("wedge basis bookkeeping splits the row sets in half") {
  for (auto [n, i] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
    for (int sign : {+1, -1}) {
      auto w = wedge_lattice_basis(ChartConfig{n, i}, sign);
      CHECK(w.ok);
      CHECK(w.pairing_ok);
      CHECK(w.involution_ok);
      CHECK(w.relation_ok);
      long total = static_cast<long>(w.entries.size());
      CHECK(w.b0_size * 2 == total);
      for (const auto& e : w.entries) {
        CHECK(e.pi_power == std::max(e.d_S, e.d_Sperp));
        CHECK((e.g_S_power == 0 || e.g_Sperp_power == 0));
      }
    }
  }
  CHECK(wedge_lattice_basis(ChartConfig{2, 1}, +1).entries.size() == 6);
  CHECK(wedge_lattice_basis(ChartConfig{4, 2}, -1).entries.size() == 70);
  CHECK_THROWS_AS(wedge_lattice_basis(ChartConfig{2, 1}, 0),
                  std::invalid_argument);
}

TEST_CASE("degenerate chart has only depth-zero row sets") {
  auto w = wedge_lattice_basis(ChartConfig{2, 0}, +1);
  CHECK(w.ok);
  for (const auto& e : w.entries) {
    CHECK(e.d_S == 0);
    CHECK(e.d_Sperp == 0);
    CHECK(e.pi_power == 0);
  }
}

TEST_CASE("rank strata of special fiber points") {
  ChartConfig c21{2, 1};
  CHECK(rank_stratum_of_point(c21, zero_mat(2)) == 0);

  auto e11 = zero_mat(2);
  e11.at(0, 0) = Rat(1);
  CHECK(rank_stratum_of_point(c21, e11) == 1);

  auto id2 = zero_mat(2);
  id2.at(0, 0) = Rat(1);
  id2.at(1, 1) = Rat(1);
  CHECK_THROWS_AS(rank_stratum_of_point(c21, id2), std::invalid_argument);

  ChartConfig c42{4, 2};
  CHECK(rank_stratum_of_point(c42, zero_mat(4)) == 0);
  // Rows/columns 1,2 are isotropic and mutually orthogonal for the
  // antidiagonal form, so this rank-2 point lies on the fiber.
  auto r2 = zero_mat(4);
  r2.at(0, 0) = Rat(1);
  r2.at(1, 1) = Rat(1);
  CHECK(rank_stratum_of_point(c42, r2) == 2);

  CHECK_THROWS_AS(rank_stratum_of_point(c21, zero_mat(3)),
                  std::invalid_argument);
}

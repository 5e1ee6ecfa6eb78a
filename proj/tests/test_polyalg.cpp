#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlm/identities.hpp"
#include "spinlm/poly.hpp"
#include "spinlm/random.hpp"

using namespace spinlm;

namespace {
const QQ Q;
const GFp F7(7);
}  // namespace

TEST_CASE("grevlex ranks degree first, then reverse lex") {
  MonoGrevlexGreater gt;
  Mono x2{{2, 0}}, xy{{1, 1}}, y2{{0, 2}}, x{{1, 0}}, y{{0, 1}};
  CHECK(gt(x2, xy));
  CHECK(gt(xy, y2));
  CHECK(gt(x2, x));
  CHECK(gt(x, y));
  CHECK(!gt(x, x));
}

TEST_CASE("polynomial ring basics") {
  auto x = poly_var(Q, 2, 0), y = poly_var(Q, 2, 1);
  auto p = (x + y) * (x - y);
  auto q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.degree() == 2);
  CHECK(is_homogeneous(p));
  CHECK(!is_homogeneous(p + x));
  CHECK(scale(p, Rat(0)).is_zero());
  auto val = evaluate(Q, p, {ratio(1, 2), Rat(3)});
  CHECK(val == ratio(1, 4) - Rat(9));
}

TEST_CASE("modular coefficients collapse correctly") {
  auto x = poly_var(F7, 1, 0);
  auto p = x + x + x + x + x + x + x;  // 7x = 0
  CHECK(p.is_zero());
}

TEST_CASE("minors of the generic matrix") {
  VarMatrix X(2, 2);
  auto det = minor_poly(Q, X, {1, 2}, {1, 2});
  auto x11 = poly_var(Q, 4, X.var(1, 1)), x12 = poly_var(Q, 4, X.var(1, 2));
  auto x21 = poly_var(Q, 4, X.var(2, 1)), x22 = poly_var(Q, 4, X.var(2, 2));
  CHECK(det == x11 * x22 - x12 * x21);
  CHECK(minor_poly(Q, X, {1, 1}, {1, 2}).is_zero());
  CHECK(minor_poly(Q, X, {}, {}) == poly_const(Q, 4, 1));
  CHECK(minor_poly(Q, X, {2, 1}, {1, 2}) == -det);
  CHECK(minor_poly(Q, X, {1}, {2}) == x12);
}

TEST_CASE("bideterminant is the product of column minors") {
  VarMatrix X(2, 2);
  Bitableau bt{Tableau{{{1, 1}, {2}}}, Tableau{{{1, 2}, {2}}}};
  auto expect = minor_poly(Q, X, {1, 2}, {1, 2}) * minor_poly(Q, X, {1}, {2});
  CHECK(bideterminant(Q, bt, X) == expect);
  Bitableau shapes_differ{Tableau{{{1}}}, Tableau{{{1, 2}}}};
  CHECK_THROWS_AS(bideterminant(Q, shapes_differ, X), std::invalid_argument);
}

TEST_CASE("det_poly agrees with minor expansion on generic matrices") {
  VarMatrix X(3, 3);
  std::vector<std::vector<Poly<Rat>>> m(3, std::vector<Poly<Rat>>(3, poly_zero(Q, 9)));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) m[a - 1][b - 1] = poly_var(Q, 9, X.var(a, b));
  CHECK(det_poly(Q, m) == minor_poly(Q, X, {1, 2, 3}, {1, 2, 3}));
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng;
  VarMatrix X(2, 2);
  auto C = random_invertible(Q, rng, 2);
  auto p = minor_poly(Q, X, {1, 2}, {1, 2});
  auto q = minor_poly(Q, X, {1}, {1}) + minor_poly(Q, X, {2}, {2});
  auto cp = conjugate_variables(Q, p, X, C);
  auto cq = conjugate_variables(Q, q, X, C);
  CHECK(conjugate_variables(Q, p * q, X, C) == cp * cq);
  CHECK(conjugate_variables(Q, p + q, X, C) == cp + cq);
  auto I = mat_identity(Q, 2);
  CHECK(conjugate_variables(Q, p, X, I) == p);
}

TEST_CASE("substituting a scalar point commutes with evaluation") {
  Rng rng(11);
  VarMatrix X(2, 2);
  auto C = random_matrix(Q, rng, 2, 2);
  auto p = minor_poly(Q, X, {1, 2}, {1, 2}) + minor_poly(Q, X, {1}, {2});
  std::vector<Rat> pt;
  for (int v = 0; v < 4; ++v) pt.push_back(random_scalar(Q, rng));
  auto sub = conjugate_variables(Q, p, X, C);
  // evaluate C^t P C at the point matrix
  DenseMat<Rat> P(2, 2, Rat(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) P.at(a, b) = pt[X.var(a + 1, b + 1)];
  auto conj = mat_mul(mat_transpose(C), mat_mul(P, C));
  std::vector<Rat> cpt(4, Rat(0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cpt[X.var(a + 1, b + 1)] = conj.at(a, b);
  CHECK(evaluate(Q, sub, pt) == evaluate(Q, p, cpt));
}

TEST_CASE("dense matrix determinant, rank, inverse") {
  auto m = mat_from_pattern(Q, {{2, 1}, {1, 1}});
  CHECK(mat_det(Q, m) == Rat(1));
  CHECK(mat_rank(Q, m) == 2);
  auto inv = mat_inverse(Q, m);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(m, *inv) == mat_identity(Q, 2));

  auto sing = mat_from_pattern(Q, {{1, 2}, {2, 4}});
  CHECK(is_zero(mat_det(Q, sing)));
  CHECK(mat_rank(Q, sing) == 1);
  CHECK(!mat_inverse(Q, sing).has_value());

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    auto g = random_invertible(F7, rng, 4);
    auto gi = mat_inverse(F7, g);
    REQUIRE(gi.has_value());
    CHECK(mat_mul(g, *gi) == mat_identity(F7, 4));
    CHECK(mat_det(F7, g) * mat_det(F7, *gi) == F7(1));
  }
}

TEST_CASE("laplace expansion, identity and random matrices") {
  for (int d = 1; d <= 5; ++d) {
    auto I = mat_identity(Q, d);
    for (const Subset& F : subsets_of(d, std::min(2, d)))
      CHECK(check_laplace(Q, I, F));
  }
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(rng.uniform(0, 3));
    auto A = random_matrix(Q, rng, d, d);
    int p = 1 + static_cast<int>(rng.uniform(0, d - 1));
    auto subs = subsets_of(d, p);
    CHECK(check_laplace(Q, A, subs[rng.uniform(0, subs.size() - 1)]));
  }
}

TEST_CASE("minor product formula on random rectangular pairs") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    int d = 2 + static_cast<int>(rng.uniform(0, 2));
    int e = d + static_cast<int>(rng.uniform(0, 2));
    auto A = random_matrix(F7, rng, d, e);
    auto B = random_matrix(F7, rng, e, d);
    int p = 1 + static_cast<int>(rng.uniform(0, d - 1));
    auto subs = subsets_of(d, p);
    auto S = subs[rng.uniform(0, subs.size() - 1)];
    auto Sp = subs[rng.uniform(0, subs.size() - 1)];
    CHECK(check_binet_cauchy(F7, A, B, S, Sp));
  }
}

TEST_CASE("minors of the inverse, both sign forms") {
  Rng rng(17);
  for (int t = 0; t < 15; ++t) {
    int d = 2 * (1 + static_cast<int>(rng.uniform(0, 2)));
    auto A = random_invertible(Q, rng, d);
    auto subs = subsets_of(d, d / 2);
    auto S = subs[rng.uniform(0, subs.size() - 1)];
    auto Sp = subs[rng.uniform(0, subs.size() - 1)];
    auto rep = check_jacobi(Q, A, S, Sp);
    CHECK(rep.plain);
    CHECK(rep.sign_applicable);
    CHECK(rep.sign_form);
  }
  auto sing = mat_from_pattern(Q, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(check_jacobi(Q, sing, {1}, {1}), std::domain_error);
  auto I4 = mat_identity(Q, 4);
  CHECK(check_jacobi(Q, I4, {1, 3}, {1, 3}).ok());
  CHECK(check_jacobi(Q, I4, {1, 2}, {3, 4}).ok());
}

TEST_CASE("one-sided sandwich images pin the other index") {
  QQ Q;
  VarMatrix X(2, 3);
  DenseMat<Rat> L = mat_zero(Q, 2, 2);
  L.at(0, 0) = Rat(2);
  L.at(0, 1) = Rat(3);
  L.at(1, 0) = Rat(5);
  L.at(1, 1) = Rat(7);
  auto li = sandwich_images(Q, X, &L, nullptr);
  // (L X)_{12} = 2 x_{12} + 3 x_{22}
  auto expect = scale(poly_var(Q, X.nvars(), X.var(1, 2)), Rat(2)) +
                scale(poly_var(Q, X.nvars(), X.var(2, 2)), Rat(3));
  CHECK(li[X.var(1, 2)] == expect);

  DenseMat<Rat> R = mat_zero(Q, 3, 3);
  for (int i = 0; i < 3; ++i) R.at(i, i) = Rat(i + 1);
  R.at(0, 2) = Rat(4);
  auto ri = sandwich_images(Q, X, nullptr, &R);
  // (X R)_{23} = 4 x_{21} + 3 x_{23}
  auto expect2 = scale(poly_var(Q, X.nvars(), X.var(2, 1)), Rat(4)) +
                 scale(poly_var(Q, X.nvars(), X.var(2, 3)), Rat(3));
  CHECK(ri[X.var(2, 3)] == expect2);
}

#include "spinlm/localmodel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "spinlm/echelon.hpp"

namespace spinlm {
namespace {

const QQ kQ{};
using P = Poly<Rat>;

// Dense polynomial matrix with explicit dimensions, so empty blocks stay
// well-typed when i = 0 or n = 2i.
struct PM {
  int nr = 0, nc = 0, nv = 0;
  std::vector<P> e;

  PM() = default;
  PM(int r, int c, int v)
      : nr(r), nc(c), nv(v), e(static_cast<size_t>(r) * c, poly_zero(kQ, v)) {}
  P& at(int r, int c) { return e[static_cast<size_t>(r) * nc + c]; }
  const P& at(int r, int c) const {
    return e[static_cast<size_t>(r) * nc + c];
  }
};

PM pm_mul(const PM& a, const PM& b) {
  if (a.nc != b.nr || a.nv != b.nv) throw std::logic_error("pm_mul shape");
  PM r(a.nr, b.nc, a.nv);
  for (int x = 0; x < a.nr; ++x)
    for (int y = 0; y < b.nc; ++y) {
      P s = poly_zero(kQ, a.nv);
      for (int k = 0; k < a.nc; ++k) s = s + a.at(x, k) * b.at(k, y);
      r.at(x, y) = std::move(s);
    }
  return r;
}

PM pm_add(const PM& a, const PM& b) {
  if (a.nr != b.nr || a.nc != b.nc || a.nv != b.nv)
    throw std::logic_error("pm_add shape");
  PM r(a.nr, a.nc, a.nv);
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

PM pm_sub(const PM& a, const PM& b) {
  if (a.nr != b.nr || a.nc != b.nc || a.nv != b.nv)
    throw std::logic_error("pm_sub shape");
  PM r(a.nr, a.nc, a.nv);
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

PM pm_neg(const PM& a) {
  PM r(a.nr, a.nc, a.nv);
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = -a.e[k];
  return r;
}

PM pm_transpose(const PM& a) {
  PM r(a.nc, a.nr, a.nv);
  for (int x = 0; x < a.nr; ++x)
    for (int y = 0; y < a.nc; ++y) r.at(y, x) = a.at(x, y);
  return r;
}

PM pm_scale_poly(const PM& a, const P& s) {
  PM r(a.nr, a.nc, a.nv);
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] * s;
  return r;
}

PM pm_identity(int n, int nv) {
  PM r(n, n, nv);
  for (int k = 0; k < n; ++k) r.at(k, k) = poly_const(kQ, nv, 1);
  return r;
}

PM pm_from_pattern(const std::vector<std::vector<int>>& pat, int nv) {
  int nr = static_cast<int>(pat.size());
  int nc = nr == 0 ? 0 : static_cast<int>(pat[0].size());
  PM r(nr, nc, nv);
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nc; ++y)
      if (pat[x][y] != 0) r.at(x, y) = poly_const(kQ, nv, pat[x][y]);
  return r;
}

PM pm_hconcat(const std::vector<PM>& parts) {
  int nr = -1, nc = 0, nv = 0;
  for (const PM& p : parts) {
    if (nr < 0) nr = p.nr, nv = p.nv;
    if (p.nr != nr || p.nv != nv) throw std::logic_error("pm_hconcat shape");
    nc += p.nc;
  }
  PM r(std::max(nr, 0), nc, nv);
  int off = 0;
  for (const PM& p : parts) {
    for (int x = 0; x < p.nr; ++x)
      for (int y = 0; y < p.nc; ++y) r.at(x, off + y) = p.at(x, y);
    off += p.nc;
  }
  return r;
}

PM pm_vconcat(const std::vector<PM>& parts) {
  int nr = 0, nc = -1, nv = 0;
  for (const PM& p : parts) {
    if (nc < 0) nc = p.nc, nv = p.nv;
    if (p.nc != nc || p.nv != nv) throw std::logic_error("pm_vconcat shape");
    nr += p.nr;
  }
  PM r(nr, std::max(nc, 0), nv);
  int off = 0;
  for (const PM& p : parts) {
    for (int x = 0; x < p.nr; ++x)
      for (int y = 0; y < p.nc; ++y) r.at(off + x, y) = p.at(x, y);
    off += p.nr;
  }
  return r;
}

PM pm_block(const PM& a, int r0, int r1, int c0, int c1) {
  PM r(r1 - r0, c1 - c0, a.nv);
  for (int x = r0; x < r1; ++x)
    for (int y = c0; y < c1; ++y) r.at(x - r0, y - c0) = a.at(x, y);
  return r;
}

bool pm_is_zero(const PM& a) {
  for (const P& p : a.e)
    if (!p.is_zero()) return false;
  return true;
}

PolyMat pm_export(const PM& a) {
  PolyMat out(a.nr, std::vector<P>(a.nc, poly_zero(kQ, a.nv)));
  for (int x = 0; x < a.nr; ++x)
    for (int y = 0; y < a.nc; ++y) out[x][y] = a.at(x, y);
  return out;
}

// The nine dependent blocks in terms of the free square block.  Block k of
// the eliminated pair equals minus the sandwich of the transposed k-th block
// of N between the two pairing forms of matching sizes.
struct Blocks {
  PM N1, N2, N3, N4, N5, N6, N7, N8, N9;
  PM Hi, Hn2i, H2i;
};

Blocks split_blocks(const PM& N, int n, int i) {
  Blocks b;
  int t = n - 2 * i;
  b.N1 = pm_block(N, 0, i, 0, i);
  b.N2 = pm_block(N, 0, i, i, 2 * i);
  b.N3 = pm_block(N, 0, i, 2 * i, n);
  b.N4 = pm_block(N, i, 2 * i, 0, i);
  b.N5 = pm_block(N, i, 2 * i, i, 2 * i);
  b.N6 = pm_block(N, i, 2 * i, 2 * i, n);
  b.N7 = pm_block(N, 2 * i, n, 0, i);
  b.N8 = pm_block(N, 2 * i, n, i, 2 * i);
  b.N9 = pm_block(N, 2 * i, n, 2 * i, n);
  b.Hi = pm_from_pattern(h_pattern(i), N.nv);
  b.Hn2i = pm_from_pattern(h_pattern(t), N.nv);
  b.H2i = pm_from_pattern(h_pattern(2 * i), N.nv);
  return b;
}

PM solved_block(const PM& left, const PM& Nk, const PM& right) {
  return pm_neg(pm_mul(left, pm_mul(pm_transpose(Nk), right)));
}

// Eliminated blocks assembled back into the two rectangular matrices.
struct Solved {
  PM M;    // i x n
  PM Mp;   // (n-i) x n
  PM M1, M2, M3, M4, M5, M6, M7, M8, M9;
};

Solved solve_blocks(const Blocks& b) {
  Solved s;
  s.M1 = solved_block(b.Hi, b.N1, b.Hi);
  s.M2 = solved_block(b.Hi, b.N2, b.Hi);
  s.M3 = solved_block(b.Hn2i, b.N3, b.Hi);
  s.M4 = solved_block(b.Hi, b.N4, b.Hi);
  s.M5 = solved_block(b.Hi, b.N5, b.Hi);
  s.M6 = solved_block(b.Hn2i, b.N6, b.Hi);
  s.M7 = solved_block(b.Hi, b.N7, b.Hn2i);
  s.M8 = solved_block(b.Hi, b.N8, b.Hn2i);
  s.M9 = solved_block(b.Hn2i, b.N9, b.Hn2i);
  s.M = pm_hconcat({s.M7, s.M4, s.M1});
  s.Mp = pm_vconcat({pm_hconcat({s.M9, s.M6, s.M3}),
                     pm_hconcat({s.M8, s.M5, s.M2})});
  return s;
}

// Second chart matrix: a unit band aimed past the diagonal, the square
// block, then a unit band at the front columns.
PM chart_minus(const PM& N, int n, int i) {
  PM r(2 * n, n, N.nv);
  for (int x = 0; x < n - i; ++x) r.at(x, i + x) = poly_const(kQ, N.nv, 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.at(n - i + x, y) = N.at(x, y);
  for (int x = 0; x < i; ++x)
    r.at(2 * n - i + x, x) = poly_const(kQ, N.nv, 1);
  return r;
}

std::vector<Rat> linear_vector(const P& p, int nv) {
  std::vector<Rat> v(nv, Rat(0));
  for (const auto& [m, c] : p.terms) {
    if (m.degree() != 1) throw std::logic_error("expected a linear form");
    for (int k = 0; k < nv; ++k)
      if (m.e[k] == 1) v[k] = c;
  }
  return v;
}

std::vector<P> pm_entries(const PM& a) {
  std::vector<P> out;
  for (const P& p : a.e)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

int subset_sum(const Subset& S) {
  return std::accumulate(S.begin(), S.end(), 0);
}

Subset sorted_union(std::initializer_list<Subset> parts) {
  Subset out;
  for (const Subset& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool strictly_increasing(const Subset& S) {
  for (size_t k = 1; k < S.size(); ++k)
    if (S[k - 1] >= S[k]) return false;
  return true;
}

// Minor of the square block on the given row and column subsets, in the
// small chart ring.
P small_minor(const ChartRing& R, const Subset& rows, const Subset& cols) {
  int d = static_cast<int>(rows.size());
  if (d != static_cast<int>(cols.size()))
    throw std::invalid_argument("minor needs equal row/col counts");
  std::vector<std::vector<P>> m(d, std::vector<P>(d, poly_zero(kQ, R.nvars_small)));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      m[x][y] = poly_var(kQ, R.nvars_small, R.nvar_small(rows[x], cols[y]));
  if (d == 0) return poly_const(kQ, R.nvars_small, 1);
  return det_poly(kQ, m);
}

// Data of a balanced row subset: the two bideterminant index sets and the
// sign exponent.
struct BalancedData {
  Subset U, Uprime;
  int r1 = 0, r3 = 0;
  int sum13 = 0;
  int eps = 0;  // parity only
  bool stray_free = true;
};

BalancedData balanced_data(const Subset& S, int n, int i) {
  BalancedData d;
  Subset S1, S2, S3;
  for (int s : S) {
    if (s <= i) S1.push_back(s);
    else if (s > n - i && s <= n + i) S2.push_back(s);
    else if (s > 2 * n - i) S3.push_back(s);
    else if (s > n + i && s <= 2 * n - i) d.stray_free = false;
  }
  d.r1 = static_cast<int>(S1.size());
  d.r3 = static_cast<int>(S3.size());
  for (int s : S2) d.U.push_back(s - (n - i));
  std::set<int> drop1, drop3;
  for (int s : S3) drop1.insert(s - (2 * n - i));
  for (int s : S1) drop3.insert(s + i);
  Subset T1, T3;
  for (int a = 1; a <= i; ++a)
    if (!drop1.count(a)) T1.push_back(a);
  for (int a = i + 1; a <= 2 * i; ++a)
    if (!drop3.count(a)) T3.push_back(a);
  d.Uprime = sorted_union({T1, T3});
  d.sum13 = subset_sum(S1) + subset_sum(S3);
  long e = static_cast<long>(n - i) * d.r1 + static_cast<long>(d.r1) * (d.r1 + 1) / 2 +
           static_cast<long>(d.r3) * (d.r3 + 1) / 2 + d.sum13;
  d.eps = static_cast<int>(((e % 2) + 2) % 2);
  return d;
}

bool contains_range(const Subset& S, int lo, int hi) {
  if (lo > hi) return true;
  std::set<int> s(S.begin(), S.end());
  for (int a = lo; a <= hi; ++a)
    if (!s.count(a)) return false;
  return true;
}

int count_in(const Subset& S, int lo, int hi) {
  int c = 0;
  for (int s : S)
    if (s >= lo && s <= hi) ++c;
  return c;
}

}  // namespace

void validate_chart(const ChartConfig& cfg) {
  if (cfg.n < 1 || cfg.i < 0 || 2 * cfg.i > cfg.n)
    throw std::invalid_argument("chart needs 1 <= n and 0 <= 2i <= n");
}

ChartRing::ChartRing(const ChartConfig& cfg) : n(cfg.n), i(cfg.i) {
  validate_chart(cfg);
  nvars_full = 2 * n * n + 1;
  nvars_small = n * n + 1;
}

int ChartRing::mvar(int r, int c) const {
  if (r < 1 || r > i || c < 1 || c > n)
    throw std::invalid_argument("first dependent block entry out of range");
  return (r - 1) * n + (c - 1);
}

int ChartRing::mpvar(int r, int c) const {
  if (r < 1 || r > n - i || c < 1 || c > n)
    throw std::invalid_argument("second dependent block entry out of range");
  return i * n + (r - 1) * n + (c - 1);
}

int ChartRing::nvar_full(int a, int b) const {
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("square block entry out of range");
  return n * n + (a - 1) * n + (b - 1);
}

int ChartRing::pi_full() const { return 2 * n * n; }

int ChartRing::nvar_small(int a, int b) const {
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("square block entry out of range");
  return (a - 1) * n + (b - 1);
}

int ChartRing::pi_small() const { return n * n; }

LM2Result derive_lm2(const ChartConfig& cfg) {
  validate_chart(cfg);
  LM2Result res;
  res.cfg = cfg;
  ChartRing R(cfg);
  int n = cfg.n, i = cfg.i, nv = R.nvars_full;

  PM M(i, n, nv), Mp(n - i, n, nv), N(n, n, nv);
  for (int r = 1; r <= i; ++r)
    for (int c = 1; c <= n; ++c)
      M.at(r - 1, c - 1) = poly_var(kQ, nv, R.mvar(r, c));
  for (int r = 1; r <= n - i; ++r)
    for (int c = 1; c <= n; ++c)
      Mp.at(r - 1, c - 1) = poly_var(kQ, nv, R.mpvar(r, c));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      N.at(a - 1, b - 1) = poly_var(kQ, nv, R.nvar_full(a, b));

  PM Cp = pm_vconcat({M, pm_identity(n, nv), Mp});
  PM Cm = chart_minus(N, n, i);
  PM H2n = pm_from_pattern(h_pattern(2 * n), nv);
  PM G = pm_mul(pm_mul(pm_transpose(Cp), H2n), Cm);

  Blocks b = split_blocks(N, n, i);
  int t = n - 2 * i;
  PM M7 = pm_block(M, 0, i, 0, t), M4 = pm_block(M, 0, i, t, n - i),
     M1 = pm_block(M, 0, i, n - i, n);
  PM M9 = pm_block(Mp, 0, t, 0, t), M6 = pm_block(Mp, 0, t, t, n - i),
     M3 = pm_block(Mp, 0, t, n - i, n);
  PM M8 = pm_block(Mp, t, n - i, 0, t), M5 = pm_block(Mp, t, n - i, t, n - i),
     M2 = pm_block(Mp, t, n - i, n - i, n);

  auto TH = [&](const PM& Mk, const PM& H) { return pm_mul(pm_transpose(Mk), H); };
  PM P11 = pm_add(TH(M7, b.Hi), pm_mul(b.Hn2i, b.N7));
  PM P12 = pm_add(TH(M8, b.Hi), pm_mul(b.Hn2i, b.N8));
  PM P13 = pm_add(pm_mul(b.Hn2i, b.N9), TH(M9, b.Hn2i));
  PM P21 = pm_add(TH(M4, b.Hi), pm_mul(b.Hi, b.N4));
  PM P22 = pm_add(TH(M5, b.Hi), pm_mul(b.Hi, b.N5));
  PM P23 = pm_add(pm_mul(b.Hi, b.N6), TH(M6, b.Hn2i));
  PM P31 = pm_add(TH(M1, b.Hi), pm_mul(b.Hi, b.N1));
  PM P32 = pm_add(TH(M2, b.Hi), pm_mul(b.Hi, b.N2));
  PM P33 = pm_add(pm_mul(b.Hi, b.N3), TH(M3, b.Hn2i));
  PM Pfull = pm_vconcat({pm_hconcat({P11, P12, P13}),
                         pm_hconcat({P21, P22, P23}),
                         pm_hconcat({P31, P32, P33})});

  IntEchelon eg(nv), ep(nv), eu(nv);
  for (const P& p : pm_entries(G)) {
    auto v = linear_vector(p, nv);
    eg.insert(v);
    eu.insert(v);
  }
  for (const P& p : pm_entries(Pfull)) {
    auto v = linear_vector(p, nv);
    ep.insert(v);
    eu.insert(v);
  }
  res.span_match = eg.rank() == ep.rank() && ep.rank() == eu.rank();

  std::array<std::pair<const PM*, const PM*>, 9> blocks_of = {{
      {&M1, &b.N1}, {&M2, &b.N2}, {&M3, &b.N3}, {&M4, &b.N4}, {&M5, &b.N5},
      {&M6, &b.N6}, {&M7, &b.N7}, {&M8, &b.N8}, {&M9, &b.N9}}};
  std::array<std::pair<const PM*, const PM*>, 9> forms_of = {{
      {&b.Hi, &b.Hi}, {&b.Hi, &b.Hi}, {&b.Hn2i, &b.Hi}, {&b.Hi, &b.Hi},
      {&b.Hi, &b.Hi}, {&b.Hn2i, &b.Hi}, {&b.Hi, &b.Hn2i}, {&b.Hi, &b.Hn2i},
      {&b.Hn2i, &b.Hn2i}}};
  for (int k = 0; k < 9; ++k) {
    const PM& Mk = *blocks_of[k].first;
    const PM& Nk = *blocks_of[k].second;
    PM id = pm_sub(Mk, solved_block(*forms_of[k].first, Nk, *forms_of[k].second));
    res.identities.push_back(pm_export(id));
  }

  Solved sol = solve_blocks(b);
  std::vector<P> images(nv);
  for (int v = 0; v < nv; ++v) images[v] = poly_var(kQ, nv, v);
  for (int r = 1; r <= i; ++r)
    for (int c = 1; c <= n; ++c)
      images[R.mvar(r, c)] = sol.M.at(r - 1, c - 1);
  for (int r = 1; r <= n - i; ++r)
    for (int c = 1; c <= n; ++c)
      images[R.mpvar(r, c)] = sol.Mp.at(r - 1, c - 1);
  res.solution_kills = true;
  for (const P& p : pm_entries(G))
    if (!substitute(kQ, p, images).is_zero()) res.solution_kills = false;

  res.ok = res.span_match && res.solution_kills;
  return res;
}

LM3Result derive_lm3(const ChartConfig& cfg) {
  validate_chart(cfg);
  LM3Result res;
  res.cfg = cfg;
  ChartRing R(cfg);
  int n = cfg.n, i = cfg.i, t = n - 2 * i, nv = R.nvars_small;

  PM N(n, n, nv);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      N.at(a - 1, b - 1) = poly_var(kQ, nv, R.nvar_small(a, b));
  P pi = poly_var(kQ, nv, R.pi_small());
  Blocks b = split_blocks(N, n, i);
  Solved sol = solve_blocks(b);

  PM Cp = pm_vconcat({sol.M, pm_identity(n, nv), sol.Mp});
  PM Cm = chart_minus(N, n, i);

  PM MpBot = pm_hconcat({sol.M8, sol.M5, sol.M2});
  PM A2 = pm_vconcat({MpBot, sol.M,
                      pm_hconcat({pm_scale_poly(pm_identity(t, nv), pi),
                                  PM(t, i, nv), PM(t, i, nv)})});
  PM A1 = pm_vconcat({pm_hconcat({PM(t, i, nv), PM(t, i, nv), pm_identity(t, nv)}),
                      pm_hconcat({b.N1, b.N2, b.N3}),
                      pm_hconcat({b.N4, b.N5, b.N6})});

  auto scaled_rows = [&](const PM& a, int lo, int hi, const P& s) {
    // Multiplies rows [lo, hi) by s, the rest untouched.
    PM r = a;
    for (int x = lo; x < hi; ++x)
      for (int y = 0; y < a.nc; ++y) r.at(x, y) = a.at(x, y) * s;
    return r;
  };
  PM i2Cp = scaled_rows(Cp, i, 2 * n - i, pi);
  PM i1Cm = scaled_rows(scaled_rows(Cm, 0, i, pi), 2 * n - i, 2 * n, pi);

  PM E2 = pm_sub(i2Cp, pm_mul(Cm, A2));
  PM E1 = pm_sub(i1Cm, pm_mul(Cp, A1));
  bool forced2 = pm_is_zero(pm_block(E2, 0, n - i, 0, n)) &&
                 pm_is_zero(pm_block(E2, 2 * n - i, 2 * n, 0, n));
  bool forced1 = pm_is_zero(pm_block(E1, i, i + n, 0, n));
  res.forced_ok = forced1 && forced2;

  // Residual blocks.  R2 rows split (i, i, t), columns (t, i, i); R1a is the
  // top band of the other inclusion, R1b the bottom band with rows (t, i).
  PM R2 = pm_block(E2, n - i, 2 * n - i, 0, n);
  PM R1a = pm_block(E1, 0, i, 0, n);
  PM R1b = pm_block(E1, i + n, 2 * n, 0, n);
  auto r2 = [&](int rb, int cb) {
    int r0 = rb < 2 ? rb * i : 2 * i, r1 = rb < 2 ? (rb + 1) * i : n;
    int c0 = cb == 0 ? 0 : t + (cb - 1) * i, c1 = cb == 0 ? t : t + cb * i;
    return pm_block(R2, r0, r1, c0, c1);
  };
  auto cols3 = [&](const PM& a, int cb) {
    int c0 = cb < 2 ? cb * i : 2 * i, c1 = cb < 2 ? (cb + 1) * i : n;
    return pm_block(a, 0, a.nr, c0, c1);
  };
  PM R1bTop = pm_block(R1b, 0, t, 0, n), R1bBot = pm_block(R1b, t, n - i, 0, n);

  // Nine reduced equations: the four blocks of each quadratic matrix
  // condition on the corner block, and the three mixed conditions.
  const PM &h = b.Hi, &H = b.Hn2i;
  PM X = pm_block(N, 0, 2 * i, 0, 2 * i);
  PM piH2i = pm_scale_poly(b.H2i, pi);
  PM T1 = pm_add(pm_mul(pm_mul(X, b.H2i), pm_transpose(X)), piH2i);
  PM T2 = pm_add(pm_mul(pm_mul(pm_transpose(X), b.H2i), X), piH2i);
  PM B11 = pm_block(T1, 0, i, 0, i), B12 = pm_block(T1, 0, i, i, 2 * i);
  PM B21 = pm_block(T1, i, 2 * i, 0, i), B22 = pm_block(T1, i, 2 * i, i, 2 * i);
  PM C11 = pm_block(T2, 0, i, 0, i), C12 = pm_block(T2, 0, i, i, 2 * i);
  PM C21 = pm_block(T2, i, 2 * i, 0, i), C22 = pm_block(T2, i, 2 * i, i, 2 * i);
  PM q7 = pm_add(pm_mul(pm_mul(pm_transpose(b.N6), h), b.N1),
                 pm_mul(pm_mul(pm_transpose(b.N3), h), b.N4));
  PM q8 = pm_add(pm_mul(pm_mul(pm_transpose(b.N3), h), b.N5),
                 pm_mul(pm_mul(pm_transpose(b.N6), h), b.N2));
  PM t7 = pm_add(q7, pm_mul(H, b.N7));
  PM t8 = pm_add(q8, pm_mul(H, b.N8));
  PM t9 = pm_add(pm_add(pm_mul(pm_transpose(b.N9), H), pm_mul(H, b.N9)),
                 pm_add(pm_mul(pm_mul(pm_transpose(b.N6), h), b.N3),
                        pm_mul(pm_mul(pm_transpose(b.N3), h), b.N6)));

  // Each reduced equation reads off one residual block exactly.
  auto eq = [](const PM& a, const PM& c) { return pm_is_zero(pm_sub(a, c)); };
  res.targets_from_derived =
      eq(B11, pm_mul(r2(0, 2), h)) && eq(B12, pm_mul(r2(0, 1), h)) &&
      eq(B21, pm_mul(r2(1, 2), h)) && eq(B22, pm_mul(r2(1, 1), h)) &&
      eq(C11, pm_mul(h, cols3(R1a, 0))) && eq(C12, pm_mul(h, cols3(R1a, 1))) &&
      eq(C21, pm_mul(h, cols3(R1bBot, 0))) &&
      eq(C22, pm_mul(h, cols3(R1bBot, 1))) &&
      eq(t7, pm_mul(H, cols3(R1bTop, 0))) &&
      eq(t8, pm_mul(H, cols3(R1bTop, 1))) &&
      eq(t9, pm_mul(H, cols3(R1bTop, 2)));

  // Conversely, the remaining residual blocks recombine from the reduced
  // equations with polynomial matrix multipliers, certifying ideal equality.
  PM t7t = pm_transpose(t7), t8t = pm_transpose(t8);
  PM q7t = pm_transpose(q7), q8t = pm_transpose(q8);
  PM hN3 = pm_mul(h, b.N3), hN6 = pm_mul(h, b.N6);
  auto via = [&](const PM& lead, const PM& tail) { return pm_sub(lead, tail); };
  PM r11 = via(pm_add(pm_mul(pm_mul(b.N1, h), t8t), pm_mul(pm_mul(b.N2, h), t7t)),
               pm_add(pm_mul(B12, hN3), pm_mul(B11, hN6)));
  PM r21 = via(pm_add(pm_mul(pm_mul(b.N4, h), t8t), pm_mul(pm_mul(b.N5, h), t7t)),
               pm_add(pm_mul(B22, hN3), pm_mul(B21, hN6)));
  PM Ht7h = pm_mul(pm_mul(H, t7), h), Ht8h = pm_mul(pm_mul(H, t8), h);
  PM HN6h = pm_mul(pm_mul(H, pm_transpose(b.N6)), h);
  PM HN3h = pm_mul(pm_mul(H, pm_transpose(b.N3)), h);
  PM r32 = via(pm_add(pm_mul(Ht7h, pm_mul(pm_transpose(b.N5), h)),
                      pm_mul(Ht8h, pm_mul(pm_transpose(b.N4), h))),
               pm_add(pm_mul(pm_mul(HN6h, B12), h), pm_mul(pm_mul(HN3h, B22), h)));
  PM r33 = via(pm_add(pm_mul(Ht7h, pm_mul(pm_transpose(b.N2), h)),
                      pm_mul(Ht8h, pm_mul(pm_transpose(b.N1), h))),
               pm_add(pm_mul(pm_mul(HN6h, B11), h), pm_mul(pm_mul(HN3h, B21), h)));
  PM r31 = pm_neg(pm_add(
      pm_add(pm_scale_poly(pm_mul(H, t9), pi),
             pm_add(pm_mul(Ht7h, pm_sub(q8t, t8t)), pm_mul(Ht8h, pm_sub(q7t, t7t)))),
      pm_add(pm_add(pm_mul(pm_mul(pm_mul(H, q7), h), t8t),
                    pm_mul(pm_mul(pm_mul(H, q8), h), t7t)),
             pm_neg(pm_add(
                 pm_add(pm_mul(pm_mul(HN6h, B12), hN3),
                        pm_mul(pm_mul(HN6h, B11), hN6)),
                 pm_add(pm_mul(pm_mul(HN3h, B22), hN3),
                        pm_mul(pm_mul(HN3h, B21), hN6)))))));
  res.derived_from_targets =
      eq(r2(0, 0), r11) && eq(r2(1, 0), r21) && eq(r2(2, 0), r31) &&
      eq(r2(2, 1), r32) && eq(r2(2, 2), r33) &&
      eq(cols3(R1a, 2), pm_mul(h, t7t)) &&
      eq(cols3(R1bBot, 2), pm_mul(h, t8t));

  // Substituting the closed forms of the two dependent lower blocks
  // annihilates their defining equations.
  PM N7s = pm_neg(pm_mul(H, q7)), N8s = pm_neg(pm_mul(H, q8));
  res.n7n8_determined = pm_is_zero(pm_add(q7, pm_mul(H, N7s))) &&
                        pm_is_zero(pm_add(q8, pm_mul(H, N8s)));

  res.ok = res.forced_ok && res.targets_from_derived &&
           res.derived_from_targets && res.n7n8_determined;
  return res;
}

Poly<Rat> a_s_minor(const ChartConfig& cfg, const Subset& S) {
  validate_chart(cfg);
  ChartRing R(cfg);
  int n = cfg.n, i = cfg.i, nv = R.nvars_small;
  if (static_cast<int>(S.size()) != n || !strictly_increasing(S) ||
      S.front() < 1 || S.back() > 2 * n)
    throw std::invalid_argument("row set must be an n-subset of [1, 2n]");
  std::vector<std::vector<P>> m(n, std::vector<P>(n, poly_zero(kQ, nv)));
  for (int x = 0; x < n; ++x) {
    int r = S[x];
    if (r <= n - i) {
      m[x][i + r - 1] = poly_const(kQ, nv, 1);
    } else if (r <= 2 * n - i) {
      for (int c = 1; c <= n; ++c)
        m[x][c - 1] = poly_var(kQ, nv, R.nvar_small(r - (n - i), c));
    } else {
      m[x][r - (2 * n - i) - 1] = poly_const(kQ, nv, 1);
    }
  }
  return det_poly(kQ, m);
}

WedgePropReport verify_prop_wedge(const ChartConfig& cfg) {
  validate_chart(cfg);
  WedgePropReport rep;
  rep.cfg = cfg;
  rep.ok = true;
  int n = cfg.n, i = cfg.i;
  if (i == 0) return rep;  // no minors of size i+1 inside a 0x0 block
  ChartRing R(cfg);
  auto row_sets = subsets_of(2 * i, i + 1);
  for (const Subset& rows : row_sets)
    for (const Subset& cols : row_sets) {
      P D = small_minor(R, rows, cols);
      Subset Cc = complement(cols, 2 * i);
      Subset part1, part2, part3, part4;
      for (int a = i + 1; a <= n - i; ++a) part2.push_back(a);
      for (int r : rows) part3.push_back(r + (n - i));
      for (int c : Cc) {
        if (c > i) part1.push_back(c - i);
        else part4.push_back(2 * n - i + c);
      }
      Subset S = sorted_union({part1, part2, part3, part4});
      bool good = static_cast<int>(S.size()) == n && strictly_increasing(S);
      if (good) {
        int dS = d_of(S, n, i);
        int dSp = d_of(perp_subset(S, n), n, i);
        good = dS < dSp;
      }
      if (good) {
        P a = a_s_minor(cfg, S);
        good = (a == D) || (a == scale(D, Rat(-1)));
      }
      if (!good) rep.ok = false;
      ++rep.cases;
    }
  return rep;
}

SignPropReport verify_prop_sign(const ChartConfig& cfg) {
  validate_chart(cfg);
  SignPropReport rep;
  rep.cfg = cfg;
  rep.ok = true;
  int n = cfg.n, i = cfg.i;
  ChartRing R(cfg);
  std::set<std::pair<Subset, Subset>> seen;
  for (const Subset& S : subsets_of(2 * n, n)) {
    if (!contains_range(S, i + 1, n - i)) continue;
    if (count_in(S, n - i + 1, n + i) != i) continue;
    Subset Sp = perp_subset(S, n);
    int dS = d_of(S, n, i), dSp = d_of(Sp, n, i);
    if (dS != dSp) continue;
    ++rep.cases;

    BalancedData d = balanced_data(S, n, i);
    bool good = d.stray_free && d.r1 + d.r3 == i;

    P a = a_s_minor(cfg, S);
    P B = small_minor(R, d.U, d.Uprime);
    if (!(a == scale(B, Rat(d.eps == 0 ? 1 : -1)))) good = false;

    // The mirrored row set carries the mirrored bideterminant data.
    BalancedData dp = balanced_data(Sp, n, i);
    if (dp.U != perp_subset(d.U, i)) good = false;
    if (dp.Uprime != perp_subset(d.Uprime, i)) good = false;
    if (dp.sum13 != d.sum13) good = false;
    if (dp.eps != d.eps) good = false;

    if (sign_sigma(S, n) != sign_sigma(d.U, i) * sign_sigma(d.Uprime, i))
      good = false;
    if (subset_sum(S) !=
        n * (n + 1) / 2 + 2 * n * (i - d.r1) + subset_sum(d.U) - subset_sum(d.Uprime))
      good = false;

    seen.emplace(d.U, d.Uprime);
    if (!good) rep.ok = false;
  }
  long expect = static_cast<long>(subsets_of(2 * i, i).size());
  expect *= expect;
  rep.bijective = static_cast<long>(seen.size()) == rep.cases && rep.cases == expect;
  rep.ok = rep.ok && rep.bijective;
  return rep;
}

ChartPresentation build_chart_presentation(const ChartConfig& cfg, Variant variant) {
  validate_chart(cfg);
  if (cfg.i < 1)
    throw std::invalid_argument("presentation needs a nonempty square block");
  ChartPresentation out;
  out.cfg = cfg;
  out.variant = variant;
  out.spec = IdealSpec{2 * cfg.i, MatrixForm::H, variant};
  int n = cfg.n, i = cfg.i, nv = ChartRing(cfg).nvars_small;
  ChartRing R(cfg);
  out.free_count = static_cast<long>(n - 2 * i) * (n + 2 * i - 1) / 2;

  auto gens = build_ideal_generators(kQ, out.spec);
  VarMatrix Xv(2 * i, 2 * i);
  std::vector<P> images(Xv.nvars(), poly_zero(kQ, nv));
  for (int a = 1; a <= 2 * i; ++a)
    for (int c = 1; c <= 2 * i; ++c)
      images[Xv.var(a, c)] = poly_var(kQ, nv, R.nvar_small(a, c));
  std::vector<P> mapped;
  mapped.reserve(gens.size());
  for (const auto& g : gens) mapped.push_back(substitute(kQ, g, images));

  PM N(n, n, nv);
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c)
      N.at(a - 1, c - 1) = poly_var(kQ, nv, R.nvar_small(a, c));
  Blocks b = split_blocks(N, n, i);
  PM X = pm_block(N, 0, 2 * i, 0, 2 * i);
  PM Q1 = pm_mul(pm_mul(X, b.H2i), pm_transpose(X));
  PM Q2 = pm_mul(pm_mul(pm_transpose(X), b.H2i), X);

  size_t pos = 0;
  out.quadratics_match = true;
  for (const PM* Q : {&Q1, &Q2})
    for (int j = 0; j < 2 * i; ++j)
      for (int k = j; k < 2 * i; ++k)
        if (!(Q->at(j, k) == mapped.at(pos++))) out.quadratics_match = false;

  out.minors_match = true;
  auto row_sets = subsets_of(2 * i, i + 1);
  for (const Subset& rows : row_sets)
    for (const Subset& cols : row_sets)
      if (!(small_minor(R, rows, cols) == mapped.at(pos++)))
        out.minors_match = false;

  auto pairs = spin_pairs(2 * i, MatrixForm::H, variant);
  std::map<std::pair<Subset, Subset>, P> spin_of;
  for (size_t k = 0; k < pairs.size(); ++k)
    spin_of[{pairs[k].u, pairs[k].up}] = mapped.at(pos + k);

  out.spin_match = true;
  if (variant != Variant::naive) {
    int vsign = variant == Variant::plus ? -1 : +1;
    std::set<std::pair<Subset, Subset>> seen;
    for (const Subset& S : subsets_of(2 * n, n)) {
      if (!contains_range(S, i + 1, n - i)) continue;
      if (count_in(S, n - i + 1, n + i) != i) continue;
      Subset Sp = perp_subset(S, n);
      if (d_of(S, n, i) != d_of(Sp, n, i)) continue;
      BalancedData d = balanced_data(S, n, i);
      P chart_gen = a_s_minor(cfg, S) +
                    scale(a_s_minor(cfg, Sp), Rat(vsign * sign_sigma(S, n)));
      auto it = spin_of.find({d.U, d.Uprime});
      if (it == spin_of.end() ||
          !(chart_gen == scale(it->second, Rat(d.eps == 0 ? 1 : -1))))
        out.spin_match = false;
      seen.emplace(d.U, d.Uprime);
    }
    if (seen.size() != spin_of.size()) out.spin_match = false;
  }

  out.ok = out.quadratics_match && out.minors_match && out.spin_match;
  return out;
}

WedgeBasisReport wedge_lattice_basis(const ChartConfig& cfg, int sign) {
  validate_chart(cfg);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  WedgeBasisReport rep;
  rep.cfg = cfg;
  rep.sign = sign;
  int n = cfg.n, i = cfg.i;

  auto all = subsets_of(2 * n, n);
  std::map<Subset, size_t> at;
  for (size_t k = 0; k < all.size(); ++k) at[all[k]] = k;

  rep.involution_ok = true;
  for (const Subset& S : all) {
    WedgeEntry e;
    e.S = S;
    e.Sperp = perp_subset(S, n);
    e.d_S = d_of(S, n, i);
    e.d_Sperp = d_of(e.Sperp, n, i);
    e.sigma_sign = sign_sigma(S, n);
    e.self_perp = S == e.Sperp;
    e.in_B0 = e.self_perp ? (e.sigma_sign == sign) : (S < e.Sperp);
    if (e.d_S >= e.d_Sperp) {
      e.pi_power = e.d_S;
      e.g_S_power = 0;
      e.g_Sperp_power = e.d_S - e.d_Sperp;
    } else {
      e.pi_power = e.d_Sperp;
      e.g_S_power = e.d_Sperp - e.d_S;
      e.g_Sperp_power = 0;
    }
    if (perp_subset(e.Sperp, n) != S) rep.involution_ok = false;
    if (sign_sigma(e.Sperp, n) != e.sigma_sign) rep.involution_ok = false;
    rep.entries.push_back(std::move(e));
  }

  rep.pairing_ok = true;
  rep.relation_ok = true;
  for (const WedgeEntry& e : rep.entries) {
    if (e.in_B0) ++rep.b0_size;
    const WedgeEntry& m = rep.entries[at.at(e.Sperp)];
    if (!e.self_perp && !(e.in_B0 ^ m.in_B0)) rep.pairing_ok = false;
    // f_S = e_S + sign*sigma(S) e_{S^perp}; the mirror relation is the
    // signed original.
    std::map<Subset, int> fm, fs;
    fm[e.Sperp] += 1;
    fm[e.S] += sign * m.sigma_sign;
    int c = sign * e.sigma_sign;
    fs[e.S] += c;
    fs[e.Sperp] += c * sign * e.sigma_sign;
    std::erase_if(fm, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(fs, [](const auto& kv) { return kv.second == 0; });
    if (fm != fs) rep.relation_ok = false;
  }
  rep.ok = rep.pairing_ok && rep.involution_ok && rep.relation_ok;
  return rep;
}

int rank_stratum_of_point(const ChartConfig& cfg, const DenseMat<Rat>& Nval) {
  validate_chart(cfg);
  int n = cfg.n, i = cfg.i, t = n - 2 * i;
  if (Nval.nr != n || Nval.nc != n)
    throw std::invalid_argument("point must be an n x n value of the square block");

  auto block = [&](int r0, int r1, int c0, int c1) {
    DenseMat<Rat> m = mat_zero(kQ, r1 - r0, c1 - c0);
    for (int x = r0; x < r1; ++x)
      for (int y = c0; y < c1; ++y) m.at(x - r0, y - c0) = Nval.at(x, y);
    return m;
  };
  auto zero = [](const DenseMat<Rat>& m) {
    for (int x = 0; x < m.nr; ++x)
      for (int y = 0; y < m.nc; ++y)
        if (!is_zero(m.at(x, y))) return false;
    return true;
  };

  DenseMat<Rat> X = block(0, 2 * i, 0, 2 * i);
  DenseMat<Rat> N1 = block(0, i, 0, i), N2 = block(0, i, i, 2 * i),
                N3 = block(0, i, 2 * i, n), N4 = block(i, 2 * i, 0, i),
                N5 = block(i, 2 * i, i, 2 * i), N6 = block(i, 2 * i, 2 * i, n),
                N7 = block(2 * i, n, 0, i), N8 = block(2 * i, n, i, 2 * i),
                N9 = block(2 * i, n, 2 * i, n);
  DenseMat<Rat> Hi = mat_from_pattern(kQ, h_pattern(i));
  DenseMat<Rat> Hn2i = mat_from_pattern(kQ, h_pattern(t));
  DenseMat<Rat> H2i = mat_from_pattern(kQ, h_pattern(2 * i));

  bool valid = zero(mat_mul(mat_mul(X, H2i), mat_transpose(X))) &&
               zero(mat_mul(mat_mul(mat_transpose(X), H2i), X));
  auto s3 = mat_add(mat_mul(mat_mul(mat_transpose(N6), Hi), N1),
                    mat_mul(mat_mul(mat_transpose(N3), Hi), N4));
  auto s4 = mat_add(mat_mul(mat_mul(mat_transpose(N3), Hi), N5),
                    mat_mul(mat_mul(mat_transpose(N6), Hi), N2));
  valid = valid && zero(mat_add(mat_mul(Hn2i, N7), s3)) &&
          zero(mat_add(mat_mul(Hn2i, N8), s4));
  auto s5 = mat_add(mat_add(mat_mul(mat_transpose(N9), Hn2i), mat_mul(Hn2i, N9)),
                    mat_add(mat_mul(mat_mul(mat_transpose(N6), Hi), N3),
                            mat_mul(mat_mul(mat_transpose(N3), Hi), N6)));
  valid = valid && zero(s5);
  if (!valid)
    throw std::invalid_argument("point violates the special fiber equations");

  int l = mat_rank(kQ, X);
  if (l > i) throw std::logic_error("isotropic block exceeds maximal rank");
  return l;
}

}  // namespace spinlm

#include "spinlm/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "spinlm/field.hpp"

namespace spinlm {

bool is_valid_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  if (!is_valid_partition(p)) throw std::invalid_argument("bad partition");
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0]);
  for (int c = 0; c < p[0]; ++c) {
    int len = 0;
    for (int part : p)
      if (part > c) ++len;
    q[c] = len;
  }
  return q;
}

bool partition_dominance_less(const Partition& a, const Partition& b) {
  if (a == b) return false;
  int sa = partition_size(a), sb = partition_size(b);
  if (sa != sb) return sa < sb;
  long pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += i < b.size() ? b[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

bool partition_total_less(const Partition& a, const Partition& b) {
  if (a == b) return false;
  int sa = partition_size(a), sb = partition_size(b);
  if (sa != sb) return sa < sb;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Partition Tableau::shape() const {
  Partition p;
  p.reserve(rows.size());
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  if (!is_valid_partition(p)) throw std::invalid_argument("ragged tableau");
  return p;
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  for (const auto& r : rows)
    if (c < static_cast<int>(r.size())) out.push_back(r[c]);
  return out;
}

bool tableau_order_prec(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("shapes differ");
  if (a == b) return false;
  int ncols = a.rows.empty() ? 0 : static_cast<int>(a.rows[0].size());
  for (int c = ncols - 1; c >= 0; --c) {
    auto ca = a.column(c), cb = b.column(c);
    for (std::size_t r = 0; r < ca.size(); ++r)
      if (ca[r] != cb[r]) return ca[r] < cb[r];
  }
  return false;
}

bool is_gl_standard(const Tableau& t, int N) {
  Partition sh = t.shape();
  if (static_cast<int>(sh.size()) > N) return false;
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > N) throw std::invalid_argument("bad letter");
      if (c > 0 && row[c] < row[c - 1]) return false;
    }
  for (std::size_t r = 1; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
      if (t.rows[r][c] <= t.rows[r - 1][c]) return false;
  return true;
}

namespace {

// Entry at 1-based (row, col); 0 when the cell does not exist.
int cell(const Tableau& t, int r, int c) {
  if (r < 1 || c < 1 || r > static_cast<int>(t.rows.size())) return 0;
  const auto& row = t.rows[r - 1];
  if (c > static_cast<int>(row.size())) return 0;
  return row[c - 1];
}

int count_leq(const std::vector<int>& col, int code_bound) {
  int n = 0;
  for (int x : col)
    if (x <= code_bound) ++n;
  return n;
}

}  // namespace

bool is_on_standard(const Tableau& t, int N) {
  if (!is_gl_standard(t, N)) return false;
  Partition conj = conjugate(t.shape());
  int c1 = conj.empty() ? 0 : conj[0];
  int c2 = conj.size() > 1 ? conj[1] : 0;
  if (c1 + c2 > N) return false;
  int m = N / 2;
  auto col1 = t.column(0), col2 = t.column(1);
  for (int i = 1; i <= m; ++i) {
    int ai = count_leq(col1, 2 * i);
    int bi = count_leq(col2, 2 * i);
    if (ai + bi > 2 * i) return false;
    if (ai + bi == 2 * i && ai > bi && cell(t, ai, 1) == 2 * i &&
        cell(t, bi, 2) == 2 * i - 1) {
      if (cell(t, ai - 1, 1) != 2 * i - 1) return false;
    }
    if (ai + bi == 2 * i && ai == i && bi == i && cell(t, i, 1) == 2 * i - 1) {
      // every occurrence of the unbarred letter in row i must sit under the
      // barred one
      int width = i <= static_cast<int>(t.rows.size())
                      ? static_cast<int>(t.rows[i - 1].size())
                      : 0;
      for (int b = 2; b <= width; ++b)
        if (cell(t, i, b) == 2 * i && cell(t, i - 1, b) != 2 * i - 1)
          return false;
    }
  }
  return true;
}

Tableau tableau_perp(const Tableau& t, int N) {
  if (N % 2 != 0) throw std::invalid_argument("perp needs N even");
  int m = N / 2;
  Partition conj = conjugate(t.shape());
  int c1 = conj.empty() ? 0 : conj[0];
  if (c1 < m) return t;
  if (c1 > m) throw std::invalid_argument("first column longer than N/2");
  Subset u = t.column(0);
  if (!std::is_sorted(u.begin(), u.end()) ||
      std::adjacent_find(u.begin(), u.end()) != u.end())
    throw std::invalid_argument("first column is not a strict chain");
  Subset up = perp_barred(u, N);
  Tableau out = t;
  for (int r = 0; r < m; ++r) out.rows[r][0] = up[r];
  return out;
}

int sign_tau_tableau(const Tableau& t, int N) {
  if (N % 2 != 0) throw std::invalid_argument("sign_tau needs N even");
  Subset u = t.column(0);
  return sign_tau(u, N);
}

bool so_tiebreak_holds(const Tableau& t, int N, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Partition conj = conjugate(t.shape());
  if (N % 2 != 0 || conj.empty() || conj[0] != N / 2)
    throw std::invalid_argument("tie-break needs first column of length N/2");
  Tableau tp = tableau_perp(t, N);
  if (t != tp) return t.column(0) <= tp.column(0);
  Tableau canon = canonical_tableau(t.shape(), N);
  return sign_tau_tableau(t, N) == sign * sign_tau_tableau(canon, N);
}

bool is_so_standard_signed(const Tableau& t, int N, int sign) {
  if (N % 2 != 0) throw std::invalid_argument("SO-standardness needs N even");
  if (!is_on_standard(t, N)) return false;
  Partition conj = conjugate(t.shape());
  int c1 = conj.empty() ? 0 : conj[0];
  if (c1 < N / 2) return true;
  return so_tiebreak_holds(t, N, sign);
}

bool is_so_standard(const Tableau& t, int N) {
  return is_so_standard_signed(t, N, 1);
}

Tableau canonical_tableau(const Partition& shape, int N) {
  if (!is_valid_partition(shape)) throw std::invalid_argument("bad partition");
  int m = N / 2;
  if (static_cast<int>(shape.size()) > m)
    throw std::invalid_argument("canonical tableau needs at most N/2 rows");
  Tableau t;
  for (std::size_t j = 0; j < shape.size(); ++j)
    t.rows.emplace_back(shape[j], 2 * static_cast<int>(j) + 1);
  return t;
}

namespace {

// Row-major backtracking; `admissible` prunes a candidate entry given its
// left and upper neighbours (0 when absent).
std::vector<Tableau> enumerate_by(const Partition& shape, int N,
                                  const std::function<bool(int, int, int)>& admissible,
                                  std::size_t limit) {
  std::vector<Tableau> out;
  if (!is_valid_partition(shape)) throw std::invalid_argument("bad partition");
  Tableau t;
  for (int part : shape) t.rows.emplace_back(part, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == t.rows.size()) {
      out.push_back(t);
      if (out.size() > limit) throw budget_error("tableau enumeration too large");
      return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == t.rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int left = c > 0 ? t.rows[r][c - 1] : 0;
    int up = r > 0 && c < t.rows[r - 1].size() ? t.rows[r - 1][c] : 0;
    for (int v = 1; v <= N; ++v) {
      if (!admissible(v, left, up)) continue;
      t.rows[r][c] = v;
      rec(nr, nc);
    }
    t.rows[r][c] = 0;
  };
  if (partition_size(shape) == 0) {
    out.push_back(t);
  } else {
    rec(0, 0);
  }
  return out;
}

}  // namespace

std::vector<Tableau> enumerate_fillings(const Partition& shape, int N) {
  return enumerate_by(
      shape, N, [](int, int, int) { return true; }, 1u << 20);
}

std::vector<Tableau> enumerate_gl_standard(const Partition& shape, int N) {
  if (static_cast<int>(shape.size()) > N) return {};
  return enumerate_by(
      shape, N,
      [](int v, int left, int up) { return v >= left && v > up; }, 1u << 22);
}

std::vector<Tableau> enumerate_on_standard(const Partition& shape, int N) {
  Partition conj = conjugate(shape);
  int c1 = conj.empty() ? 0 : conj[0];
  int c2 = conj.size() > 1 ? conj[1] : 0;
  if (c1 + c2 > N) return {};
  std::vector<Tableau> out;
  for (const Tableau& t : enumerate_gl_standard(shape, N))
    if (is_on_standard(t, N)) out.push_back(t);
  return out;
}

std::vector<Tableau> enumerate_so_standard(const Partition& shape, int N) {
  std::vector<Tableau> out;
  for (const Tableau& t : enumerate_on_standard(shape, N))
    if (is_so_standard(t, N)) out.push_back(t);
  return out;
}

std::vector<Partition> partitions_of(int d, int max_rows) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) == max_rows) return;
    for (int part = std::min(rem, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rem - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end(), partition_total_less);
  return out;
}

}  // namespace spinlm

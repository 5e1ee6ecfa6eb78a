#include "spinlm/indexcomb.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinlm {

namespace {

void check_code(int a, int N) {
  if (a < 1 || a > N) throw std::invalid_argument("letter code out of range");
}

void check_subset(const Subset& S, int ambient, int size) {
  if (static_cast<int>(S.size()) != size)
    throw std::invalid_argument("subset has wrong size");
  int prev = 0;
  for (int s : S) {
    if (s <= prev || s > ambient)
      throw std::invalid_argument("subset not sorted/distinct/in range");
    prev = s;
  }
}

}  // namespace

int bar(int a, int N) {
  check_code(a, N);
  if (N % 2 == 1 && a == N) return a;
  return (a % 2 == 1) ? a + 1 : a - 1;
}

bool is_barred(int a, int N) {
  check_code(a, N);
  if (N % 2 == 1 && a == N) return false;
  return a % 2 == 1;
}

std::string index_label(int a, int N) {
  check_code(a, N);
  if (N % 2 == 1 && a == N) return "0";
  int x = (a + 1) / 2;
  return is_barred(a, N) ? std::to_string(x) + "'" : std::to_string(x);
}

std::vector<Subset> subsets_of(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  // standard lexicographic k-subset walk
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, Subset{});
  return out;
}

Subset complement(const Subset& S, int ambient) {
  Subset out;
  out.reserve(ambient - S.size());
  std::size_t k = 0;
  for (int x = 1; x <= ambient; ++x) {
    if (k < S.size() && S[k] == x) {
      ++k;
    } else {
      out.push_back(x);
    }
  }
  if (k != S.size()) throw std::invalid_argument("subset exceeds ambient range");
  return out;
}

int perm_sign_by_inversions(const std::vector<int>& seq) {
  long inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) throw std::invalid_argument("repeated entry");
      if (seq[i] > seq[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

Subset star_subset(const Subset& S, int n) {
  check_subset(S, 2 * n, n);
  Subset out;
  out.reserve(S.size());
  for (auto it = S.rbegin(); it != S.rend(); ++it) out.push_back(2 * n + 1 - *it);
  return out;
}

Subset perp_subset(const Subset& S, int n) {
  return complement(star_subset(S, n), 2 * n);
}

int sign_sigma(const Subset& S, int n) {
  check_subset(S, 2 * n, n);
  std::vector<int> seq = S;
  Subset rest = complement(S, 2 * n);
  seq.insert(seq.end(), rest.begin(), rest.end());
  return perm_sign_by_inversions(seq);
}

int sign_sigma_formula(const Subset& S, int n) {
  check_subset(S, 2 * n, n);
  long sum = (n + 1) / 2;
  for (int s : S) sum += s;
  return sum % 2 == 0 ? 1 : -1;
}

int d_of(const Subset& S, int n, int i) {
  check_subset(S, 2 * n, n);
  if (i < 0 || i > n) throw std::invalid_argument("need 0 <= i <= n");
  int cnt = 0;
  for (int s : S)
    if (s >= 2 * n - i + 1) ++cnt;
  return cnt;
}

DComparison d_comparison_predicate(const Subset& S, int n, int i) {
  int dS = d_of(S, n, i);
  int dP = d_of(perp_subset(S, n), n, i);
  int mid = 0;
  for (int s : S)
    if (s >= i + 1 && s <= 2 * n - i) ++mid;
  DComparison r;
  r.cmp = dS < dP ? -1 : (dS == dP ? 0 : 1);
  r.window_rule = mid >= n - i;
  return r;
}

Subset bar_subset(const Subset& U, int N) {
  Subset out;
  out.reserve(U.size());
  for (int u : U) out.push_back(bar(u, N));
  std::sort(out.begin(), out.end());
  return out;
}

Subset perp_barred(const Subset& U, int N) {
  return complement(bar_subset(U, N), N);
}

int sign_tau(const Subset& U, int N) {
  if (N % 2 != 0) throw std::invalid_argument("sign_tau: N must be even");
  check_subset(U, N, N / 2);
  std::vector<int> seq = U;
  for (int k : perp_barred(U, N)) seq.push_back(bar(k, N));
  return perm_sign_by_inversions(seq);
}

std::vector<std::vector<int>> j_pattern(int N) {
  std::vector<std::vector<int>> J(N, std::vector<int>(N, 0));
  for (int a = 1; a <= N; ++a) J[a - 1][bar(a, N) - 1] = 1;
  return J;
}

std::vector<std::vector<int>> h_pattern(int N) {
  std::vector<std::vector<int>> H(N, std::vector<int>(N, 0));
  for (int a = 1; a <= N; ++a) H[a - 1][N - a] = 1;
  return H;
}

std::vector<std::vector<int>> c_pattern(int N) {
  std::vector<std::vector<int>> C(N, std::vector<int>(N, 0));
  int half = (N + 1) / 2;
  for (int j = 1; j <= N; ++j) {
    int sigma = (j <= half) ? 2 * j - 1 : 2 * (N + 1 - j);
    C[sigma - 1][j - 1] = 1;
  }
  return C;
}

}  // namespace spinlm

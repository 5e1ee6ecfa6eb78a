#include "spinlm/rings.hpp"

#include <algorithm>

#include "spinlm/tableaux.hpp"

namespace spinlm {

namespace {

// Row-reading word of both tableaux, used to pick one member of each
// mirror orbit deterministically.
std::vector<int> pair_word(const Bitableau& bt) {
  std::vector<int> w;
  for (const auto& row : bt.s.rows) w.insert(w.end(), row.begin(), row.end());
  w.push_back(0);
  for (const auto& row : bt.t.rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

}  // namespace

std::vector<Bitableau> standard_pair_basis(int N, Variant variant, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Bitableau> out;
  if (degree == 0) {
    out.push_back(Bitableau{Tableau{}, Tableau{}});
    return out;
  }
  int m = N / 2;
  if (m == 0) return out;
  int want = variant == Variant::plus ? +1 : -1;
  for (const Partition& lam : partitions_of(degree, m)) {
    auto st = enumerate_on_standard(lam, N);
    bool full_column =
        variant != Variant::naive && static_cast<int>(lam.size()) == m;
    for (const Tableau& s : st)
      for (const Tableau& t : st) {
        Bitableau bt{s, t};
        if (!full_column) {
          out.push_back(bt);
          continue;
        }
        Tableau sp = tableau_perp(s, N);
        Tableau tp = tableau_perp(t, N);
        if (sp == s && tp == t) {
          if (sign_tau_tableau(s, N) * sign_tau_tableau(t, N) == want)
            out.push_back(bt);
        } else {
          Bitableau mirror{sp, tp};
          if (pair_word(bt) < pair_word(mirror)) out.push_back(bt);
        }
      }
  }
  return out;
}

long standard_pair_count(int N, Variant variant, int degree) {
  return static_cast<long>(standard_pair_basis(N, variant, degree).size());
}

}  // namespace spinlm

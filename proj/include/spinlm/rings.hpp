#pragma once

// Matrix-defined quotient rings: ideal builders, graded slices split by the
// torus bigrading, exact quotient dimensions, membership, standard-pair basis
// verification, and the derived ring-level checks (invariance, injectivity,
// characteristic comparison).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinlm/echelon.hpp"
#include "spinlm/field.hpp"
#include "spinlm/indexcomb.hpp"
#include "spinlm/linalg.hpp"
#include "spinlm/poly.hpp"
#include "spinlm/random.hpp"
#include "spinlm/tableaux.hpp"

namespace spinlm {

enum class MatrixForm { J, H };
enum class Variant { naive, plus, minus };

inline std::string form_name(MatrixForm f) {
  return f == MatrixForm::J ? "J" : "H";
}
inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::naive: return "naive";
    case Variant::plus: return "plus";
    default: return "minus";
  }
}

struct Budget {
  int max_size = 4;            // matrix size N
  int max_degree = 5;          // graded slice degree
  long max_monomials = 200000; // ambient monomial count per slice
};

struct IdealSpec {
  int N = 2;
  MatrixForm form = MatrixForm::J;
  Variant variant = Variant::naive;
};

// Row/column weights: letters come in +/- pairs (pair id, sign); a middle
// letter of odd size carries weight zero. Index 0 of the tables is unused.
struct GradingTable {
  int npairs = 0;
  std::vector<int> pair_of;
  std::vector<int> sign_of;
};

inline GradingTable grading_for(int N, MatrixForm form) {
  GradingTable g;
  g.npairs = N / 2;
  g.pair_of.assign(N + 1, -1);
  g.sign_of.assign(N + 1, 0);
  for (int a = 1; a <= N; ++a) {
    if (form == MatrixForm::J) {
      if (N % 2 == 1 && a == N) continue;
      g.pair_of[a] = (a - 1) / 2;
      g.sign_of[a] = (a % 2 == 1) ? +1 : -1;
    } else {
      int mate = N + 1 - a;
      if (a == mate) continue;
      g.pair_of[a] = std::min(a, mate) - 1;
      g.sign_of[a] = (a < mate) ? +1 : -1;
    }
  }
  return g;
}

// Spin generator data: subset pair, its mirrored pair, and the sign carried
// by the mirrored bideterminant inside the generator.
struct SpinPair {
  Subset u, up;      // row and column subsets
  Subset pu, pup;    // their perps
  int mirror_sign;   // coefficient of [pu:pup] in the generator
};

inline std::vector<SpinPair> spin_pairs(int N, MatrixForm form, Variant variant) {
  if (variant == Variant::naive) return {};
  if (N % 2 != 0)
    throw std::invalid_argument("spin variant requires even size");
  int m = N / 2;
  auto subs = subsets_of(N, m);
  std::vector<SpinPair> out;
  out.reserve(subs.size() * subs.size());
  for (const Subset& u : subs) {
    for (const Subset& up : subs) {
      SpinPair sp;
      sp.u = u;
      sp.up = up;
      int s;
      if (form == MatrixForm::J) {
        sp.pu = perp_barred(u, N);
        sp.pup = perp_barred(up, N);
        s = sign_tau(u, N) * sign_tau(up, N);
      } else {
        sp.pu = perp_subset(u, m);
        sp.pup = perp_subset(up, m);
        s = sign_sigma(u, m) * sign_sigma(up, m);
      }
      sp.mirror_sign = (variant == Variant::plus) ? -s : s;
      out.push_back(std::move(sp));
    }
  }
  return out;
}

// Complete homogeneous generator list in a fixed order: the two quadratic
// matrix products (upper triangles), all (m+1)-minors, then spin generators.
template <class F>
std::vector<Poly<typename F::Elt>> build_ideal_generators(const F& field,
                                                          const IdealSpec& spec) {
  using K = typename F::Elt;
  int N = spec.N;
  if (N < 1) throw std::invalid_argument("size must be positive");
  if (spec.variant != Variant::naive && N % 2 != 0)
    throw std::invalid_argument("spin variant requires even size");
  VarMatrix X(N, N);
  int nv = N * N;
  auto mate = [&](int a) {
    return spec.form == MatrixForm::J ? bar(a, N) : N + 1 - a;
  };
  std::vector<Poly<K>> gens;

  for (int j = 1; j <= N; ++j)
    for (int k = j; k <= N; ++k) {
      Poly<K> p = poly_zero(field, nv);
      for (int a = 1; a <= N; ++a)
        p = p + poly_var(field, nv, X.var(j, a)) *
                    poly_var(field, nv, X.var(k, mate(a)));
      gens.push_back(std::move(p));
    }
  for (int j = 1; j <= N; ++j)
    for (int k = j; k <= N; ++k) {
      Poly<K> p = poly_zero(field, nv);
      for (int a = 1; a <= N; ++a)
        p = p + poly_var(field, nv, X.var(a, j)) *
                    poly_var(field, nv, X.var(mate(a), k));
      gens.push_back(std::move(p));
    }

  int m = N / 2;
  auto rows = subsets_of(N, m + 1);
  for (const Subset& r : rows)
    for (const Subset& c : rows)
      gens.push_back(minor_poly(field, X, r, c));

  for (const SpinPair& sp : spin_pairs(N, spec.form, spec.variant)) {
    Poly<K> p = minor_poly(field, X, sp.u, sp.up);
    Poly<K> q = minor_poly(field, X, sp.pu, sp.pup);
    gens.push_back(p + scale(q, field(sp.mirror_sign)));
  }
  return gens;
}

struct MonoHash {
  size_t operator()(const Mono& m) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : m.e) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline long ambient_monomial_count(int nvars, int degree, long cap) {
  // C(nvars+degree-1, degree) with saturation at cap+1.
  long result = 1;
  for (int k = 1; k <= degree; ++k) {
    result = result * (nvars - 1 + k);
    result /= k;
    if (result > cap) return cap + 1;
  }
  return result;
}

template <class F>
class GradedRing {
 public:
  using K = typename F::Elt;
  using EC = EchelonChoice<F>;
  using Ech = typename EC::type;
  using Key = std::vector<int>;

  GradedRing(const F& field, IdealSpec spec, Budget budget = Budget{})
      : field_(field),
        spec_(spec),
        budget_(budget),
        X_(spec.N, spec.N),
        grading_(grading_for(spec.N, spec.form)) {
    if (spec_.N > budget_.max_size)
      throw budget_error("matrix size " + std::to_string(spec_.N) +
                         " exceeds budget " + std::to_string(budget_.max_size));
    gens_ = build_ideal_generators(field_, spec_);
    gen_keys_.reserve(gens_.size());
    for (const auto& g : gens_) gen_keys_.push_back(key_of_poly(g));
  }

  const F& field() const { return field_; }
  const IdealSpec& spec() const { return spec_; }
  const Budget& budget() const { return budget_; }
  const VarMatrix& X() const { return X_; }
  int nvars() const { return spec_.N * spec_.N; }
  const std::vector<Poly<K>>& generators() const { return gens_; }

  Key key_of_mono(const Mono& mo) const {
    Key key(2 * grading_.npairs, 0);
    int N = spec_.N;
    for (int v = 0; v < static_cast<int>(mo.e.size()); ++v) {
      int e = mo.e[v];
      if (e == 0) continue;
      int a = v / N + 1, b = v % N + 1;
      if (grading_.pair_of[a] >= 0)
        key[grading_.pair_of[a]] += e * grading_.sign_of[a];
      if (grading_.pair_of[b] >= 0)
        key[grading_.npairs + grading_.pair_of[b]] += e * grading_.sign_of[b];
    }
    return key;
  }

  // All terms of a generator share one key; verified at construction time.
  Key key_of_poly(const Poly<K>& p) const {
    if (p.is_zero()) return Key(2 * grading_.npairs, 0);
    auto it = p.terms.begin();
    Key key = key_of_mono(it->first);
    for (++it; it != p.terms.end(); ++it)
      if (key_of_mono(it->first) != key)
        throw std::invalid_argument("polynomial is not weight-homogeneous");
    return key;
  }

  long monomial_count(int d) { return layout_(d).nmono; }

  long ideal_rank(int d) {
    echelon_(d);
    return deg_[d].rank;
  }

  long quotient_dim(int d) { return monomial_count(d) - ideal_rank(d); }

  // Homogeneous-slice membership; general polynomials are split by total
  // degree and by weight first.
  bool membership(const Poly<K>& p) {
    if (p.is_zero()) return true;
    std::map<int, std::map<Key, Poly<K>>> parts;
    for (const auto& [mo, c] : p.terms) {
      Poly<K>& comp = parts[mo.degree()][key_of_mono(mo)];
      comp.nvars = nvars();
      comp.add_term(mo, c);
    }
    for (auto& [d, blocks] : parts) {
      DegreeData& dd = echelon_(d);
      for (auto& [key, comp] : blocks) {
        auto lit = dd.blocks.find(key);
        if (lit == dd.blocks.end()) return false;  // cannot happen for valid vars
        std::vector<K> row = densify_(comp, lit->second);
        auto eit = dd.ech.find(key);
        if (eit == dd.ech.end()) {
          bool zero = true;
          for (const K& x : row)
            if (!spinlm::is_zero(x)) { zero = false; break; }
          if (!zero) return false;
        } else if (!EC::in_span(eit->second, field_, std::move(row))) {
          return false;
        }
      }
    }
    return true;
  }

  // Number of elements of `ps` (all homogeneous of degree d) that are
  // linearly independent modulo the ideal slice, inserted in order.
  long added_rank(const std::vector<Poly<K>>& ps, int d) {
    DegreeData& dd = echelon_(d);
    std::map<Key, Ech> work = dd.ech;  // keep the ideal echelon intact
    long added = 0;
    for (const Poly<K>& p : ps) {
      if (p.is_zero()) continue;
      if (p.degree() != d)
        throw std::invalid_argument("added_rank: degree mismatch");
      Key key = key_of_poly(p);
      auto lit = dd.blocks.find(key);
      if (lit == dd.blocks.end())
        throw std::invalid_argument("added_rank: missing block");
      auto [eit, fresh] = work.try_emplace(
          key, EC::make(field_, static_cast<int>(lit->second.monos.size())));
      if (EC::insert(eit->second, field_, densify_(p, lit->second))) ++added;
    }
    return added;
  }

  // Multiplication by a weight-homogeneous f on the degree-d quotient slice:
  // true iff the induced map into degree d+deg(f) is injective. The bigrading
  // splits the map blockwise, so each block is certified separately.
  bool multiplication_injective(const Poly<K>& f, int d) {
    if (f.is_zero()) return false;
    int e = f.degree();
    if (!is_homogeneous(f))
      throw std::invalid_argument("multiplier must be homogeneous");
    Key delta = key_of_poly(f);
    DegreeData& src = echelon_(d);
    DegreeData& dst = echelon_(d + e);
    for (const auto& [key, lay] : src.blocks) {
      long w = static_cast<long>(lay.monos.size());
      long r = 0;
      auto sit = src.ech.find(key);
      if (sit != src.ech.end()) r = sit->second.rank();
      long q = w - r;
      if (q == 0) continue;
      Key tkey(key.size());
      for (size_t i = 0; i < key.size(); ++i) tkey[i] = key[i] + delta[i];
      auto tlit = dst.blocks.find(tkey);
      if (tlit == dst.blocks.end())
        throw std::logic_error("target block missing");
      Ech work = [&]() {
        auto teit = dst.ech.find(tkey);
        if (teit != dst.ech.end()) return teit->second;
        return EC::make(field_, static_cast<int>(tlit->second.monos.size()));
      }();
      long added = 0;
      for (const Mono& mo : lay.monos) {
        std::vector<K> row(tlit->second.monos.size(), field_(0));
        for (const auto& [fm, c] : f.terms) {
          Mono prod = mono_mul(fm, mo);
          row[tlit->second.pos.at(prod)] = c;
        }
        if (EC::insert(work, field_, std::move(row))) ++added;
      }
      if (added != q) return false;
    }
    return true;
  }

  struct Layout {
    std::vector<Mono> monos;
    std::unordered_map<Mono, int, MonoHash> pos;
  };

  const std::map<Key, Layout>& blocks(int d) { return layout_(d).blocks; }

  std::vector<K> densify(const Poly<K>& p, const Layout& lay) const {
    return densify_(p, lay);
  }

  // Ideal rows of one block, as dense vectors; used by the normal-form solver.
  std::vector<std::vector<K>> ideal_rows(int d, const Key& key) {
    DegreeData& dd = layout_(d);
    auto lit = dd.blocks.find(key);
    if (lit == dd.blocks.end()) return {};
    const Layout& lay = lit->second;
    std::vector<std::vector<K>> rows;
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      if (gens_[gi].is_zero()) continue;
      int ge = gens_[gi].degree();
      if (ge > d) continue;
      DegreeData& shifts = layout_(d - ge);
      for (const auto& [skey, slay] : shifts.blocks) {
        Key total(skey.size());
        for (size_t i = 0; i < skey.size(); ++i)
          total[i] = skey[i] + gen_keys_[gi][i];
        if (total != key) continue;
        for (const Mono& mo : slay.monos)
          rows.push_back(multiple_row_(gi, mo, lay));
      }
    }
    return rows;
  }

 private:
  struct DegreeData {
    std::map<Key, Layout> blocks;
    long nmono = 0;
    bool layout_done = false;
    std::map<Key, Ech> ech;
    long rank = 0;
    bool ech_done = false;
  };

  DegreeData& layout_(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d > budget_.max_degree)
      throw budget_error("degree " + std::to_string(d) + " exceeds budget " +
                         std::to_string(budget_.max_degree));
    DegreeData& dd = deg_[d];
    if (dd.layout_done) return dd;
    long count = ambient_monomial_count(nvars(), d, budget_.max_monomials);
    if (count > budget_.max_monomials)
      throw budget_error("monomial space at degree " + std::to_string(d) +
                         " exceeds budget " +
                         std::to_string(budget_.max_monomials));
    Mono cur = mono_one(nvars());
    enumerate_(cur, 0, d, dd);
    dd.layout_done = true;
    return dd;
  }

  void enumerate_(Mono& cur, int var, int rem, DegreeData& dd) {
    if (rem == 0 || var == nvars() - 1) {
      cur.e[var] = static_cast<uint8_t>(rem);
      Key key = key_of_mono(cur);
      Layout& lay = dd.blocks[key];
      lay.pos.emplace(cur, static_cast<int>(lay.monos.size()));
      lay.monos.push_back(cur);
      ++dd.nmono;
      cur.e[var] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur.e[var] = static_cast<uint8_t>(e);
      enumerate_(cur, var + 1, rem - e, dd);
    }
    cur.e[var] = 0;
  }

  DegreeData& echelon_(int d) {
    DegreeData& dd = layout_(d);
    if (dd.ech_done) return dd;
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      if (gens_[gi].is_zero()) continue;
      int ge = gens_[gi].degree();
      if (ge > d) continue;
      DegreeData& shifts = layout_(d - ge);
      for (const auto& [skey, slay] : shifts.blocks) {
        Key total(skey.size());
        for (size_t i = 0; i < skey.size(); ++i)
          total[i] = skey[i] + gen_keys_[gi][i];
        auto lit = dd.blocks.find(total);
        if (lit == dd.blocks.end())
          throw std::logic_error("generator multiple escapes the slice");
        auto [eit, fresh] = dd.ech.try_emplace(
            total, EC::make(field_, static_cast<int>(lit->second.monos.size())));
        for (const Mono& mo : slay.monos) {
          if (EC::insert(eit->second, field_,
                         multiple_row_(gi, mo, lit->second)))
            ++dd.rank;
        }
      }
    }
    dd.ech_done = true;
    return dd;
  }

  std::vector<K> multiple_row_(size_t gi, const Mono& shift,
                               const Layout& lay) const {
    std::vector<K> row(lay.monos.size(), field_(0));
    for (const auto& [mo, c] : gens_[gi].terms)
      row[lay.pos.at(mono_mul(mo, shift))] = c;
    return row;
  }

  std::vector<K> densify_(const Poly<K>& p, const Layout& lay) const {
    std::vector<K> row(lay.monos.size(), field_(0));
    for (const auto& [mo, c] : p.terms) {
      auto it = lay.pos.find(mo);
      if (it == lay.pos.end())
        throw std::invalid_argument("monomial outside block");
      row[it->second] = c;
    }
    return row;
  }

  F field_;
  IdealSpec spec_;
  Budget budget_;
  VarMatrix X_;
  GradingTable grading_;
  std::vector<Poly<K>> gens_;
  std::vector<Key> gen_keys_;
  std::map<int, DegreeData> deg_;
};

struct GradedPiece {
  int degree = 0;
  long monomials = 0;
  long rank = 0;
  long quotient_dim = 0;
};

template <class F>
std::vector<GradedPiece> graded_quotient_dims(GradedRing<F>& ring, int maxDegree) {
  std::vector<GradedPiece> out;
  for (int d = 0; d <= maxDegree; ++d) {
    GradedPiece gp;
    gp.degree = d;
    gp.monomials = ring.monomial_count(d);
    gp.rank = ring.ideal_rank(d);
    gp.quotient_dim = gp.monomials - gp.rank;
    out.push_back(gp);
  }
  return out;
}

// Pair basis of a graded slice. The naive variant takes every pair of
// orthogonally standard tableaux of the same shape with at most N/2 rows.
// The spin variants quotient that set by the simultaneous first-column
// mirror: one representative per two-element orbit, plus the fixed pairs
// whose column signs multiply to +1 (plus) or -1 (minus).
std::vector<Bitableau> standard_pair_basis(int N, Variant variant, int degree);
long standard_pair_count(int N, Variant variant, int degree);

struct BasisVerdict {
  int degree = 0;
  long standard_count = 0;
  long quotient_dim = 0;
  bool independent = false;
  bool pass = false;
};

template <class F>
std::vector<BasisVerdict> verify_standard_basis(const F& field, int N,
                                                Variant variant, int maxDegree,
                                                Budget budget = Budget{}) {
  using K = typename F::Elt;
  GradedRing<F> ring(field, IdealSpec{N, MatrixForm::J, variant}, budget);
  std::vector<BasisVerdict> out;
  for (int d = 0; d <= maxDegree; ++d) {
    auto pairs = standard_pair_basis(N, variant, d);
    std::vector<Poly<K>> polys;
    polys.reserve(pairs.size());
    for (const Bitableau& bt : pairs)
      polys.push_back(bideterminant(field, bt, ring.X()));
    BasisVerdict v;
    v.degree = d;
    v.standard_count = static_cast<long>(pairs.size());
    v.quotient_dim = ring.quotient_dim(d);
    v.independent = ring.added_rank(polys, d) == v.standard_count;
    v.pass = v.independent && v.standard_count == v.quotient_dim;
    out.push_back(v);
  }
  return out;
}

// Sum, over increasing a-tuples avoiding C, of bideterminants whose left
// tableau stacks the rows (letter, mirrored letter) above a fixed tail.
// Membership of every such sum in the plain ideal is the claim; the check
// runs over all tails and all right fillings of the two-column shape.
template <class F>
bool verify_L_lemma(GradedRing<F>& ring, const Partition& shape,
                    const Subset& C, int a) {
  using K = typename F::Elt;
  int N = ring.spec().N;
  if (!is_valid_partition(shape) || shape.empty())
    throw std::invalid_argument("invalid shape");
  for (int part : shape)
    if (part > 2) throw std::invalid_argument("shape must have at most two columns");
  Partition conj = conjugate(shape);
  int col1 = conj[0];
  int col2 = conj.size() > 1 ? conj[1] : 0;
  if (col1 > N / 2) throw std::invalid_argument("first column too long");
  if (a <= 0 || a > col2) throw std::invalid_argument("row count out of range");
  if (static_cast<int>(C.size()) >= a)
    throw std::invalid_argument("excluded set too large");
  for (int c : C)
    if (c < 1 || c > N) throw std::invalid_argument("excluded letter out of range");

  std::vector<int> pool;
  for (int x = 1; x <= N; ++x)
    if (std::find(C.begin(), C.end(), x) == C.end()) pool.push_back(x);
  if (static_cast<int>(pool.size()) < a) return true;  // empty sum

  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> idx(a);
    for (int i = 0; i < a; ++i) idx[i] = i;
    while (true) {
      std::vector<int> t(a);
      for (int i = 0; i < a; ++i) t[i] = pool[idx[i]];
      tuples.push_back(t);
      int i = a - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - a + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < a; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  Partition tail_shape(shape.begin() + a, shape.end());
  int tail_cells = partition_size(tail_shape);
  int total_cells = partition_size(shape);

  auto fill_from = [&](const Partition& sh, const std::vector<int>& flat) {
    Tableau t;
    size_t k = 0;
    for (int len : sh) {
      std::vector<int> row;
      for (int j = 0; j < len; ++j) row.push_back(flat[k++]);
      t.rows.push_back(row);
    }
    return t;
  };

  long tail_count = 1, t_count = 1;
  for (int i = 0; i < tail_cells; ++i) tail_count *= N;
  for (int i = 0; i < total_cells; ++i) t_count *= N;

  for (long si = 0; si < tail_count; ++si) {
    std::vector<int> tail_flat(tail_cells);
    long s = si;
    for (int i = 0; i < tail_cells; ++i) {
      tail_flat[i] = static_cast<int>(s % N) + 1;
      s /= N;
    }
    Tableau tail = fill_from(tail_shape, tail_flat);
    for (long ti = 0; ti < t_count; ++ti) {
      std::vector<int> t_flat(total_cells);
      long u = ti;
      for (int i = 0; i < total_cells; ++i) {
        t_flat[i] = static_cast<int>(u % N) + 1;
        u /= N;
      }
      Tableau right = fill_from(shape, t_flat);
      Poly<K> L = poly_zero(ring.field(), ring.nvars());
      for (const auto& tuple : tuples) {
        Tableau left;
        for (int x : tuple) left.rows.push_back({x, bar(x, N)});
        for (const auto& row : tail.rows) left.rows.push_back(row);
        L = L + bideterminant(ring.field(), Bitableau{left, right}, ring.X());
      }
      if (!ring.membership(L)) return false;
    }
  }
  return true;
}

template <class F>
bool verify_L_lemma(const F& field, int N, const Partition& shape,
                    const Subset& C, int a, Budget budget = Budget{}) {
  GradedRing<F> ring(field, IdealSpec{N, MatrixForm::J, Variant::naive}, budget);
  return verify_L_lemma(ring, shape, C, a);
}

// Coordinates of a homogeneous polynomial over a verified standard-pair
// basis, modulo the ideal. Solved blockwise with tagged elimination.
template <class F>
struct NormalForm {
  bool in_span = false;
  std::vector<typename F::Elt> coords;  // aligned with the basis list
};

template <class F>
NormalForm<F> normal_form(GradedRing<F>& ring,
                          const std::vector<Poly<typename F::Elt>>& basis,
                          const Poly<typename F::Elt>& p) {
  using K = typename F::Elt;
  using Key = typename GradedRing<F>::Key;
  const F& field = ring.field();
  NormalForm<F> out;
  out.coords.assign(basis.size(), field(0));
  if (p.is_zero()) {
    out.in_span = true;
    return out;
  }
  int d = p.degree();
  if (!is_homogeneous(p))
    throw std::invalid_argument("normal_form expects a homogeneous input");

  // Group the basis by block.
  std::map<Key, std::vector<int>> basis_in_block;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].degree() != d)
      throw std::invalid_argument("basis element of wrong degree");
    basis_in_block[ring.key_of_poly(basis[i])].push_back(static_cast<int>(i));
  }
  std::map<Key, Poly<K>> parts;
  for (const auto& [mo, c] : p.terms) {
    Poly<K>& comp = parts[ring.key_of_mono(mo)];
    comp.nvars = ring.nvars();
    comp.add_term(mo, c);
  }

  for (auto& [key, comp] : parts) {
    auto lit = ring.blocks(d).find(key);
    if (lit == ring.blocks(d).end())
      throw std::invalid_argument("component outside the slice");
    const auto& lay = lit->second;
    int w = static_cast<int>(lay.monos.size());
    const auto bit = basis_in_block.find(key);
    std::vector<int> locals =
        bit == basis_in_block.end() ? std::vector<int>{} : bit->second;
    int nt = static_cast<int>(locals.size());

    // Tagged forward elimination: ideal rows first (zero tags), then basis.
    std::vector<std::vector<K>> rows, tags;
    std::map<int, int> pivcol;
    auto insert_tagged = [&](std::vector<K> row, std::vector<K> tag) {
      for (int c = 0; c < w; ++c) {
        if (spinlm::is_zero(row[c])) continue;
        auto it = pivcol.find(c);
        if (it == pivcol.end()) {
          K inv = field(1) / row[c];
          for (int j = c; j < w; ++j) row[j] = row[j] * inv;
          for (int j = 0; j < nt; ++j) tag[j] = tag[j] * inv;
          pivcol[c] = static_cast<int>(rows.size());
          rows.push_back(std::move(row));
          tags.push_back(std::move(tag));
          return;
        }
        K f = row[c];
        const auto& pr = rows[it->second];
        const auto& pt = tags[it->second];
        for (int j = c; j < w; ++j) row[j] = row[j] - f * pr[j];
        for (int j = 0; j < nt; ++j) tag[j] = tag[j] - f * pt[j];
      }
    };

    for (auto& r : ring.ideal_rows(d, key))
      insert_tagged(std::move(r), std::vector<K>(nt, field(0)));
    for (int li = 0; li < nt; ++li) {
      std::vector<K> tag(nt, field(0));
      tag[li] = field(1);
      insert_tagged(ring.densify(basis[locals[li]], lay), std::move(tag));
    }

    std::vector<K> row = ring.densify(comp, lay);
    std::vector<K> acc(nt, field(0));
    for (int c = 0; c < w; ++c) {
      if (spinlm::is_zero(row[c])) continue;
      auto it = pivcol.find(c);
      if (it == pivcol.end()) return out;  // not in ideal + basis span
      K f = row[c];
      const auto& pr = rows[it->second];
      const auto& pt = tags[it->second];
      for (int j = c; j < w; ++j) row[j] = row[j] - f * pr[j];
      for (int j = 0; j < nt; ++j) acc[j] = acc[j] + f * pt[j];
    }
    for (int j = 0; j < nt; ++j) out.coords[locals[j]] = acc[j];
  }
  out.in_span = true;
  return out;
}

// Special orthogonal element via the Cayley transform of a pairing-skew
// matrix; retries until I - A is invertible.
template <class F>
DenseMat<typename F::Elt> so_cayley_element(const F& field, Rng& rng, int N,
                                            int max_tries = 64) {
  using K = typename F::Elt;
  DenseMat<K> J = mat_from_pattern(field, j_pattern(N));
  DenseMat<K> I = mat_identity(field, N);
  for (int t = 0; t < max_tries; ++t) {
    DenseMat<K> B = random_matrix(field, rng, N, N);
    DenseMat<K> S = mat_sub(B, mat_transpose(B));
    DenseMat<K> A = mat_mul(J, S);
    DenseMat<K> ImA = mat_sub(I, A);
    auto inv = mat_inverse(field, ImA);
    if (!inv) continue;
    DenseMat<K> g = mat_mul(*inv, mat_add(I, A));
    DenseMat<K> gJg = mat_mul(mat_mul(mat_transpose(g), J), g);
    if (!(gJg == J)) continue;
    if (!(mat_det(field, g) == field(1))) continue;
    return g;
  }
  throw std::runtime_error("no invertible Cayley denominator found");
}

// Substitutes X -> gX and X -> Xg into every spin generator and checks
// membership in the full spin ideal.
template <class F>
bool verify_so_invariance(const F& field, int N, Variant variant,
                          const DenseMat<typename F::Elt>& g, int maxDegree,
                          Budget budget = Budget{}) {
  using K = typename F::Elt;
  if (variant == Variant::naive)
    throw std::invalid_argument("invariance check targets a spin variant");
  DenseMat<K> J = mat_from_pattern(field, j_pattern(N));
  DenseMat<K> gJg = mat_mul(mat_mul(mat_transpose(g), J), g);
  if (!(gJg == J))
    throw std::invalid_argument("matrix does not preserve the pairing");
  if (!(mat_det(field, g) == field(1)))
    throw std::invalid_argument("matrix must have determinant one");
  int m = N / 2;
  if (m > maxDegree) return true;

  GradedRing<F> ring(field, IdealSpec{N, MatrixForm::J, variant}, budget);
  auto left_images = sandwich_images(field, ring.X(), &g, nullptr);
  auto right_images = sandwich_images(field, ring.X(), nullptr, &g);
  for (const SpinPair& sp : spin_pairs(N, MatrixForm::J, variant)) {
    Poly<K> f = minor_poly(field, ring.X(), sp.u, sp.up) +
                scale(minor_poly(field, ring.X(), sp.pu, sp.pup),
                      field(sp.mirror_sign));
    if (!ring.membership(substitute(field, f, left_images))) return false;
    if (!ring.membership(substitute(field, f, right_images))) return false;
  }
  return true;
}

// Injectivity of multiplication by the central 2x2 minor on low slices of
// the size-4 plus quotient.
template <class F>
bool verify_nzd_f(const F& field, int maxDegree, Budget budget = Budget{}) {
  GradedRing<F> ring(field, IdealSpec{4, MatrixForm::J, Variant::plus}, budget);
  Poly<typename F::Elt> f = minor_poly(field, ring.X(), Subset{3, 4}, Subset{3, 4});
  for (int d = 0; d <= maxDegree; ++d)
    if (!ring.multiplication_injective(f, d)) return false;
  return true;
}

struct CharPReport {
  int N = 0;
  Variant variant = Variant::naive;
  int maxDegree = 0;
  std::vector<long> dims_q;
  std::vector<std::pair<uint32_t, std::vector<long>>> dims_p;
  std::vector<std::string> discrepancies;
  bool consistent = true;
};

inline CharPReport compare_char_p(int N, Variant variant,
                                  const std::vector<uint32_t>& primes,
                                  int maxDegree, Budget budget = Budget{}) {
  CharPReport rep;
  rep.N = N;
  rep.variant = variant;
  rep.maxDegree = maxDegree;
  QQ q;
  GradedRing<QQ> ring_q(q, IdealSpec{N, MatrixForm::J, variant}, budget);
  for (int d = 0; d <= maxDegree; ++d) rep.dims_q.push_back(ring_q.quotient_dim(d));
  for (uint32_t p : primes) {
    if (p == 2) throw std::invalid_argument("even characteristic excluded");
    GFp fp(p);
    GradedRing<GFp> ring_p(fp, IdealSpec{N, MatrixForm::J, variant}, budget);
    std::vector<long> dims;
    for (int d = 0; d <= maxDegree; ++d) dims.push_back(ring_p.quotient_dim(d));
    for (int d = 0; d <= maxDegree; ++d) {
      if (dims[d] != rep.dims_q[d]) {
        rep.consistent = false;
        rep.discrepancies.push_back(
            "p=" + std::to_string(p) + " degree " + std::to_string(d) +
            ": dim " + std::to_string(dims[d]) + " vs rational " +
            std::to_string(rep.dims_q[d]));
      }
    }
    rep.dims_p.emplace_back(p, std::move(dims));
  }
  return rep;
}

}  // namespace spinlm

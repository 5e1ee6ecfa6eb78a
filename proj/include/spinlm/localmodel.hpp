#pragma once

// Chart-level derivations for the lattice-chain model: elimination of the
// dependent blocks, reduction to the small matrix system, minors of the
// stacked chart matrix, the two structural propositions relating those
// minors to bideterminants, the lattice wedge basis bookkeeping, and the
// match between chart equations and the quotient-ring presentation.

#include <vector>

#include "spinlm/field.hpp"
#include "spinlm/indexcomb.hpp"
#include "spinlm/linalg.hpp"
#include "spinlm/poly.hpp"
#include "spinlm/rings.hpp"

namespace spinlm {

struct ChartConfig {
  int n = 2;
  int i = 1;
};

void validate_chart(const ChartConfig& cfg);  // 1 <= n, 0 <= i, 2i <= n

using PolyMat = std::vector<std::vector<Poly<Rat>>>;

// Variable layout of the full chart ring: the dependent block M (i x n),
// the dependent block M' ((n-i) x n), the square block N (n x n), then the
// uniformizer as the last variable.
struct ChartRing {
  int n = 0, i = 0;
  int nvars_full = 0;   // i*n + (n-i)*n + n*n + 1
  int nvars_small = 0;  // n*n + 1

  explicit ChartRing(const ChartConfig& cfg);
  int mvar(int r, int c) const;   // 1-based within M
  int mpvar(int r, int c) const;  // 1-based within M'
  int nvar_full(int a, int b) const;
  int pi_full() const;
  int nvar_small(int a, int b) const;
  int pi_small() const;
};

struct LM2Result {
  ChartConfig cfg;
  bool span_match = false;     // product entries span the displayed block forms
  bool solution_kills = false; // the nine eliminations zero the product
  bool ok = false;
  std::vector<PolyMat> identities;  // entries of M_k + H N_k^t H, k = 1..9
};

LM2Result derive_lm2(const ChartConfig& cfg);

struct LM3Result {
  ChartConfig cfg;
  bool forced_ok = false;  // unit bands force the two transition matrices
  // Ideal equality of the residual system and the nine-equation reduced
  // system, certified in both directions by explicit matrix combinations.
  bool targets_from_derived = false;
  bool derived_from_targets = false;
  bool n7n8_determined = false;  // dependent lower blocks have closed forms
  bool ok = false;
};

LM3Result derive_lm3(const ChartConfig& cfg);

// Minor on the given n rows of the 2n x n stack (0 I_{n-i}; N; I_i 0),
// as a polynomial in the small chart ring.
Poly<Rat> a_s_minor(const ChartConfig& cfg, const Subset& S);

struct WedgePropReport {
  ChartConfig cfg;
  long cases = 0;
  bool ok = false;
};

// Every (i+1)-minor of the small matrix occurs, up to sign, as a stack minor
// whose row set is strictly unbalanced.
WedgePropReport verify_prop_wedge(const ChartConfig& cfg);

struct SignPropReport {
  ChartConfig cfg;
  long cases = 0;
  bool bijective = false;
  bool ok = false;
};

// Balanced row sets biject with subset pairs; the stack minor equals the
// bideterminant up to the explicit sign, compatibly with mirroring.
SignPropReport verify_prop_sign(const ChartConfig& cfg);

struct ChartPresentation {
  ChartConfig cfg;
  Variant variant = Variant::naive;
  IdealSpec spec;  // size 2i, second pairing form
  long free_count = 0;
  bool quadratics_match = false;
  bool minors_match = false;
  bool spin_match = false;
  bool ok = false;
};

ChartPresentation build_chart_presentation(const ChartConfig& cfg, Variant variant);

struct WedgeEntry {
  Subset S, Sperp;
  int d_S = 0, d_Sperp = 0;
  int sigma_sign = 1;
  bool self_perp = false;
  bool in_B0 = false;
  int pi_power = 0;       // multiplies f_S on the left of its relation
  int g_S_power = 0;      // power on the leading lattice vector
  int g_Sperp_power = 0;  // power on the mirrored lattice vector
};

struct WedgeBasisReport {
  ChartConfig cfg;
  int sign = +1;
  std::vector<WedgeEntry> entries;
  long b0_size = 0;
  bool pairing_ok = false;    // exactly one of a distinct pair enters B0
  bool involution_ok = false; // mirror swaps d-values and preserves the sign
  bool relation_ok = false;   // f of the mirror is the signed f
  bool ok = false;
};

WedgeBasisReport wedge_lattice_basis(const ChartConfig& cfg, int sign);

// Rank of the small-matrix value at a point of the plain special fiber.
// Throws invalid_argument if the point violates the chart equations.
int rank_stratum_of_point(const ChartConfig& cfg, const DenseMat<Rat>& Nval);

}  // namespace spinlm

#pragma once
// Deterministic randomness for property tests and seeded group elements.

#include <cstdint>
#include <random>

#include "spinlm/field.hpp"
#include "spinlm/linalg.hpp"

namespace spinlm {

constexpr uint64_t kDefaultSeed = 0x5eed5eedULL;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed = kDefaultSeed) : eng(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
};

inline Rat random_scalar(const QQ&, Rng& rng) {
  long num = rng.uniform(-6, 6);
  long den = rng.uniform(1, 3);
  return ratio(num, den);
}

inline Fp random_scalar(const GFp& field, Rng& rng) {
  return field(rng.uniform(0, field.p - 1));
}

template <class F>
DenseMat<typename F::Elt> random_matrix(const F& field, Rng& rng, int nr, int nc) {
  auto m = mat_zero(field, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.at(i, j) = random_scalar(field, rng);
  return m;
}

template <class F>
DenseMat<typename F::Elt> random_invertible(const F& field, Rng& rng, int n) {
  for (int tries = 0; tries < 256; ++tries) {
    auto m = random_matrix(field, rng, n, n);
    if (!is_zero(mat_det(field, m))) return m;
  }
  throw std::runtime_error("random_invertible: persistent singularity");
}

}  // namespace spinlm

#pragma once
// Exact scalars: arbitrary-precision rationals and word-size prime fields.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinlm {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Always-normalized fraction.  mpq_class keeps gcd(num,den)=1, den>0 after
// every arithmetic op; the two-argument constructor is the only entry point
// that needs an explicit canonicalize.
using Rat = mpq_class;

inline Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

constexpr bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of F_p, p an odd prime below 2^31.  Carries its modulus so mixed-p
// arithmetic faults instead of silently wrapping.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;

  Fp() = default;
  Fp(long long n, uint32_t mod) : p(mod) {
    long long r = n % static_cast<long long>(mod);
    if (r < 0) r += mod;
    v = static_cast<uint32_t>(r);
  }

  friend Fp operator+(Fp a, Fp b) {
    a.check(b);
    uint64_t s = static_cast<uint64_t>(a.v) + b.v;
    return Fp::raw(s >= a.p ? s - a.p : s, a.p);
  }
  friend Fp operator-(Fp a, Fp b) {
    a.check(b);
    return Fp::raw(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p);
  }
  friend Fp operator*(Fp a, Fp b) {
    a.check(b);
    return Fp::raw(static_cast<uint64_t>(a.v) * b.v % a.p, a.p);
  }
  Fp operator-() const { return Fp::raw(v == 0 ? 0 : p - v, p); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp::inv of zero");
    // extended Euclid on (v, p)
    int64_t t = 0, newt = 1, r = p, newr = v;
    while (newr != 0) {
      int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (t < 0) t += p;
    return Fp::raw(static_cast<uint64_t>(t), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
  bool is_zero() const { return v == 0; }

  static Fp raw(uint64_t val, uint32_t mod) {
    Fp x;
    x.v = static_cast<uint32_t>(val);
    x.p = mod;
    return x;
  }

 private:
  void check(Fp b) const {
    if (p != b.p) throw std::invalid_argument("Fp: mixed moduli");
  }
};

inline bool is_zero(const Rat& q) { return q == 0; }
inline bool is_zero(const Fp& x) { return x.v == 0; }

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

// Field contexts: the factory objects threaded through every routine that
// has to mint constants.  K alone cannot do that for Fp (needs the modulus).
struct QQ {
  using Elt = Rat;
  Rat operator()(long n) const { return Rat(n); }
  std::string name() const { return "Q"; }
  static constexpr bool modular = false;
  uint32_t characteristic() const { return 0; }
};

struct GFp {
  uint32_t p;
  explicit GFp(uint32_t mod) : p(mod) {
    if (mod < 3 || mod % 2 == 0 || mod >= (1u << 31) || !is_prime_u32(mod))
      throw std::invalid_argument("GFp: modulus must be an odd prime < 2^31");
  }
  using Elt = Fp;
  Fp operator()(long n) const { return Fp(n, p); }
  std::string name() const { return "Fp:" + std::to_string(p); }
  static constexpr bool modular = true;
  uint32_t characteristic() const { return p; }
};

}  // namespace spinlm

#pragma once

// Prime-field helpers: 64-bit modular arithmetic, prime search, roots of
// unity and reduction of cyclotomic numbers to F_p.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo.hpp"

namespace mckay3::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero("inverse of 0 mod p");
  return pow(a, p - 2, p);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// An element of exact multiplicative order n in F_p; requires n | p - 1.
inline u64 root_of_unity(u64 n, u64 p) {
  if ((p - 1) % n != 0) throw InvalidInput("no root of unity of this order mod p");
  const auto factors = nt::prime_factors(static_cast<int>(n));
  for (u64 a = 2; a < p; ++a) {
    u64 z = pow(a, (p - 1) / n, p);
    bool primitive = true;
    for (int q : factors) {
      if (pow(z, n / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return z;
  }
  return 1;  // n == 1
}

// Largest prime p = 1 + t*n below 2^61 with t < t_max.
inline u64 large_prime_1_mod(u64 n, u64 t_max) {
  const u64 limit = (1ULL << 61);
  for (u64 t = std::min(limit / n, t_max); t > 0; --t) {
    u64 p = 1 + t * n;
    if (is_prime(p)) return p;
  }
  throw Error("no prime found");
}

inline u64 reduce_int(const Int& z, u64 p) {
  Int r = z % Int(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return static_cast<u64>(r.get_ui());
}

// Image of a rational in F_p; nullopt when p divides the denominator.
inline std::optional<u64> reduce_rat(const Rat& q, u64 p) {
  u64 den = reduce_int(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mul(reduce_int(q.get_num(), p), inv(den, p), p);
}

// Ring homomorphism Z[zeta_N][1/D] -> F_p sending zeta_N to `zeta`.
class CycReducer {
 public:
  CycReducer(int order, u64 p, u64 zeta) : order_(order), p_(p), powers_(order) {
    u64 z = 1;
    for (int k = 0; k < order; ++k) {
      powers_[k] = z;
      z = mul(z, zeta, p);
    }
  }

  std::optional<u64> operator()(const CycNum& x) const {
    const CycNum y = x.order() == order_ ? x : x.embed(order_);
    u64 acc = 0;
    for (std::size_t k = 0; k < y.coeffs().size(); ++k) {
      if (y.coeffs()[k] == 0) continue;
      auto c = reduce_rat(y.coeffs()[k], p_);
      if (!c) return std::nullopt;
      acc = add(acc, mul(*c, powers_[k], p_), p_);
    }
    return acc;
  }

  u64 prime() const { return p_; }
  int order() const { return order_; }

 private:
  int order_;
  u64 p_;
  std::vector<u64> powers_;
};

}  // namespace mckay3::modp

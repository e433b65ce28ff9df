#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum of order N is stored as the canonical residue of its representing
// polynomial modulo the N-th cyclotomic polynomial, so two numbers of the same
// order are equal iff their coefficient vectors are equal.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mckay3 {

using Int = mpz_class;
using Rat = mpq_class;

namespace nt {

inline long long lcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

inline std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int totient(int n) {
  int phi = n;
  for (int p : prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

inline int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace nt

const std::vector<long long>& cyclotomic_polynomial(int n);

namespace detail {

// Quotient of p by a monic divisor q; the remainder must vanish.
inline std::vector<long long> exact_div_monic(std::vector<long long> p,
                                              const std::vector<long long>& q) {
  const std::size_t dq = q.size() - 1;
  const std::size_t dp = p.size() - 1;
  std::vector<long long> quot(dp - dq + 1, 0);
  for (std::size_t i = dp + 1; i-- > dq;) {
    long long c = p[i];
    if (c == 0) continue;
    quot[i - dq] = c;
    for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
  }
  return quot;
}

inline std::vector<long long> compute_cyclotomic(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d : nt::divisors(n)) {
    if (d == n) continue;
    p = exact_div_monic(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

// Dense rational polynomials, constant term first, used for inversion.
using QPoly = std::vector<Rat>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) return {{}, std::move(a)};
  QPoly q(a.size() - b.size() + 1);
  const Rat lead = b.back();
  const std::size_t shift = b.size() - 1;
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1;
    if (a[i] == 0) continue;
    Rat c = a[i] / lead;
    q[i - shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {std::move(q), std::move(a)};
}

}  // namespace detail

// Cached per order; safe to call concurrently.
inline const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<long long>>> cache;
  if (n < 1) throw InvalidInput("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<const std::vector<long long>>(detail::compute_cyclotomic(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(poly));
  return *it->second;
}

class CycNum {
 public:
  CycNum() = default;
  CycNum(long v) : CycNum(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  CycNum(int v) : CycNum(Rat(v)) {}   // NOLINT(google-explicit-constructor)
  CycNum(const Rat& r) {              // NOLINT(google-explicit-constructor)
    if (r != 0) c_.push_back(r);
  }

  static CycNum zeta(int n, long long k = 1) {
    std::vector<Rat> c(static_cast<std::size_t>(n));
    c[nt::mod(k, n)] = 1;
    return reduce(std::move(c), n);
  }

  // Canonical residue of sum_k coeffs[k] * zeta_n^k.
  static CycNum reduce(std::vector<Rat> coeffs, int n) {
    if (n < 1) throw InvalidInput("cyclotomic order must be positive");
    if (coeffs.size() > static_cast<std::size_t>(n)) {
      for (std::size_t k = n; k < coeffs.size(); ++k) coeffs[k % n] += coeffs[k];
      coeffs.resize(n);
    }
    const auto& phi_poly = cyclotomic_polynomial(n);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t i = coeffs.size(); i-- > deg;) {
      if (coeffs[i] == 0) continue;
      const Rat c = coeffs[i];
      for (std::size_t j = 0; j < deg; ++j) {
        if (phi_poly[j] != 0) coeffs[i - deg + j] -= c * static_cast<long>(phi_poly[j]);
      }
      coeffs[i] = 0;
    }
    if (coeffs.size() > deg) coeffs.resize(deg);
    CycNum out;
    out.order_ = n;
    out.c_ = std::move(coeffs);
    out.trim();
    return out;
  }

  // sum over terms of coeff * zeta_n^exp.
  static CycNum from_terms(int n, std::span<const std::pair<Rat, long long>> terms) {
    std::vector<Rat> c(static_cast<std::size_t>(n));
    for (const auto& [coeff, e] : terms) c[nt::mod(e, n)] += coeff;
    return reduce(std::move(c), n);
  }

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat to_rational() const {
    if (!is_rational()) throw InvalidInput("cyclotomic number is not rational: " + str());
    return c_.empty() ? Rat(0) : c_[0];
  }

  CycNum embed(int n) const {
    if (n % order_ != 0) {
      throw OrderMismatch("cannot embed order " + std::to_string(order_) + " into order " +
                          std::to_string(n));
    }
    if (n == order_) return *this;
    const int step = n / order_;
    std::vector<Rat> c(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * step] = c_[k];
    return reduce(std::move(c), n);
  }

  // Complex conjugation zeta -> zeta^{-1}.
  CycNum conj() const {
    if (is_rational()) return *this;
    std::vector<Rat> c(static_cast<std::size_t>(order_));
    for (std::size_t k = 0; k < c_.size(); ++k) c[(order_ - k) % order_] = c_[k];
    return reduce(std::move(c), order_);
  }

  CycNum inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) {
      CycNum out(1 / c_[0]);
      out.order_ = order_;
      return out;
    }
    const auto& phi_poly = cyclotomic_polynomial(order_);
    detail::QPoly r0;
    for (long long c : phi_poly) r0.emplace_back(static_cast<long>(c));
    detail::QPoly r1 = c_;
    detail::QPoly s0;
    detail::QPoly s1{Rat(1)};
    while (r1.size() > 1) {
      auto [q, r] = detail::divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi_N is irreducible.
    const Rat c = r1.at(0);
    for (auto& x : s1) x /= c;
    return reduce(std::move(s1), order_);
  }

  std::complex<double> to_float() const {
    std::complex<double> z{0.0, 0.0};
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
      z += c_[k].get_d() * std::polar(1.0, angle);
    }
    return z;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::string coeff = c_[k].get_str();
      if (!out.empty()) out += (coeff[0] == '-') ? " - " : " + ";
      else if (coeff[0] == '-') out += "-";
      if (coeff[0] == '-') coeff.erase(0, 1);
      if (k == 0) {
        out += coeff;
      } else {
        if (coeff != "1") out += coeff + "*";
        out += "z" + std::to_string(order_);
        if (k != 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  // Appends a stable serialization of (order, coefficients).
  void append_key(std::string& key) const {
    key += std::to_string(order_);
    key += ':';
    for (const auto& c : c_) {
      key += c.get_str();
      key += ',';
    }
    key += ';';
  }

  friend int common_order(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.order_;
    if (b.order_ % a.order_ == 0) return b.order_;
    if (a.order_ % b.order_ == 0) return a.order_;
    throw OrderMismatch("orders " + std::to_string(a.order_) + " and " +
                        std::to_string(b.order_) + " need an explicit lift");
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    const int n = common_order(a, b);
    if (a.order_ != n) return a.embed(n) + b;
    if (b.order_ != n) return a + b.embed(n);
    CycNum out;
    out.order_ = n;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out.c_[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out.c_[k] += b.c_[k];
    out.trim();
    return out;
  }

  friend CycNum operator-(const CycNum& a) {
    CycNum out = a;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    const int n = common_order(a, b);
    if (a.order_ != n) return a.embed(n) * b;
    if (b.order_ != n) return a * b.embed(n);
    if (a.is_zero() || b.is_zero()) return zero_of(n);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return reduce(std::move(prod), n);
  }

  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  // Equality is field equality: operands are lifted to a common order.
  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    const int n = static_cast<int>(nt::lcm(a.order_, b.order_));
    return a.embed(n).c_ == b.embed(n).c_;
  }

  // Total order on canonical coefficient vectors (after lifting to a common order).
  friend int compare(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
      const int n = static_cast<int>(nt::lcm(a.order_, b.order_));
      return compare(a.embed(n), b.embed(n));
    }
    const std::size_t len = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < len; ++k) {
      const int s = cmp(a.coeff(k), b.coeff(k));
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }

  CycNum scaled(const Rat& r) const {
    if (r == 0) return zero_of(order_);
    CycNum out = *this;
    for (auto& c : out.c_) c *= r;
    return out;
  }

  static CycNum zero_of(int n) {
    CycNum out;
    out.order_ = n;
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  int order_ = 1;
  std::vector<Rat> c_;
};

// Lifts both operands to the order lcm(a.order, b.order).
inline std::pair<CycNum, CycNum> lift_to_lcm(const CycNum& a, const CycNum& b) {
  const int n = static_cast<int>(nt::lcm(a.order(), b.order()));
  return {a.embed(n), b.embed(n)};
}

}  // namespace mckay3

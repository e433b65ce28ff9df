#pragma once

// Finite matrix groups in SL(3, Q(zeta_N)): closure from generators,
// conjugacy classes, power maps, center and exponent.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclo.hpp"
#include "modp.hpp"

namespace mckay3 {

inline constexpr std::size_t kDefaultOrderCap = 10000;

class CMat3 {
 public:
  CMat3() : CMat3(identity()) {}

  // Entries in row-major order; all are lifted to the lcm of their orders.
  explicit CMat3(std::array<CycNum, 9> entries) : e_(std::move(entries)) {
    long long n = 1;
    for (const auto& x : e_) n = nt::lcm(n, x.order());
    order_ = static_cast<int>(n);
    for (auto& x : e_) x = x.embed(order_);
  }

  static CMat3 identity() { return diag(1, 1, 1); }
  static CMat3 diag(const CycNum& a, const CycNum& b, const CycNum& c) {
    return CMat3({a, 0, 0, 0, b, 0, 0, 0, c});
  }
  static CMat3 scalar(const CycNum& c) { return diag(c, c, c); }

  const CycNum& operator()(int r, int c) const { return e_[3 * r + c]; }
  const std::array<CycNum, 9>& entries() const { return e_; }
  int order() const { return order_; }

  CMat3 lifted(int n) const {
    std::array<CycNum, 9> out;
    for (int i = 0; i < 9; ++i) out[i] = e_[i].embed(n);
    return CMat3(std::move(out));
  }

  CMat3 scaled(const CycNum& s) const {
    std::array<CycNum, 9> out;
    for (int i = 0; i < 9; ++i) out[i] = e_[i] * s;
    return CMat3(std::move(out));
  }

  CycNum trace() const { return e_[0] + e_[4] + e_[8]; }

  // Canonical coefficient vectors of the nine entries, row-major.
  std::string key() const {
    std::string k;
    for (const auto& x : e_) x.append_key(k);
    return k;
  }

  friend CMat3 operator*(const CMat3& a, const CMat3& b) {
    std::array<CycNum, 9> out;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        CycNum acc = CycNum::zero_of(1);
        for (int k = 0; k < 3; ++k) {
          const CycNum& x = a(r, k);
          const CycNum& y = b(k, c);
          if (x.is_zero() || y.is_zero()) continue;
          acc += x * y;
        }
        out[3 * r + c] = acc;
      }
    }
    return CMat3(std::move(out));
  }

  friend bool operator==(const CMat3& a, const CMat3& b) {
    for (int i = 0; i < 9; ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }

 private:
  std::array<CycNum, 9> e_;
  int order_ = 1;
};

inline CycNum det(const CMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline CMat3 adjugate(const CMat3& m) {
  auto cof = [&](int r0, int r1, int c0, int c1) {
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  return CMat3({cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2),   //
                -cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2),  //
                cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)});
}

inline CMat3 inverse(const CMat3& m) {
  const CycNum d = det(m);
  if (d.is_zero()) throw DivisionByZero("singular matrix");
  const CMat3 adj = adjugate(m);
  return d == CycNum(1) ? adj : adj.scaled(d.inv());
}

inline bool is_in_SL3(std::span<const CMat3> gens) {
  for (const auto& g : gens)
    if (!(det(g) == CycNum(1))) return false;
  return true;
}

struct ConjClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;
  std::size_t size() const { return members.size(); }
};

// Class index -> class index of the t-th power.
using PowerMap = std::vector<std::size_t>;

class Group {
 public:
  // Breadth-first closure under right multiplication by the generators.
  // Element 0 is the identity; the rest follow in discovery order.
  static Group generate(std::span<const CMat3> gens, std::size_t cap = kDefaultOrderCap) {
    Group g;
    long long n = 1;
    for (const auto& m : gens) n = nt::lcm(n, m.order());
    g.field_order_ = static_cast<int>(n);

    std::vector<CMat3> lifted;
    for (const auto& m : gens) {
      if (det(m).is_zero()) throw InvalidInput("generator is not invertible");
      lifted.push_back(m.lifted(g.field_order_));
    }

    g.elements_.push_back(CMat3::identity().lifted(g.field_order_));
    g.index_.emplace(g.elements_[0].key(), 0);
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      for (const auto& s : lifted) {
        CMat3 y = g.elements_[i] * s;
        std::string k = y.key();
        if (g.index_.contains(k)) continue;
        if (g.elements_.size() >= cap) {
          throw OrderCapExceeded("group order exceeds cap " + std::to_string(cap));
        }
        g.index_.emplace(std::move(k), g.elements_.size());
        g.elements_.push_back(std::move(y));
      }
    }
    for (const auto& s : lifted) g.generators_.push_back(g.index_.at(s.key()));

    g.inverse_.resize(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      g.inverse_[i] = g.index_.at(mckay3::inverse(g.elements_[i]).key());
    }
    g.build_images();
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t identity() const { return 0; }
  const CMat3& element(std::size_t i) const { return elements_[i]; }
  const std::vector<CMat3>& elements() const { return elements_; }
  std::span<const std::size_t> generators() const { return generators_; }
  int field_order() const { return field_order_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }

  std::size_t index_of(const CMat3& m) const {
    auto it = index_.find(m.lifted(field_order_).key());
    if (it == index_.end()) throw InvalidInput("matrix is not a group element");
    return it->second;
  }

  // Products go through a faithful image in GL_3(F_p); the image is checked
  // injective on the enumerated elements, so the lookup is exact.
  std::size_t mul(std::size_t i, std::size_t j) const {
    const auto& a = images_[i];
    const auto& b = images_[j];
    Image c{};
    for (int r = 0; r < 3; ++r) {
      for (int col = 0; col < 3; ++col) {
        modp::u128 acc = 0;
        for (int k = 0; k < 3; ++k) acc += static_cast<modp::u128>(a[3 * r + k]) * b[3 * k + col];
        c[3 * r + col] = static_cast<modp::u64>(acc % prime_);
      }
    }
    auto it = image_index_.find(c);
    if (it == image_index_.end()) throw Error("product left the enumerated group");
    return it->second;
  }

  std::size_t power(std::size_t i, long long t) const {
    if (t < 0) return power(inverse_[i], -t);
    std::size_t result = 0;
    std::size_t base = i;
    while (t > 0) {
      if (t & 1) result = mul(result, base);
      base = mul(base, base);
      t >>= 1;
    }
    return result;
  }

  std::size_t element_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t x = i; x != 0; x = mul(x, i)) ++k;
    return k;
  }

 private:
  using Image = std::array<modp::u64, 9>;
  struct ImageHash {
    std::size_t operator()(const Image& a) const {
      std::size_t h = 0;
      for (auto x : a) h = h * 0x9E3779B97F4A7C15ULL + (x ^ (x >> 29));
      return h;
    }
  };

  void build_images() {
    const auto n = static_cast<modp::u64>(field_order_);
    modp::u64 t_max = ~0ULL;
    for (int attempt = 0; attempt < 64; ++attempt) {
      prime_ = modp::large_prime_1_mod(n, t_max);
      t_max = (prime_ - 1) / n - 1;
      modp::CycReducer red(field_order_, prime_, modp::root_of_unity(n, prime_));
      images_.assign(elements_.size(), Image{});
      image_index_.clear();
      bool ok = true;
      for (std::size_t i = 0; i < elements_.size() && ok; ++i) {
        for (int k = 0; k < 9 && ok; ++k) {
          auto v = red(elements_[i].entries()[k]);
          if (!v) ok = false;
          else images_[i][k] = *v;
        }
        if (ok) ok = image_index_.emplace(images_[i], i).second;
      }
      if (ok) return;
    }
    throw Error("no faithful modular image found");
  }

  std::vector<CMat3> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::unordered_map<std::string, std::size_t> index_;
  int field_order_ = 1;
  modp::u64 prime_ = 0;
  std::vector<Image> images_;
  std::unordered_map<Image, std::size_t, ImageHash> image_index_;
};

// Orbits under conjugation by the generators, ordered by (size, representative),
// where the representative is the smallest member index.
inline std::vector<ConjClass> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjClass> classes;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ConjClass c;
    c.representative = start;
    c.members.push_back(start);
    seen[start] = true;
    for (std::size_t q = 0; q < c.members.size(); ++q) {
      const std::size_t x = c.members[q];
      for (std::size_t s : g.generators()) {
        const std::size_t y = g.mul(g.mul(s, x), g.inverse(s));
        if (!seen[y]) {
          seen[y] = true;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

// Element index -> class index.
inline std::vector<std::size_t> class_lookup(const Group& g, const std::vector<ConjClass>& classes) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t x : classes[c].members) out[x] = c;
  return out;
}

inline PowerMap power_map(const Group& g, const std::vector<ConjClass>& classes, long long t) {
  const auto lookup = class_lookup(g, classes);
  PowerMap pm(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) pm[c] = lookup[g.power(classes[c].representative, t)];
  return pm;
}

inline long long exponent(const Group& g) {
  long long e = 1;
  for (std::size_t i = 0; i < g.order(); ++i) e = nt::lcm(e, static_cast<long long>(g.element_order(i)));
  return e;
}

inline std::vector<std::size_t> center(const Group& g) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

}  // namespace mckay3

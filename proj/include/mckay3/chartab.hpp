#pragma once

// Exact character tables via Dixon-Schneider, and character arithmetic.
//
// Central characters are the common eigenvectors of the class matrices
// M_j[i][k] = a_{jik}. They are split over a prime field F_p with
// p = 1 (mod exponent), and each character value is lifted back to Q(zeta_e)
// by recovering the eigenvalue multiplicities through the power maps.

#include <cstdint>
#include <random>
#include <vector>

#include "group.hpp"
#include "modp.hpp"

namespace mckay3 {

struct ClassFunction {
  std::vector<CycNum> values;

  std::size_t size() const { return values.size(); }
  const CycNum& operator[](std::size_t k) const { return values[k]; }
  CycNum& operator[](std::size_t k) { return values[k]; }

  // Value at the identity class, which must be a rational integer.
  long degree() const {
    const Rat d = values.at(0).to_rational();
    if (d.get_den() != 1) throw InvalidInput("class function has non-integral degree");
    return d.get_num().get_si();
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k] == b[k])) return false;
    return true;
  }
};

// Class sizes and bookkeeping shared by all class functions of one group.
struct ClassData {
  std::size_t group_order = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::size_t> element_orders;
  long long exponent = 1;

  std::size_t count() const { return sizes.size(); }
};

inline ClassData class_data(const Group& g, const std::vector<ConjClass>& classes) {
  ClassData d;
  d.group_order = g.order();
  const auto lookup = class_lookup(g, classes);
  for (const auto& c : classes) {
    d.sizes.push_back(c.size());
    d.inverse_class.push_back(lookup[g.inverse(c.representative)]);
    d.element_orders.push_back(g.element_order(c.representative));
    d.exponent = nt::lcm(d.exponent, static_cast<long long>(d.element_orders.back()));
  }
  return d;
}

// a(i, j, k) = #{(x, y) in C_i x C_j : xy = z} for a fixed z in C_k.
class ClassMultTable {
 public:
  explicit ClassMultTable(std::size_t r) : r_(r), a_(r * r * r, 0) {}
  std::size_t classes() const { return r_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * r_ + j) * r_ + k];
  }
  std::uint32_t& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::uint32_t> a_;
};

inline ClassMultTable class_mult_coeffs(const Group& g, const std::vector<ConjClass>& classes) {
  const std::size_t r = classes.size();
  const auto lookup = class_lookup(g, classes);
  ClassMultTable table(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = classes[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t y = g.mul(g.inverse(x), z);
      ++table.at(lookup[x], lookup[y], k);
    }
  }
  return table;
}

// Least prime p = 1 (mod e) with p > 2 sqrt(|G|).
inline std::uint64_t dixon_prime(long long e, std::size_t group_order) {
  if (e < 1) throw InvalidInput("exponent must be positive");
  for (std::uint64_t p = static_cast<std::uint64_t>(e) + 1;; p += static_cast<std::uint64_t>(e)) {
    if (p * p > 4 * static_cast<std::uint64_t>(group_order) && modp::is_prime(p)) return p;
  }
}

struct CharTable {
  std::vector<ConjClass> classes;
  ClassData data;
  std::vector<ClassFunction> irreducibles;
  std::uint64_t prime = 0;

  std::size_t size() const { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles[i]; }
};

namespace detail {

using modp::u64;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduces `rows` in place; returns pivot columns. Rows become a reduced
// echelon basis of their span.
inline std::vector<std::size_t> rref(Mat& rows, u64 p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const u64 s = modp::inv(rows[rank][c], p);
    for (auto& x : rows[rank]) x = modp::mul(x, s, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = modp::sub(rows[i][k], modp::mul(f, rows[rank][k], p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {x : A x = 0} for a square matrix A.
inline Mat nullspace(Mat a, u64 p) {
  const std::size_t n = a.size();
  auto pivots = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = modp::sub(0, a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
inline Vec charpoly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 pinv = modp::inv(h[m][m - 1], p);
    for (std::size_t k = m + 1; k < n; ++k) {
      const u64 u = modp::mul(h[k][m - 1], pinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = modp::sub(h[k][c], modp::mul(u, h[m][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][m] = modp::add(h[r][m], modp::mul(u, h[r][k], p), p);
    }
  }
  // polys[m] = charpoly of the leading m x m block.
  std::vector<Vec> polys(n + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = modp::add(next[d + 1], prev[d], p);
      next[d] = modp::sub(next[d], modp::mul(h[m - 1][m - 1], prev[d], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = modp::mul(prod, h[i + 1][i], p);
      const u64 coeff = modp::mul(h[i][m - 1], prod, p);
      if (coeff == 0) continue;
      const Vec& q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = modp::sub(next[d], modp::mul(coeff, q[d], p), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

inline u64 eval(const Vec& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = modp::add(modp::mul(acc, x, p), poly[d], p);
  return acc;
}

// Splits the subspace spanned by `basis` (rows, reduced echelon form with the
// given pivots) into eigenspaces of m.
inline std::vector<Mat> split_space(const Mat& basis, const std::vector<std::size_t>& pivots, const Mat& m,
                                    u64 p) {
  const std::size_t d = basis.size();
  const std::size_t r = m.size();
  Mat a(d, Vec(d, 0));  // m w_s = sum_t a[t][s] w_t
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      const Vec& row = m[pivots[t]];
      modp::u128 acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (basis[s][k] != 0) acc = (acc + static_cast<modp::u128>(row[k]) * basis[s][k]) % p;
      }
      a[t][s] = static_cast<u64>(acc);
    }
  }
  const Vec poly = charpoly(a, p);
  std::vector<Mat> parts;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < p; ++lambda) {
    if (eval(poly, lambda, p) != 0) continue;
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
    Mat coords = nullspace(shifted, p);
    Mat vectors;
    for (const auto& u : coords) {
      Vec v(r, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (u[s] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = modp::add(v[k], modp::mul(u[s], basis[s][k], p), p);
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    parts.push_back(std::move(vectors));
  }
  if (total != d) throw SplitFailure("class matrix is not diagonalizable over F_p (p = " + std::to_string(p) + ")");
  return parts;
}

}  // namespace detail

inline constexpr int kSplitRetries = 16;

inline CharTable character_table(const Group& g, std::vector<ConjClass> classes, std::uint64_t seed = 0) {
  using detail::Mat;
  using detail::Vec;
  using modp::u64;

  CharTable table;
  table.data = class_data(g, classes);
  const ClassData& cd = table.data;
  const std::size_t r = classes.size();
  const long long e = cd.exponent;
  const u64 p = dixon_prime(e, g.order());
  table.prime = p;

  const ClassMultTable mult = class_mult_coeffs(g, classes);
  auto class_matrix = [&](const std::vector<u64>& coeffs) {
    Mat m(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      if (coeffs[j] == 0) continue;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
          const u64 a = mult(j, i, k);
          if (a != 0) m[i][k] = modp::add(m[i][k], modp::mul(coeffs[j], a % p, p), p);
        }
    }
    return m;
  };

  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  auto done = [&] {
    for (const auto& s : spaces)
      if (s.size() > 1) return false;
    return true;
  };
  auto refine = [&](const Mat& m) {
    std::vector<Mat> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto pivots = detail::rref(s, p);
      for (auto& part : detail::split_space(s, pivots, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kSplitRetries && !done(); ++attempt) {
    std::vector<u64> coeffs(r);
    for (auto& c : coeffs) c = rng() % p;
    refine(class_matrix(coeffs));
  }
  for (std::size_t j = 0; j < r && !done(); ++j) {
    std::vector<u64> coeffs(r, 0);
    coeffs[j] = 1;
    refine(class_matrix(coeffs));
  }
  if (!done() || spaces.size() != r) {
    throw SplitFailure("eigenspace split did not converge after " + std::to_string(kSplitRetries) +
                       " random combinations and " + std::to_string(r) + " single class matrices");
  }

  // Class of rep^t for t < element order.
  const auto lookup = class_lookup(g, classes);
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t x = 0;
    for (std::size_t t = 0; t < cd.element_orders[k]; ++t) {
      powers[k].push_back(lookup[x]);
      x = g.mul(x, classes[k].representative);
    }
  }

  const u64 zeta = modp::root_of_unity(static_cast<u64>(e), p);
  const u64 order_inv = modp::inv(g.order() % p, p);
  for (const auto& s : spaces) {
    Vec w = s[0];
    const u64 norm = modp::inv(w[0], p);
    for (auto& x : w) x = modp::mul(x, norm, p);

    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 term = modp::mul(modp::mul(w[k], w[cd.inverse_class[k]], p), modp::inv(cd.sizes[k] % p, p), p);
      sum = modp::add(sum, term, p);
    }
    // degree^2 = |G| / sum
    const u64 deg_sq = modp::mul(g.order() % p, modp::inv(sum, p), p);
    (void)order_inv;
    long degree = 0;
    for (long d = 1; static_cast<std::size_t>(d * d) <= g.order(); ++d) {
      if (static_cast<u64>(d * d) % p == deg_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw SplitFailure("could not recover a character degree");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = modp::mul(modp::mul(static_cast<u64>(degree) % p, w[k], p), modp::inv(cd.sizes[k] % p, p), p);

    ClassFunction out;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t o = cd.element_orders[k];
      const u64 zo = modp::pow(zeta, static_cast<u64>(e) / o, p);
      const u64 zo_inv = modp::inv(zo, p);
      const u64 o_inv = modp::inv(o % p, p);
      std::vector<Rat> coeffs(static_cast<std::size_t>(e));
      long total = 0;
      for (std::size_t l = 0; l < o; ++l) {
        u64 acc = 0;
        const u64 step = modp::pow(zo_inv, l, p);
        u64 f = 1;
        for (std::size_t t = 0; t < o; ++t) {
          acc = modp::add(acc, modp::mul(chi[powers[k][t]], f, p), p);
          f = modp::mul(f, step, p);
        }
        const u64 mult_l = modp::mul(acc, o_inv, p);
        if (mult_l > static_cast<u64>(degree)) throw SplitFailure("eigenvalue multiplicity out of range");
        total += static_cast<long>(mult_l);
        coeffs[l * (static_cast<std::size_t>(e) / o)] += static_cast<long>(mult_l);
      }
      if (total != degree) throw SplitFailure("eigenvalue multiplicities do not sum to the degree");
      out.values.push_back(CycNum::reduce(std::move(coeffs), static_cast<int>(e)));
    }
    table.irreducibles.push_back(std::move(out));
  }

  std::sort(table.irreducibles.begin(), table.irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const long da = a.degree();
    const long db = b.degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const int c = compare(a[k], b[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  table.classes = std::move(classes);
  return table;
}

inline CharTable character_table(const Group& g, std::uint64_t seed = 0) {
  return character_table(g, conjugacy_classes(g), seed);
}

inline CycNum inner_product(const ClassData& cd, const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.size() != cd.count() || psi.size() != cd.count()) throw InvalidInput("class function length mismatch");
  CycNum acc;
  for (std::size_t k = 0; k < cd.count(); ++k) {
    auto [a, b] = lift_to_lcm(phi[k], psi[k].conj());
    acc += (a * b).scaled(Rat(static_cast<long>(cd.sizes[k])));
  }
  return acc.scaled(Rat(1, static_cast<unsigned long>(cd.group_order)));
}

inline ClassFunction tensor(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.size() != psi.size()) throw InvalidInput("class function length mismatch");
  ClassFunction out;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    auto [a, b] = lift_to_lcm(phi[k], psi[k]);
    out.values.push_back(a * b);
  }
  return out;
}

inline ClassFunction operator+(const ClassFunction& phi, const ClassFunction& psi) {
  if (phi.size() != psi.size()) throw InvalidInput("class function length mismatch");
  ClassFunction out;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    auto [a, b] = lift_to_lcm(phi[k], psi[k]);
    out.values.push_back(a + b);
  }
  return out;
}

inline ClassFunction conj(const ClassFunction& phi) {
  ClassFunction out;
  for (const auto& v : phi.values) out.values.push_back(v.conj());
  return out;
}

// Multiplicities of the irreducibles in phi; throws unless phi is a character.
inline std::vector<long> decompose(const ClassFunction& phi, const CharTable& table) {
  std::vector<long> m;
  for (const auto& chi : table.irreducibles) {
    const Rat q = inner_product(table.data, phi, chi).to_rational();
    if (q.get_den() != 1 || q < 0) throw InvalidInput("not a character: multiplicity " + q.get_str());
    m.push_back(q.get_num().get_si());
  }
  return m;
}

inline ClassFunction trivial_character(const ClassData& cd) {
  return ClassFunction{std::vector<CycNum>(cd.count(), CycNum(1))};
}

inline ClassFunction regular_character(const ClassData& cd) {
  ClassFunction out{std::vector<CycNum>(cd.count(), CycNum(0))};
  out.values[0] = CycNum(static_cast<long>(cd.group_order));
  return out;
}

// Traces of the class representatives.
inline ClassFunction defining_character(const Group& g, const std::vector<ConjClass>& classes) {
  ClassFunction out;
  for (const auto& c : classes) out.values.push_back(g.element(c.representative).trace());
  return out;
}

// det(rho)(g) = (chi(g)^2 - chi(g^2)) / 2 for a degree-2 character chi.
inline ClassFunction det_char_2dim(const ClassFunction& chi, const PowerMap& square) {
  if (chi.degree() != 2) throw InvalidInput("det_char_2dim needs a degree-2 character");
  ClassFunction out;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    auto [a, b] = lift_to_lcm(chi[k] * chi[k], chi[square[k]]);
    CycNum v = (a - b).scaled(Rat(1, 2));
    if (!((v * v.conj()) == CycNum(1))) throw InvalidInput("determinant is not a linear character");
    out.values.push_back(std::move(v));
  }
  return out;
}

inline std::vector<std::size_t> kernel_classes(const ClassFunction& chi) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < chi.size(); ++k)
    if (chi[k] == chi[0]) out.push_back(k);
  return out;
}

inline bool is_faithful(const ClassFunction& chi) { return kernel_classes(chi).size() == 1; }

}  // namespace mckay3

#pragma once

// McKay quivers: a_ij = (chi_i, chi_j * chi_V) arrows i -> j.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chartab.hpp"

namespace mckay3 {

using IntMatrix = std::vector<std::vector<long>>;

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label = "plain";
};

struct Quiver {
  std::vector<long> degrees;  // one per vertex
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const { return degrees.size(); }

  IntMatrix adjacency() const {
    IntMatrix a(vertex_count(), std::vector<long>(vertex_count(), 0));
    for (const auto& x : arrows) ++a[x.source][x.target];
    return a;
  }

  // Arrows in row-major order of the matrix; every arrow is "plain".
  static Quiver from_adjacency(const IntMatrix& a, std::vector<long> degrees = {}) {
    Quiver q;
    q.degrees = degrees.empty() ? std::vector<long>(a.size(), 1) : std::move(degrees);
    if (q.degrees.size() != a.size()) throw InvalidInput("degree list does not match matrix size");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != a.size()) throw InvalidInput("adjacency matrix is not square");
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] < 0) throw InvalidInput("negative arrow count");
        for (long c = 0; c < a[i][j]; ++c) q.arrows.push_back({i, j, "plain"});
      }
    }
    return q;
  }

  void validate() const {
    for (const auto& x : arrows)
      if (x.source >= vertex_count() || x.target >= vertex_count()) throw InvalidInput("arrow endpoint out of range");
  }
};

namespace detail {

// Integer coefficient vector of an algebraic integer in the power basis.
inline std::vector<long long> integral_coeffs(const CycNum& x, int order) {
  const CycNum y = x.embed(order);
  std::vector<long long> out(y.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Rat& c = y.coeffs()[k];
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw InvalidInput("character value is not an algebraic integer");
    out[k] = c.get_num().get_si();
  }
  return out;
}

// Tr_{Q(zeta_L)/Q}(zeta_L^m) is the Ramanujan sum c_L(m).
inline std::vector<long long> ramanujan_sums(int L) {
  std::vector<long long> out(L);
  const long long phi_l = nt::totient(L);
  for (int m = 0; m < L; ++m) {
    const int g = std::gcd(m, L);
    const int q = L / g;
    out[m] = nt::moebius(q) * phi_l / nt::totient(q);
  }
  return out;
}

// Product of integral power-basis vectors reduced modulo Phi_L, padded to
// phi(L) entries.
inline std::vector<long long> int_mul_mod(const std::vector<long long>& x, const std::vector<long long>& y, int L) {
  const auto& phi = cyclotomic_polynomial(L);
  const std::size_t deg = phi.size() - 1;
  std::vector<long long> prod(std::max(x.size() + y.size(), deg + 1), 0);
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (x[m] == 0) continue;
    for (std::size_t n = 0; n < y.size(); ++n) prod[m + n] += x[m] * y[n];
  }
  for (std::size_t i = prod.size() - 1; i >= deg; --i) {
    const long long c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) prod[i - deg + j] -= c * phi[j];
  }
  prod.resize(deg);
  return prod;
}

}  // namespace detail

// Adjacency via exact traces of integral power-basis coefficients:
// |G| phi(L) a_ij = sum_k |C_k| Tr(chi_i(k) * conj(chi_j(k) chi_V(k))).
inline IntMatrix mckay_adjacency(const CharTable& table, const ClassFunction& chi_v) {
  const std::size_t r = table.size();
  const std::size_t nc = table.data.count();
  if (chi_v.size() != nc) throw InvalidInput("defining character has the wrong length");
  int L = static_cast<int>(table.data.exponent);
  for (const auto& v : chi_v.values) L = static_cast<int>(nt::lcm(L, v.order()));
  const auto tr = detail::ramanujan_sums(L);

  // conj(chi_j(k)) = chi_j(k^-1). Tr(x * y) = sum_m x_m w_m with
  // w_m = sum_n y_n c_L(m + n), built once per (j, k).
  const auto phi_l = static_cast<std::size_t>(nt::totient(L));
  std::vector<std::vector<long long>> cv(nc);
  for (std::size_t k = 0; k < nc; ++k) cv[k] = detail::integral_coeffs(chi_v[k].conj(), L);
  std::vector<std::vector<std::vector<long long>>> left(r), weights(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < nc; ++k) left[i].push_back(detail::integral_coeffs(table[i][k], L));
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < nc; ++k) {
      const auto y = detail::int_mul_mod(left[j][table.data.inverse_class[k]], cv[k], L);
      std::vector<long long> w(phi_l, 0);
      for (std::size_t n = 0; n < y.size(); ++n) {
        if (y[n] == 0) continue;
        for (std::size_t m = 0; m < w.size(); ++m) w[m] += y[n] * tr[(m + n) % L];
      }
      weights[j].push_back(std::move(w));
    }
  }
  const __int128 denom = static_cast<__int128>(table.data.group_order) * nt::totient(L);
  IntMatrix adj(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      __int128 s = 0;
      for (std::size_t k = 0; k < nc; ++k) {
        const auto& x = left[i][k];
        const auto& w = weights[j][k];
        __int128 t = 0;
        for (std::size_t m = 0; m < x.size(); ++m) t += static_cast<__int128>(x[m]) * w[m];
        s += t * static_cast<__int128>(table.data.sizes[k]);
      }
      if (s % denom != 0 || s < 0) throw InvalidInput("inner product is not a non-negative integer");
      adj[i][j] = static_cast<long>(s / denom);
    }
  }
  return adj;
}

// Reference route straight through cyclotomic inner products.
inline IntMatrix mckay_adjacency_reference(const CharTable& table, const ClassFunction& chi_v) {
  const std::size_t r = table.size();
  IntMatrix adj(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    const ClassFunction prod = tensor(table[j], chi_v);
    for (std::size_t i = 0; i < r; ++i) {
      const Rat q = inner_product(table.data, table[i], prod).to_rational();
      if (q.get_den() != 1 || q < 0) throw InvalidInput("inner product is not a non-negative integer");
      adj[i][j] = q.get_num().get_si();
    }
  }
  return adj;
}

inline std::vector<long> degrees(const CharTable& table) {
  std::vector<long> d;
  for (const auto& chi : table.irreducibles) d.push_back(chi.degree());
  return d;
}

inline Quiver mckay_quiver(const CharTable& table, const ClassFunction& chi_v) {
  return Quiver::from_adjacency(mckay_adjacency(table, chi_v), degrees(table));
}

// Quiver of G <= GL_2 embedded in SL_3 by g -> diag(g, det(g)^{-1}).
// Arrows coming from the det^{-1} summand are labelled "det".
inline Quiver gl2_embed(const CharTable& table, const ClassFunction& chi_rho, const PowerMap& square) {
  if (chi_rho.degree() != 2) throw InvalidInput("gl2_embed needs a degree-2 character");
  if (!is_faithful(chi_rho)) throw InvalidInput("gl2_embed needs a faithful character");
  const ClassFunction delta_bar = conj(det_char_2dim(chi_rho, square));
  const IntMatrix plain = mckay_adjacency(table, chi_rho);
  const IntMatrix det = mckay_adjacency(table, delta_bar);
  Quiver q;
  q.degrees = degrees(table);
  for (std::size_t i = 0; i < plain.size(); ++i) {
    for (std::size_t j = 0; j < plain.size(); ++j) {
      for (long c = 0; c < plain[i][j]; ++c) q.arrows.push_back({i, j, "plain"});
      for (long c = 0; c < det[i][j]; ++c) q.arrows.push_back({i, j, "det"});
    }
  }
  return q;
}

inline std::size_t loops(const Quiver& q) {
  return static_cast<std::size_t>(
      std::count_if(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.source == a.target; }));
}

// Unordered pairs of opposite arrows between distinct vertices.
inline std::size_t two_cycles(const Quiver& q) {
  const IntMatrix a = q.adjacency();
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) n += static_cast<std::size_t>(a[i][j] * a[j][i]);
  return n;
}

inline bool strongly_connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return true;
  auto reach_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows) {
        const std::size_t from = forward ? a.source : a.target;
        const std::size_t to = forward ? a.target : a.source;
        if (from == v && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach_all(true) && reach_all(false);
}

inline std::string export_dot(const Quiver& q, const std::vector<std::size_t>& cut = {}) {
  const std::set<std::size_t> in_cut(cut.begin(), cut.end());
  std::ostringstream out;
  out << "digraph Q {\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << v << " (" << q.degrees[v] << ")\"];\n";
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    out << "  " << a.source << " -> " << a.target;
    std::vector<std::string> attrs;
    if (in_cut.contains(i)) attrs.push_back("color=red");
    if (a.label == "det") attrs.push_back("style=dashed");
    else if (a.label != "plain") attrs.push_back("label=\"" + a.label + "\"");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string adjacency_csv(const IntMatrix& a) {
  std::ostringstream out;
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace mckay3

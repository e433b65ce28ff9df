#pragma once

// Abelian (diagonal) subgroups of SL_3: the kernel lattice L of Z^2 -> G^,
// its column Hermite normal form B, the extension B', type vectors gamma with
// gamma * B' = 0 (mod n), and the torus quiver Z^2 / L.

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

#include "quiver.hpp"

namespace mckay3 {

// Columns (b11, 0) and (b12, b22) span the lattice.
struct LatticeSpec {
  long long b11 = 1;
  long long b12 = 0;
  long long b22 = 1;

  long long n() const { return b11 * b22; }
  bool is_normalized() const { return b11 > 0 && b22 > 0 && 0 <= b12 && b12 < b11; }
  LatticeSpec normalized() const { return {b11, nt::mod(b12, b11), b22}; }
  std::array<std::array<long long, 2>, 2> matrix() const { return {{{b11, b12}, {0, b22}}}; }
  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

using TypeVector = std::array<long long, 3>;
using IntMatrix3 = std::array<std::array<long long, 3>, 3>;

// Column HNF of the lattice spanned by the columns of m (m[row][col]).
inline LatticeSpec hnf(const std::array<std::array<long long, 2>, 2>& m) {
  const long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw InvalidInput("singular lattice basis");
  // Extended gcd on the bottom row.
  long long y1 = m[1][0], y2 = m[1][1];
  long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (y2 != 0) {
    const long long q = y1 / y2;
    std::tie(y1, y2) = std::make_pair(y2, y1 - q * y2);
    std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
    std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
  }
  if (y1 < 0) {
    y1 = -y1;
    u0 = -u0;
    v0 = -v0;
  }
  const long long b22 = y1;
  const long long b11 = (det < 0 ? -det : det) / b22;
  const long long x = u0 * m[0][0] + v0 * m[0][1];
  return {b11, nt::mod(x, b11), b22};
}

// An abelian group Z/m1 x Z/m2 (m1 | m2; cyclic when m1 = 1) and the weights
// of rho_1, rho_2 as elements of it. rho_3 = -(w1 + w2) is implied.
struct AbelianDatum {
  long long m1 = 1;
  long long m2 = 1;
  std::array<long long, 2> w1{0, 0};
  std::array<long long, 2> w2{0, 0};

  long long order() const { return m1 * m2; }
  std::array<long long, 2> w3() const { return {nt::mod(-w1[0] - w2[0], m1), nt::mod(-w1[1] - w2[1], m2)}; }
};

inline AbelianDatum cyclic_datum(long long n, long long a, long long b) {
  if (n < 1) throw InvalidInput("group order must be positive");
  return {1, n, {0, nt::mod(a, n)}, {0, nt::mod(b, n)}};
}

// Kernel of (x, y) -> x w1 + y w2. The weights must generate the group and,
// when w3 is given, satisfy w1 + w2 + w3 = 0.
inline LatticeSpec lattice_from_weights(const AbelianDatum& d,
                                        const std::optional<std::array<long long, 2>>& w3 = std::nullopt) {
  if (d.m1 < 1 || d.m2 < 1 || d.m2 % d.m1 != 0) throw InvalidInput("invariant factors must satisfy m1 | m2");
  if (w3) {
    if (nt::mod(d.w1[0] + d.w2[0] + (*w3)[0], d.m1) != 0 || nt::mod(d.w1[1] + d.w2[1] + (*w3)[1], d.m2) != 0)
      throw InvalidInput("weights do not sum to zero");
  }
  const long long n = d.order();
  auto in_kernel = [&](long long x, long long y) {
    return nt::mod(x * d.w1[0] + y * d.w2[0], d.m1) == 0 && nt::mod(x * d.w1[1] + y * d.w2[1], d.m2) == 0;
  };
  long long b11 = 0;
  for (long long x = 1; x <= n && b11 == 0; ++x)
    if (in_kernel(x, 0)) b11 = x;
  long long b22 = 0, b12 = 0;
  for (long long y = 1; y <= n && b22 == 0; ++y) {
    for (long long x = 0; x < b11; ++x) {
      if (in_kernel(x, y)) {
        b22 = y;
        b12 = x;
        break;
      }
    }
  }
  const LatticeSpec spec{b11, b12, b22};
  if (spec.n() != n) throw InvalidInput("weights do not generate the group (representation not faithful)");
  return spec;
}

inline IntMatrix3 b_prime(const LatticeSpec& b) {
  return {{{b.b11, b.b12, 1}, {0, b.b22, 1}, {0, 0, 1}}};
}

inline bool gamma_valid(const LatticeSpec& b, const TypeVector& g) {
  const long long n = b.n();
  if (g[0] < 1 || g[1] < 1 || g[2] < 1 || g[0] + g[1] + g[2] != n) return false;
  const IntMatrix3 bp = b_prime(b);
  for (int c = 0; c < 3; ++c) {
    long long s = 0;
    for (int r = 0; r < 3; ++r) s += g[r] * bp[r][c];
    if (nt::mod(s, n) != 0) return false;
  }
  return true;
}

// Lexicographically least positive gamma with gamma * B' = 0 (mod n).
inline std::optional<TypeVector> gamma_search(const LatticeSpec& b) {
  const long long n = b.n();
  for (long long g1 = 1; g1 <= n - 2; ++g1) {
    if (nt::mod(g1 * b.b11, n) != 0) continue;
    for (long long g2 = 1; g1 + g2 <= n - 1; ++g2) {
      const TypeVector g{g1, g2, n - g1 - g2};
      if (gamma_valid(b, g)) return g;
    }
  }
  return std::nullopt;
}

// Vertices are coset representatives (x, y), 0 <= x < b11, 0 <= y < b22,
// numbered y * b11 + x. Each vertex has arrows along e1, e2, e3 = -e1 - e2.
inline Quiver torus_quiver(const LatticeSpec& spec) {
  const LatticeSpec b = spec.normalized();
  auto index = [&](long long x, long long y) {
    const long long yr = nt::mod(y, b.b22);
    const long long k = (y - yr) / b.b22;
    const long long xr = nt::mod(x - k * b.b12, b.b11);
    return static_cast<std::size_t>(yr * b.b11 + xr);
  };
  Quiver q;
  q.degrees.assign(static_cast<std::size_t>(b.n()), 1);
  for (long long y = 0; y < b.b22; ++y) {
    for (long long x = 0; x < b.b11; ++x) {
      const std::size_t v = index(x, y);
      q.arrows.push_back({v, index(x + 1, y), "e1"});
      q.arrows.push_back({v, index(x, y + 1), "e2"});
      q.arrows.push_back({v, index(x - 1, y - 1), "e3"});
    }
  }
  return q;
}

enum class Family { dihedral, tetra, octa, icosa };

inline Family parse_family(const std::string& s) {
  if (s == "dihedral") return Family::dihedral;
  if (s == "tetra" || s == "tetrahedral") return Family::tetra;
  if (s == "octa" || s == "octahedral") return Family::octa;
  if (s == "icosa" || s == "icosahedral") return Family::icosa;
  throw InvalidInput("unknown family '" + s + "'");
}

// Folding lattices and type vectors for central extensions of the polyhedral
// groups. B is returned as stated, not normalized.
inline std::pair<LatticeSpec, TypeVector> type_b_lattice(Family f, long long m, long long lp = 0) {
  if (m == 1) throw InvalidInput("m = 1 is the self-dual / loop case");
  if (m < 1) throw InvalidInput("m must be at least 2");
  switch (f) {
    case Family::dihedral: {
      if (lp < 2) throw InvalidInput("dihedral family needs l' >= 2");
      const long long up = (lp + 1) / 2, down = lp / 2;
      return {{m, up, lp}, {lp, up * (m - 1), down * (m - 1)}};
    }
    case Family::tetra:
      return {{m, 1, 2}, {2, m - 1, m - 1}};
    case Family::octa:
      return {{m, 2, 4}, {4, 2 * m - 2, 2 * m - 2}};
    case Family::icosa:
      return {{m, 4, 7}, {7, 4 * m - 4, 3 * m - 3}};
  }
  throw InvalidInput("unknown family");
}

}  // namespace mckay3

#pragma once

// Group constructors for the SL_3 families, adjacency fixtures for the
// exceptional types, the cut-existence predicate and permutation matching of
// adjacency matrices.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutsolve.hpp"
#include "typea.hpp"

namespace mckay3 {

// Row-major 2x2 matrix.
using CMat2 = std::array<CycNum, 4>;

// g -> diag(g, det(g)^{-1}).
inline CMat3 sl3_embed(const CMat2& g) {
  auto lcm_mul = [](const CycNum& a, const CycNum& b) {
    auto [x, y] = lift_to_lcm(a, b);
    return x * y;
  };
  auto [p, q] = lift_to_lcm(lcm_mul(g[0], g[3]), lcm_mul(g[1], g[2]));
  const CycNum d = p - q;
  if (d.is_zero()) throw InvalidInput("singular 2x2 generator");
  return CMat3({g[0], g[1], 0, g[2], g[3], 0, 0, 0, d.inv()});
}

inline std::vector<CMat3> sl3_embed_gl2(const std::vector<CMat2>& gens) {
  std::vector<CMat3> out;
  for (const auto& g : gens) out.push_back(sl3_embed(g));
  return out;
}

struct GroupSpec {
  std::string type;  // A, B-dihedral, B-tetra, B-octa, B-icosa, C, D, E ... L
  std::vector<std::pair<std::string, long long>> params;
  std::vector<CMat3> generators;
  std::size_t declared_order = 0;  // 0 when not known in advance
  std::string name;

  std::optional<long long> param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return std::nullopt;
  }
  long long param_or(const std::string& key, long long fallback) const { return param(key).value_or(fallback); }
  bool is_type_b() const { return type.rfind("B-", 0) == 0; }
};

namespace gens {

inline CycNum z(int n, long long k = 1) { return CycNum::zeta(n, k); }

// Quadratic surds as Gauss sums.
inline CycNum i_sqrt3() { return z(3) - z(3, 2); }
inline CycNum sqrt5() { return z(5) + z(5, 4) - z(5, 2) - z(5, 3); }
// i sqrt(7)
inline CycNum sqrt_m7() { return z(7) + z(7, 2) + z(7, 4) - z(7, 3) - z(7, 5) - z(7, 6); }
inline CycNum sqrt_m15() {
  auto [a, b] = lift_to_lcm(i_sqrt3(), sqrt5());
  return a * b;
}

inline CMat3 s() { return CMat3::diag(1, z(3), z(3, 2)); }
inline CMat3 t() { return CMat3({0, 1, 0, 0, 0, 1, 1, 0, 0}); }
inline CMat3 v() {
  return CMat3({1, 1, 1, 1, z(3), z(3, 2), 1, z(3, 2), z(3)}).scaled(i_sqrt3().inv());
}
inline CMat3 u() { return CMat3::diag(z(9, 2), z(9, 2), z(9, 5)); }
inline CMat3 p() {
  return CMat3({1, 1, z(3, 2), 1, z(3), z(3), z(3), 1, z(3)}).scaled(i_sqrt3().inv());
}
inline CMat3 h1() { return CMat3::diag(1, z(5, 4), z(5)); }
inline CMat3 h2() { return CMat3({-1, 0, 0, 0, 0, -1, 0, -1, 0}); }
inline CMat3 h3() {
  const CycNum c23 = z(5, 2) + z(5, 3);
  const CycNum c14 = z(5) + z(5, 4);
  return CMat3({1, 1, 1, 2, c23, c14, 2, c14, c23}).scaled(sqrt5().inv());
}
inline CMat3 i1() { return CMat3::diag(z(7), z(7, 2), z(7, 4)); }
inline CMat3 i2() {
  const CycNum a = z(7, 4) - z(7, 3);
  const CycNum b = z(7, 2) - z(7, 5);
  const CycNum c = z(7) - z(7, 6);
  // The branch -i sqrt(7) of sqrt(-7) is the one with det(i2) = 1.
  return CMat3({a, b, c, b, c, a, c, a, b}).scaled(-sqrt_m7().inv());
}
inline CMat3 eps3() { return CMat3::scalar(z(3)); }
inline CMat3 w() {
  const CycNum a1 = (CycNum(-1) + sqrt_m15()).scaled(Rat(1, 4));
  const CycNum a2 = a1.conj();
  const CycNum c23 = z(5, 2) + z(5, 3);
  const CycNum c14 = z(5) + z(5, 4);
  return CMat3({1, a1, a1, a2 * 2, c23, c14, a2 * 2, c14, c23}).scaled(sqrt5().inv());
}

// 2x2 building blocks.
inline CMat2 diag2(const CycNum& a, const CycNum& b) { return {a, 0, 0, b}; }
inline CMat2 antidiag2(const CycNum& a, const CycNum& b) { return {0, a, b, 0}; }
inline CycNum mul_lcm(const CycNum& a, const CycNum& b) {
  auto [x, y] = lift_to_lcm(a, b);
  return x * y;
}
inline CMat2 scaled2(const CMat2& m, const CycNum& c) {
  return {mul_lcm(m[0], c), mul_lcm(m[1], c), mul_lcm(m[2], c), mul_lcm(m[3], c)};
}
inline CMat2 scalar2(const CycNum& c) { return diag2(c, c); }

// Quaternion units 1, i, j, k as 2x2 complex matrices.
inline CMat2 quat(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d) {
  int n = 4;
  for (const auto* x : {&a, &b, &c, &d}) n = static_cast<int>(nt::lcm(n, x->order()));
  const CycNum i = z(n, n / 4);
  const CycNum A = a.embed(n), B = b.embed(n), C = c.embed(n), D = d.embed(n);
  return {A + B * i, C + D * i, -C + D * i, A - B * i};
}
inline CMat2 bt_i() { return quat(0, 1, 0, 0); }
inline CMat2 bt_q() {
  const Rat h(1, 2);
  return quat(h, h, h, h);
}
inline CMat2 bo_r() { return diag2(z(8), z(8, 7)); }
inline CMat2 bi_r() {
  const CycNum s5 = sqrt5();
  const CycNum phi = (CycNum(1) + s5).scaled(Rat(1, 2));
  const CycNum phi_inv = (s5 - CycNum(1)).scaled(Rat(1, 2));
  return quat(phi.scaled(Rat(1, 2)), phi_inv.scaled(Rat(1, 2)), Rat(1, 2), 0);
}

inline long long pow_ll(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace gens

inline const std::vector<std::string>& exceptional_types() {
  static const std::vector<std::string> types{"E", "F", "G", "H", "I", "J", "K", "L"};
  return types;
}

inline GroupSpec exceptional(const std::string& type) {
  using namespace gens;
  static const std::map<std::string, std::size_t> orders{{"E", 108}, {"F", 216}, {"G", 648}, {"H", 60},
                                                         {"I", 168}, {"J", 180}, {"K", 504}, {"L", 1080}};
  GroupSpec spec;
  spec.type = type;
  spec.name = "type " + type;
  if (type == "E") spec.generators = {s(), t(), v()};
  else if (type == "F") spec.generators = {s(), v(), t(), p()};
  else if (type == "G") spec.generators = {s(), v(), t(), u()};
  else if (type == "H") spec.generators = {h1(), h2(), h3()};
  else if (type == "I") spec.generators = {i1(), i2(), t()};
  else if (type == "J") spec.generators = {h1(), h2(), h3(), eps3()};
  else if (type == "K") spec.generators = {i1(), i2(), t(), eps3()};
  else if (type == "L") spec.generators = {h1(), h2(), h3(), eps3(), w()};
  else throw InvalidInput("unknown exceptional type '" + type + "'");
  spec.declared_order = orders.at(type);
  return spec;
}

// The imprimitive groups <s, t> (type C) and <s, t, v^2> (type D).
inline GroupSpec type_c() {
  GroupSpec spec{"C", {}, {gens::s(), gens::t()}, 27, "<s,t>"};
  return spec;
}

inline GroupSpec type_d() {
  const CMat3 v = gens::v();
  GroupSpec spec{"D", {}, {gens::s(), gens::t(), v * v}, 54, "<s,t,v^2>"};
  return spec;
}

// Z/m1 x Z/m2 acting diagonally with weights w1, w2 and w3 = -(w1 + w2).
inline GroupSpec type_a(const AbelianDatum& d) {
  if (d.m1 < 1 || d.m2 < 1 || d.m2 % d.m1 != 0) throw InvalidInput("invariant factors must satisfy m1 | m2");
  const auto w3 = d.w3();
  GroupSpec spec;
  spec.type = "A";
  spec.params = {{"m1", d.m1}, {"m2", d.m2}, {"w1a", d.w1[0]}, {"w1b", d.w1[1]}, {"w2a", d.w2[0]}, {"w2b", d.w2[1]}};
  const auto m1 = static_cast<int>(d.m1), m2 = static_cast<int>(d.m2);
  if (d.m1 > 1) spec.generators.push_back(CMat3::diag(gens::z(m1, d.w1[0]), gens::z(m1, d.w2[0]), gens::z(m1, w3[0])));
  spec.generators.push_back(CMat3::diag(gens::z(m2, d.w1[1]), gens::z(m2, d.w2[1]), gens::z(m2, w3[1])));
  spec.declared_order = static_cast<std::size_t>(d.order());
  spec.name = d.m1 == 1 ? "C" + std::to_string(d.m2) : "C" + std::to_string(d.m1) + "xC" + std::to_string(d.m2);
  return spec;
}

inline AbelianDatum abelian_datum(const GroupSpec& spec) {
  if (spec.type != "A") throw InvalidInput("not a type A spec");
  auto need = [&](const char* k) {
    auto v = spec.param(k);
    if (!v) throw InvalidInput(std::string("type A spec is missing parameter ") + k);
    return *v;
  };
  return {need("m1"), need("m2"), {need("w1a"), need("w1b")}, {need("w2a"), need("w2b")}};
}

// Minimal dihedral groups, extended by mu_l = eps_l * I_2.
//   n odd:       H_{2n,k}   (k >= 1; k = 2 is binary dihedral)
//   n >= 4 even: H_{2n,k,variant} (variant 1: k >= 1; variant 2: k >= 0, k = 0 binary dihedral)
//   n = 2:       H_{4,k}    (k >= 0)
inline GroupSpec type_b_dihedral(long long n, long long k, long long variant = 0, long long l = 1) {
  using namespace gens;
  if (n < 2 || l < 1) throw InvalidInput("dihedral family needs n >= 2 and l >= 1");
  std::vector<CMat2> g;
  const int N = static_cast<int>(n);
  if (n % 2 == 1) {
    if (k < 1) throw InvalidInput("odd n needs k >= 1");
    const int e = static_cast<int>(pow_ll(2, k));
    g = {diag2(z(N), z(N, -1)), antidiag2(z(e), z(e))};
    variant = 0;
  } else if (n >= 4) {
    const int e = static_cast<int>(pow_ll(2, k + 1));
    if (variant == 1) {
      if (k < 1) throw InvalidInput("variant 1 needs k >= 1");
      g = {scaled2(diag2(z(2 * N), z(2 * N, -1)), z(e)), antidiag2(z(4), z(4))};
    } else if (variant == 2) {
      if (k < 0) throw InvalidInput("variant 2 needs k >= 0");
      g = {diag2(z(2 * N), z(2 * N, -1)), scaled2(antidiag2(z(4), z(4)), z(e))};
    } else {
      throw InvalidInput("even n >= 4 needs variant 1 or 2");
    }
  } else {
    if (k < 0) throw InvalidInput("n = 2 needs k >= 0");
    const int e = static_cast<int>(pow_ll(2, k + 1));
    g = {diag2(z(4), z(4, -1)), scaled2(antidiag2(z(4), z(4)), z(e))};
    variant = 0;
  }
  if (l > 1) g.push_back(scalar2(z(static_cast<int>(l))));
  GroupSpec spec;
  spec.type = "B-dihedral";
  spec.params = {{"n", n}, {"k", k}, {"variant", variant}, {"l", l}};
  spec.generators = sl3_embed_gl2(g);
  spec.name = "H(2n=" + std::to_string(2 * n) + ",k=" + std::to_string(k) +
              (variant ? ",v=" + std::to_string(variant) : "") + ")" + (l > 1 ? "*mu" + std::to_string(l) : "");
  return spec;
}

// Tetrahedral minimal groups H_k = mu_{3^k} {lambda_k(a) a : a in BT}, where
// lambda_k sends the class of q in BT/[BT,BT] to eps_{3^{k+1}}. With
// binary = true the binary tetrahedral group itself.
inline GroupSpec type_b_tetra(long long k, long long l = 1, bool binary = false) {
  using namespace gens;
  if (k < 0 || l < 1) throw InvalidInput("tetrahedral family needs k >= 0 and l >= 1");
  std::vector<CMat2> g;
  if (binary) {
    g = {bt_i(), bt_q()};
  } else {
    g = {bt_i(), scaled2(bt_q(), z(static_cast<int>(pow_ll(3, k + 1))))};
    if (k > 0) g.push_back(scalar2(z(static_cast<int>(pow_ll(3, k)))));
  }
  if (l > 1) g.push_back(scalar2(z(static_cast<int>(l))));
  GroupSpec spec;
  spec.type = "B-tetra";
  spec.params = {{"k", k}, {"l", l}, {"binary", binary ? 1 : 0}};
  spec.generators = sl3_embed_gl2(g);
  if (l == 1) spec.declared_order = binary ? 24 : static_cast<std::size_t>(24 * pow_ll(3, k));
  spec.name = binary ? "BT" : "tetra H_" + std::to_string(k);
  if (l > 1) spec.name += "*mu" + std::to_string(l);
  return spec;
}

// Octahedral minimal groups H_k = mu_{2^k} {lambda_k(a) a : a in BO}, lambda_k
// sending the non-trivial class of BO/[BO,BO] to eps_{2^{k+1}}.
inline GroupSpec type_b_octa(long long k, long long l = 1, bool binary = false) {
  using namespace gens;
  if (k < 0 || l < 1) throw InvalidInput("octahedral family needs k >= 0 and l >= 1");
  std::vector<CMat2> g;
  if (binary) {
    g = {bt_i(), bt_q(), bo_r()};
  } else {
    g = {bt_i(), bt_q(), scaled2(bo_r(), z(static_cast<int>(pow_ll(2, k + 1))))};
    if (k > 0) g.push_back(scalar2(z(static_cast<int>(pow_ll(2, k)))));
  }
  if (l > 1) g.push_back(scalar2(z(static_cast<int>(l))));
  GroupSpec spec;
  spec.type = "B-octa";
  spec.params = {{"k", k}, {"l", l}, {"binary", binary ? 1 : 0}};
  spec.generators = sl3_embed_gl2(g);
  // -1 already lies in the twisted group, so mu_{2^k} only adds a factor 2^(k-1)
  if (l == 1) spec.declared_order = binary || k == 0 ? 48 : static_cast<std::size_t>(24 * pow_ll(2, k));
  spec.name = binary ? "BO" : "octa H_" + std::to_string(k);
  if (l > 1) spec.name += "*mu" + std::to_string(l);
  return spec;
}

// Binary icosahedral group, optionally times mu_l.
inline GroupSpec type_b_icosa(long long l = 1) {
  using namespace gens;
  if (l < 1) throw InvalidInput("icosahedral family needs l >= 1");
  std::vector<CMat2> g{bt_q(), bi_r()};
  if (l > 1) g.push_back(scalar2(z(static_cast<int>(l))));
  GroupSpec spec;
  spec.type = "B-icosa";
  spec.params = {{"l", l}};
  spec.generators = sl3_embed_gl2(g);
  if (l == 1) spec.declared_order = 120;
  spec.name = l > 1 ? "BI*mu" + std::to_string(l) : "BI";
  return spec;
}

// Adjacency matrices of the exceptional types as printed, with vertices in
// the published character order.
inline IntMatrix adjacency_fixture(const std::string& type) {
  if (type.size() != 1) throw InvalidInput("unknown exceptional type '" + type + "'");
  switch (type[0]) {
    case 'E':
      return {
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
          {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0},
      };
    case 'F':
      return {
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
          {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 0},
      };
    case 'G':
      return {
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0},
      };
    case 'H':
      return {
          {0, 0, 1, 0, 0},
          {0, 0, 0, 1, 1},
          {1, 0, 1, 0, 1},
          {0, 1, 0, 1, 1},
          {0, 1, 1, 1, 1},
      };
    case 'I':
      return {
          {0, 0, 1, 0, 0, 0},
          {1, 0, 0, 0, 0, 1},
          {0, 1, 0, 1, 0, 0},
          {0, 1, 0, 0, 1, 1},
          {0, 0, 0, 1, 1, 1},
          {0, 0, 1, 1, 1, 1},
      };
    case 'J':
      return {
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
          {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
      };
    case 'K':
      return {
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0},
      };
    case 'L':
      return {
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 2},
          {0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0},
      };
    default:
      throw InvalidInput("unknown exceptional type '" + type + "'");
  }
}

// Transcribed cut for type E, as (source, target) pairs in fixture vertex
// numbering (0-based): all arrows leaving vertices 5, 8, 9, 12 (1-based).
inline std::vector<std::pair<std::size_t, std::size_t>> fixture_cut_e() {
  const std::vector<std::pair<std::size_t, std::size_t>> one_based{
      {9, 10}, {9, 7}, {9, 6}, {12, 7}, {12, 6}, {12, 11}, {8, 10}, {8, 11}, {8, 7}, {5, 11}, {5, 10}, {5, 6}};
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : one_based) out.emplace_back(a - 1, b - 1);
  return out;
}

// Arrow indices of q realizing the given vertex pairs; pairs map to distinct arrows.
inline Cut arrows_for_pairs(const Quiver& q, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> used(q.arrows.size(), false);
  Cut cut;
  for (auto [s, t] : pairs) {
    bool found = false;
    for (std::size_t i = 0; i < q.arrows.size() && !found; ++i) {
      if (!used[i] && q.arrows[i].source == s && q.arrows[i].target == t) {
        used[i] = true;
        cut.push_back(i);
        found = true;
      }
    }
    if (!found) throw InvalidInput("no arrow " + std::to_string(s) + " -> " + std::to_string(t));
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

// Trace of the upper-left 2x2 block on each class: the character of rho for a
// group embedded by g -> diag(g, det(g)^{-1}).
inline ClassFunction block_character(const Group& g, const std::vector<ConjClass>& classes) {
  ClassFunction out;
  for (const auto& c : classes) {
    const CMat3& m = g.element(c.representative);
    out.values.push_back(m(0, 0) + m(1, 1));
  }
  return out;
}

struct Verdict {
  bool cut = false;
  std::string reason;
};

inline bool is_self_dual(const ClassFunction& chi) { return chi == conj(chi); }

// A non-abelian group is isomorphic to a subgroup of SL_2 exactly when it has
// a faithful degree-2 irreducible character with trivial determinant.
inline bool embeds_in_sl2(const CharTable& table, const PowerMap& square) {
  for (const auto& chi : table.irreducibles) {
    if (chi.degree() != 2 || !is_faithful(chi)) continue;
    const ClassFunction d = det_char_2dim(chi, square);
    if (d == trivial_character(table.data)) return true;
  }
  return false;
}

inline Verdict predicted_cut_exists(const GroupSpec& spec, const Group* group = nullptr,
                                    const CharTable* table = nullptr) {
  const std::string& t = spec.type;
  if (t == "A") {
    const AbelianDatum d = abelian_datum(spec);
    const LatticeSpec b = lattice_from_weights(d);
    if (b.normalized() == LatticeSpec{2, 0, 2}) return {false, "C2 x C2"};
    const auto w3 = d.w3();
    auto trivial = [&](const std::array<long long, 2>& w) {
      return nt::mod(w[0], d.m1) == 0 && nt::mod(w[1], d.m2) == 0;
    };
    if (trivial(d.w1) || trivial(d.w2) || trivial(w3)) return {false, "embedding factors through SL2"};
    return {true, "type A, not C2 x C2, does not factor through SL2"};
  }
  if (spec.is_type_b()) {
    if (!group || !table) throw InvalidInput("type B prediction needs the group and its character table");
    const ClassFunction rho = block_character(*group, table->classes);
    if (is_self_dual(rho)) return {false, "defining 2-dim representation is self-dual"};
    const PowerMap square = power_map(*group, table->classes, 2);
    if (std::all_of(table->irreducibles.begin(), table->irreducibles.end(),
                    [](const ClassFunction& c) { return c.degree() == 1; }))
      throw InvalidInput("type B groups are non-abelian");
    if (embeds_in_sl2(*table, square)) return {false, "isomorphic to a subgroup of SL2"};
    return {true, "not self-dual and not isomorphic to a subgroup of SL2"};
  }
  if (t == "C" || t == "D") {
    const std::size_t order = group ? group->order() : spec.declared_order;
    if (order == 0) throw InvalidInput("type C/D prediction needs the group order");
    return order % 9 == 0 ? Verdict{true, "9 divides |G|"} : Verdict{false, "9 does not divide |G|"};
  }
  if (t == "H" || t == "I") return {false, "exceptional type " + t};
  if (t == "E" || t == "F" || t == "G" || t == "J" || t == "K" || t == "L") return {true, "exceptional type " + t};
  throw InvalidInput("unknown group type '" + t + "'");
}

// Vertex permutation p with computed[p[i]][p[j]] = fixture[i][j], found by
// backtracking over colour-refined candidates.
inline std::optional<std::vector<std::size_t>> match_adjacency(const IntMatrix& computed, const IntMatrix& fixture) {
  const std::size_t n = computed.size();
  if (fixture.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (computed[i].size() != n || fixture[i].size() != n) return std::nullopt;

  // Joint colour refinement so that colours are comparable across both graphs.
  std::vector<long> ca(n, 0), cb(n, 0);
  for (int round = 0; round <= static_cast<int>(n); ++round) {
    std::map<std::vector<long>, long> ids;
    auto signature = [&](const IntMatrix& m, const std::vector<long>& c, std::size_t v) {
      std::vector<long> sig{c[v], m[v][v]};
      std::vector<std::pair<long, long>> out, in;
      for (std::size_t u = 0; u < n; ++u) {
        if (m[v][u]) out.emplace_back(c[u], m[v][u]);
        if (m[u][v]) in.emplace_back(c[u], m[u][v]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sig.push_back(static_cast<long>(out.size()));
      for (auto [x, y] : out) sig.insert(sig.end(), {x, y});
      sig.push_back(-1);
      for (auto [x, y] : in) sig.insert(sig.end(), {x, y});
      return sig;
    };
    std::vector<std::vector<long>> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature(computed, ca, v);
      sb[v] = signature(fixture, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    long next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<long> na(n), nb(n);
    for (std::size_t v = 0; v < n; ++v) {
      na[v] = ids[sa[v]];
      nb[v] = ids[sb[v]];
    }
    auto distinct = [](const std::vector<long>& x, const std::vector<long>& y) {
      std::set<long> s(x.begin(), x.end());
      s.insert(y.begin(), y.end());
      return s.size();
    };
    const bool stable = distinct(na, nb) == distinct(ca, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable && round > 0) break;
  }
  {
    std::vector<long> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<long, std::size_t> count;
  for (auto c : cb) ++count[c];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return count[cb[x]] < count[cb[y]]; });

  std::vector<std::size_t> p(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t i = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || ca[cand] != cb[i]) continue;
      if (computed[cand][cand] != fixture[i][i]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t j = order[d];
        ok = computed[cand][p[j]] == fixture[i][j] && computed[p[j]][cand] == fixture[j][i];
      }
      if (!ok) continue;
      used[cand] = true;
      p[i] = cand;
      if (place(depth + 1)) return true;
      used[cand] = false;
      p[i] = n;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return p;
}

// Named catalog entries for listing and emission.
inline std::vector<std::string> catalog_names() {
  return {"A",          "B-dihedral", "B-tetra", "B-octa", "B-icosa", "C", "D", "E", "F", "G",
          "H",          "I",          "J",       "K",      "L"};
}

}  // namespace mckay3

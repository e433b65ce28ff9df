#pragma once

// Brute-force cut oracle shared by the unit and acceptance tests. It does not
// use the library's cycle enumeration, verification or acyclicity code.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <mckay3/quiver.hpp>

namespace testing {

using mckay3::Quiver;

// Closed walks of three arrows, one representative per rotation class.
inline std::vector<std::vector<std::size_t>> brute_cycles(const Quiver& q) {
  std::set<std::vector<std::size_t>> seen;
  const std::size_t m = q.arrows.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (q.arrows[a].target != q.arrows[b].source || q.arrows[b].target != q.arrows[c].source ||
            q.arrows[c].target != q.arrows[a].source)
          continue;
        std::vector<std::vector<std::size_t>> rot{{a, b, c}, {b, c, a}, {c, a, b}};
        seen.insert(*std::min_element(rot.begin(), rot.end()));
      }
  return {seen.begin(), seen.end()};
}

// Reachability closure; acyclic when no vertex reaches itself.
inline bool brute_acyclic(const Quiver& q, const std::vector<bool>& removed) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    if (!removed[i]) r[q.arrows[i].source][q.arrows[i].target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (r[i][i]) return false;
  return true;
}

// All arrow sets, drawn from arrows on some 3-cycle, that meet every 3-cycle
// exactly once (with multiplicity) and leave an acyclic quiver.
inline std::vector<std::vector<std::size_t>> brute_force_cuts(const Quiver& q) {
  const auto cycles = brute_cycles(q);
  std::vector<std::size_t> candidates;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    bool on_cycle = false;
    for (const auto& c : cycles) on_cycle = on_cycle || std::find(c.begin(), c.end(), a) != c.end();
    if (on_cycle) candidates.push_back(a);
  }
  std::vector<std::vector<std::size_t>> out;
  const std::size_t k = candidates.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> in(q.arrows.size(), false);
    std::vector<std::size_t> cut;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) {
        in[candidates[b]] = true;
        cut.push_back(candidates[b]);
      }
    bool once = true;
    for (const auto& c : cycles) once = once && (in[c[0]] + in[c[1]] + in[c[2]]) == 1;
    if (once && brute_acyclic(q, in)) out.push_back(cut);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Small random multigraph with up to max_arrows arrows and the occasional loop.
inline Quiver random_quiver(std::mt19937_64& rng, std::size_t max_arrows) {
  std::uniform_int_distribution<std::size_t> nv(2, 5), na(3, max_arrows);
  Quiver q;
  q.degrees.assign(nv(rng), 1);
  std::uniform_int_distribution<std::size_t> v(0, q.degrees.size() - 1);
  std::uniform_int_distribution<int> percent(0, 99);
  const std::size_t m = na(rng);
  while (q.arrows.size() < m) {
    const std::size_t s = v(rng), t = v(rng);
    if (s == t && percent(rng) >= 5) continue;
    q.arrows.push_back({s, t, "plain"});
  }
  return q;
}

}  // namespace testing

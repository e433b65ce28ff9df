#pragma once

// Cuts on McKay quivers: every 3-cycle carries exactly one cut arrow and the
// quiver minus the cut is acyclic. Cuts are found as exact covers of the
// 3-cycles by arrows (dancing links), then filtered by acyclicity.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "quiver.hpp"

namespace mckay3 {

enum class CycleMode { all, det_anchored };

struct ThreeCycle {
  std::array<std::size_t, 3> arrows;
  friend auto operator<=>(const ThreeCycle&, const ThreeCycle&) = default;
};

using Cut = std::vector<std::size_t>;  // sorted arrow indices

// Closed arrow walks of length 3 up to rotation; the stored rotation is the
// lexicographically least one.
inline std::vector<ThreeCycle> three_cycles(const Quiver& q, CycleMode mode = CycleMode::all) {
  std::vector<std::vector<std::size_t>> out_arrows(q.vertex_count());
  for (std::size_t i = 0; i < q.arrows.size(); ++i) out_arrows[q.arrows[i].source].push_back(i);
  if (mode == CycleMode::det_anchored) {
    const bool any = std::any_of(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.label == "det"; });
    if (!any) throw InvalidInput("det_anchored mode needs det-labelled arrows");
  }
  std::vector<ThreeCycle> cycles;
  for (std::size_t a0 = 0; a0 < q.arrows.size(); ++a0) {
    const std::size_t start = q.arrows[a0].source;
    for (std::size_t a1 : out_arrows[q.arrows[a0].target]) {
      for (std::size_t a2 : out_arrows[q.arrows[a1].target]) {
        if (q.arrows[a2].target != start) continue;
        const std::array<std::size_t, 3> c{a0, a1, a2};
        const std::array<std::size_t, 3> r1{a1, a2, a0};
        const std::array<std::size_t, 3> r2{a2, a0, a1};
        if (r1 < c || r2 < c) continue;
        if (mode == CycleMode::det_anchored) {
          int dets = 0;
          for (auto a : c) dets += q.arrows[a].label == "det";
          if (dets != 1) continue;
        }
        cycles.push_back({c});
      }
    }
  }
  return cycles;
}

// Kahn's algorithm on the vertices, ignoring removed arrows. A loop is a cycle.
inline bool is_acyclic(const Quiver& q, const std::vector<std::size_t>& removed = {}) {
  std::vector<bool> skip(q.arrows.size(), false);
  for (auto a : removed) {
    if (a >= q.arrows.size()) throw InvalidInput("unknown arrow index " + std::to_string(a));
    skip[a] = true;
  }
  const std::size_t n = q.vertex_count();
  std::vector<std::set<std::size_t>> succ(n);
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (skip[i]) continue;
    const auto& a = q.arrows[i];
    if (a.source == a.target) return false;
    succ[a.source].insert(a.target);
  }
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ)
    for (auto t : s) ++indeg[t];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    for (auto t : succ[v])
      if (--indeg[t] == 0) ready.push_back(t);
  }
  return done == n;
}

struct CutReport {
  std::map<int, std::size_t> histogram;  // cut arrows per cycle -> number of cycles
  std::size_t cycles = 0;
  bool every_cycle_cut_once = false;
  bool acyclic = false;
  bool valid = false;
};

inline CutReport verify_cut(const Quiver& q, const Cut& cut, CycleMode mode = CycleMode::all) {
  std::vector<int> in_cut(q.arrows.size(), 0);
  for (auto a : cut) {
    if (a >= q.arrows.size()) throw InvalidInput("unknown arrow index " + std::to_string(a));
    in_cut[a] = 1;
  }
  CutReport report;
  const auto cycles = three_cycles(q, mode);
  report.cycles = cycles.size();
  for (const auto& c : cycles) ++report.histogram[in_cut[c.arrows[0]] + in_cut[c.arrows[1]] + in_cut[c.arrows[2]]];
  report.every_cycle_cut_once = report.histogram.size() <= 1 && (cycles.empty() || report.histogram.contains(1));
  report.acyclic = is_acyclic(q, cut);
  report.valid = report.every_cycle_cut_once && report.acyclic;
  return report;
}

namespace detail {

// Knuth's dancing links over items = cycles, options = arrows.
class Dlx {
 public:
  Dlx(std::size_t items, const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& options)
      : items_(items) {
    const std::size_t header = items + 1;  // node 0 is the root
    left_.resize(header);
    right_.resize(header);
    up_.resize(header);
    down_.resize(header);
    col_.resize(header);
    size_.assign(header, 0);
    option_of_.assign(header, 0);
    for (std::size_t i = 0; i < header; ++i) {
      left_[i] = (i + header - 1) % header;
      right_[i] = (i + 1) % header;
      up_[i] = down_[i] = i;
      col_[i] = i;
    }
    for (const auto& [option, cover] : options) {
      std::size_t first = 0;
      for (std::size_t item : cover) {
        const std::size_t c = item + 1;
        const std::size_t node = col_.size();
        col_.push_back(c);
        option_of_.push_back(option);
        up_.push_back(up_[c]);
        down_.push_back(c);
        down_[up_[c]] = node;
        up_[c] = node;
        ++size_[c];
        if (first == 0) {
          first = node;
          left_.push_back(node);
          right_.push_back(node);
        } else {
          const std::size_t last = left_[first];
          left_.push_back(last);
          right_.push_back(first);
          right_[last] = node;
          left_[first] = node;
        }
        size_.push_back(0);
      }
    }
  }

  // Column with the fewest options, ties broken by the lowest item index.
  std::size_t choose() const {
    std::size_t best = 0;
    for (std::size_t c = right_[0]; c != 0; c = right_[c])
      if (best == 0 || size_[c] < size_[best]) best = c;
    return best;
  }

  std::vector<std::size_t> rows_of(std::size_t c) const {
    std::vector<std::size_t> rows;
    for (std::size_t r = down_[c]; r != c; r = down_[r]) rows.push_back(r);
    return rows;
  }

  void cover(std::size_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::size_t i = down_[c]; i != c; i = down_[i]) {
      for (std::size_t j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[col_[j]];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = up_[c]; i != c; i = up_[i]) {
      for (std::size_t j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  void select(std::size_t row) {
    for (std::size_t j = right_[row]; j != row; j = right_[j]) cover(col_[j]);
  }
  void deselect(std::size_t row) {
    for (std::size_t j = left_[row]; j != row; j = left_[j]) uncover(col_[j]);
  }

  // Returns false once the visitor asks to stop.
  bool search(std::vector<std::size_t>& partial, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (right_[0] == 0) return visit(partial);
    const std::size_t c = choose();
    if (size_[c] == 0) return true;
    cover(c);
    for (std::size_t r = down_[c]; r != c; r = down_[r]) {
      partial.push_back(option_of_[r]);
      select(r);
      const bool go_on = search(partial, visit);
      deselect(r);
      partial.pop_back();
      if (!go_on) {
        uncover(c);
        return false;
      }
    }
    uncover(c);
    return true;
  }

  // Runs only the branch of the root column that selects `row`.
  bool search_branch(std::size_t c, std::size_t row,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> partial{option_of_[row]};
    cover(c);
    select(row);
    const bool go_on = search(partial, visit);
    deselect(row);
    uncover(c);
    return go_on;
  }

  bool empty_universe() const { return right_[0] == 0; }
  std::size_t size_of(std::size_t c) const { return size_[c]; }

 private:
  std::size_t items_;
  std::vector<std::size_t> left_, right_, up_, down_, col_, size_, option_of_;
};

}  // namespace detail

struct CutSearchOptions {
  CycleMode mode = CycleMode::all;
  std::size_t limit = 1;  // 0 means all
  unsigned jobs = 1;
};

// Arrows on no 3-cycle stay uncut (degree 0).
inline std::vector<Cut> find_cuts(const Quiver& q, const CutSearchOptions& opts = {}) {
  if (loops(q) > 0) return {};
  const auto cycles = three_cycles(q, opts.mode);

  std::vector<std::vector<std::size_t>> cycles_of(q.arrows.size());
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (auto a : cycles[c].arrows) cycles_of[a].push_back(c);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> options;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto& cs = cycles_of[a];
    if (cs.empty()) continue;
    // An arrow met twice by one cycle would cut it twice.
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) continue;
    options.emplace_back(a, cs);
  }

  const std::size_t limit = opts.limit == 0 ? static_cast<std::size_t>(-1) : opts.limit;
  auto accept = [&](std::vector<std::size_t> sol, std::vector<Cut>& out) {
    std::sort(sol.begin(), sol.end());
    if (!is_acyclic(q, sol)) return true;
    out.push_back(std::move(sol));
    return out.size() < limit;
  };

  std::vector<Cut> found;
  detail::Dlx root(cycles.size(), options);
  if (opts.jobs <= 1 || root.empty_universe()) {
    std::vector<std::size_t> partial;
    root.search(partial, [&](const std::vector<std::size_t>& sol) { return accept(sol, found); });
  } else {
    const std::size_t c = root.choose();
    const auto rows = root.rows_of(c);
    std::vector<std::vector<Cut>> per_branch(rows.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(opts.jobs, rows.size()); ++t) {
      pool.emplace_back([&] {
        detail::Dlx local(cycles.size(), options);
        for (std::size_t b = next++; b < rows.size(); b = next++) {
          local.search_branch(c, rows[b], [&](const std::vector<std::size_t>& sol) {
            return accept(sol, per_branch[b]);
          });
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& branch : per_branch) {
      for (auto& cut : branch) {
        if (found.size() >= limit) break;
        found.push_back(std::move(cut));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace mckay3

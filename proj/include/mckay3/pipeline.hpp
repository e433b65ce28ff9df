#pragma once

// The full workflow for one group: enumerate, character table, McKay quiver,
// cut search, and (for a declared type) the classification predicate.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace mckay3 {

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultOrderCap;
  CycleMode mode = CycleMode::all;
  std::size_t limit = 1;  // 0 means all
  unsigned jobs = 1;
  bool predict = true;
};

struct Timings {
  double enumerate = 0, classes = 0, table = 0, quiver = 0, cuts = 0;
};

struct RunReport {
  std::string name;
  std::string type;
  std::size_t order = 0;
  std::size_t class_count = 0;
  std::map<long, std::size_t> degree_counts;
  std::size_t vertices = 0, arrows = 0, loop_count = 0, two_cycle_count = 0, three_cycle_count = 0;
  bool connected = false;
  std::vector<Cut> cuts;
  std::string verdict;  // cut-found, no-cut-loops, no-cut-exhausted
  std::optional<Verdict> prediction;
  bool agrees = true;
  Timings timings;
};

// Everything the pipeline computed, for callers that want more than the report.
struct PipelineResult {
  GroupSpec spec;
  Group group;
  CharTable table;
  Quiver quiver;
  RunReport report;
};

// Groups given as 2x2 blocks (type B) use the GL_2 embedding with det-labelled
// arrows; everything else uses the defining 3-dim character.
inline PipelineResult run_pipeline(const GroupSpec& spec, const PipelineOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  auto since = [](clock::time_point t) { return std::chrono::duration<double>(clock::now() - t).count(); };

  PipelineResult out;
  out.spec = spec;
  RunReport& r = out.report;
  r.name = spec.name;
  r.type = spec.type;

  auto t = clock::now();
  out.group = Group::generate(spec.generators, opts.cap);
  r.timings.enumerate = since(t);
  if (spec.declared_order && out.group.order() != spec.declared_order)
    throw InvalidInput("generators give order " + std::to_string(out.group.order()) + ", declared " +
                       std::to_string(spec.declared_order));
  r.order = out.group.order();

  t = clock::now();
  auto classes = conjugacy_classes(out.group);
  r.timings.classes = since(t);
  t = clock::now();
  out.table = character_table(out.group, std::move(classes), opts.seed);
  r.timings.table = since(t);
  r.class_count = out.table.size();
  for (const auto& chi : out.table.irreducibles) ++r.degree_counts[chi.degree()];

  t = clock::now();
  if (spec.is_type_b()) {
    const PowerMap square = power_map(out.group, out.table.classes, 2);
    out.quiver = gl2_embed(out.table, block_character(out.group, out.table.classes), square);
  } else {
    out.quiver = mckay_quiver(out.table, defining_character(out.group, out.table.classes));
  }
  r.timings.quiver = since(t);
  const Quiver& q = out.quiver;
  r.vertices = q.vertex_count();
  r.arrows = q.arrows.size();
  r.loop_count = loops(q);
  r.two_cycle_count = two_cycles(q);
  r.connected = strongly_connected(q);

  t = clock::now();
  if (opts.mode == CycleMode::det_anchored && !spec.is_type_b())
    throw InvalidInput("det mode needs a type B group (det-labelled arrows)");
  r.three_cycle_count = three_cycles(q, opts.mode).size();
  r.cuts = find_cuts(q, {opts.mode, opts.limit, opts.jobs});
  r.timings.cuts = since(t);
  r.verdict = !r.cuts.empty() ? "cut-found" : r.loop_count > 0 ? "no-cut-loops" : "no-cut-exhausted";

  if (opts.predict) {
    r.prediction = predicted_cut_exists(spec, &out.group, &out.table);
    r.agrees = r.prediction->cut == !r.cuts.empty();
  }
  return out;
}

inline Json run_report_to_json(const PipelineResult& res, const PipelineOptions& opts, bool timings) {
  const RunReport& r = res.report;
  Json degrees = Json::object();
  for (const auto& [d, c] : r.degree_counts) degrees[std::to_string(d)] = c;
  Json j;
  j["name"] = r.name;
  j["type"] = r.type;
  j["order"] = r.order;
  j["classes"] = r.class_count;
  j["degrees"] = degrees;
  j["quiver"] = {{"vertices", r.vertices},     {"arrows", r.arrows},
                 {"loops", r.loop_count},       {"two_cycles", r.two_cycle_count},
                 {"three_cycles", r.three_cycle_count}, {"strongly_connected", r.connected}};
  j["cut"] = r.cuts.empty() ? Json("none") : cut_to_json(res.quiver, r.cuts.front(), opts.mode);
  j["cuts_found"] = r.cuts.size();
  j["verdict"] = r.verdict;
  if (r.prediction) {
    j["predicted"] = {{"cut", r.prediction->cut}, {"reason", r.prediction->reason}};
    j["agrees"] = r.agrees;
  }
  if (res.spec.type == "A") {
    const auto b = lattice_from_weights(abelian_datum(res.spec));
    const auto g = gamma_search(b);
    j["gamma"] = g ? Json(*g) : Json(nullptr);
  }
  if (timings) {
    j["timings"] = {{"enumerate", r.timings.enumerate}, {"classes", r.timings.classes},
                    {"table", r.timings.table},         {"quiver", r.timings.quiver},
                    {"cuts", r.timings.cuts}};
  }
  return j;
}

}  // namespace mckay3

// mckay3: McKay quivers and cuts for finite subgroups of SL_3.
//
// Exit codes: 0 ok (including "no cut"), 1 other error, 2 parse error,
// 3 order cap exceeded, 4 predicate / solver disagreement.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <mckay3/mckay3.hpp>

using namespace mckay3;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitDisagree = 4;

struct Common {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultOrderCap;
  unsigned jobs = 1;
  bool timings = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "seed for the eigenspace splitting")->capture_default_str();
  cmd->add_option("--cap", c.cap, "abort enumeration beyond this many elements")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "solver threads (output does not depend on it)")->capture_default_str();
  cmd->add_flag("--timings", c.timings, "include wall-clock timings (breaks byte-identical output)");
}

CycleMode parse_mode(const std::string& m) {
  if (m == "all") return CycleMode::all;
  if (m == "det") return CycleMode::det_anchored;
  throw ParseError("--mode must be 'all' or 'det'");
}

std::string float_str(const CycNum& x) {
  const auto z = x.to_float();
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_quiver(const std::string& path, const std::string& format, const std::string& table_fmt, bool with_float,
               const Common& c) {
  const GroupSpec spec = spec_from_json(read_json_file(path));
  PipelineOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap;
  Group g = Group::generate(spec.generators, c.cap);
  const CharTable table = character_table(g, c.seed);
  Quiver q;
  if (spec.is_type_b())
    q = gl2_embed(table, block_character(g, table.classes), power_map(g, table.classes, 2));
  else
    q = mckay_quiver(table, defining_character(g, table.classes));

  if (format == "dot") {
    std::cout << export_dot(q);
  } else if (format == "csv") {
    std::cout << adjacency_csv(q.adjacency());
  } else {
    Json j;
    j["name"] = spec.name;
    j["order"] = g.order();
    j["quiver"] = quiver_to_json(q);
    j["loops"] = loops(q);
    j["strongly_connected"] = strongly_connected(q);
    if (with_float) {
      Json rows = Json::array();
      for (const auto& chi : table.irreducibles) {
        Json row = Json::array();
        for (const auto& v : chi.values) row.push_back(float_str(v));
        rows.push_back(row);
      }
      j["characters_float"] = rows;
    }
    print(j);
  }
  if (table_fmt == "csv") std::cerr << char_table_csv(table);
  else if (table_fmt == "json") std::cerr << char_table_to_json(table).dump(2) << "\n";
  return 0;
}

int cmd_cuts(const std::string& path, const std::string& mode_name, std::size_t limit, bool all,
             const std::string& dot_path, const Common& c) {
  const Json input = read_json_file(path);
  const CycleMode mode = parse_mode(mode_name);
  Quiver q;
  std::string name;
  if (input.contains("type")) {
    const GroupSpec spec = spec_from_json(input);
    PipelineOptions opts;
    opts.seed = c.seed;
    opts.cap = c.cap;
    opts.mode = mode;
    opts.limit = all ? 0 : limit;
    opts.jobs = c.jobs;
    opts.predict = false;
    const PipelineResult res = run_pipeline(spec, opts);
    q = res.quiver;
    name = spec.name;
  } else {
    q = quiver_from_json(input.contains("quiver") ? input["quiver"] : input);
    name = input.value("name", "quiver");
  }
  const auto cuts = find_cuts(q, {mode, all ? 0 : limit, c.jobs});
  Json j;
  j["name"] = name;
  j["vertices"] = q.vertex_count();
  j["arrows"] = q.arrows.size();
  j["three_cycles"] = three_cycles(q, mode).size();
  j["loops"] = loops(q);
  j["count"] = cuts.size();
  if (cuts.empty()) {
    j["verdict"] = "none";
    j["reason"] = loops(q) > 0 ? "loops" : "exhausted";
  } else {
    j["verdict"] = "cut-found";
    Json list = Json::array();
    for (const auto& cut : cuts) list.push_back(cut_to_json(q, cut, mode));
    j["cuts"] = list;
  }
  j["dot"] = export_dot(q, cuts.empty() ? Cut{} : cuts.front());
  if (!dot_path.empty()) write_file(dot_path, j["dot"].get<std::string>());
  print(j);
  return 0;
}

int cmd_classify(const std::string& path, const Common& c) {
  const GroupSpec spec = spec_from_json(read_json_file(path));
  PipelineOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap;
  opts.jobs = c.jobs;
  const PipelineResult res = run_pipeline(spec, opts);
  print(run_report_to_json(res, opts, c.timings));
  if (!res.report.agrees) {
    std::cerr << "disagreement: predicate says " << (res.report.prediction->cut ? "cut" : "no cut") << " ("
              << res.report.prediction->reason << "), solver says " << res.report.verdict << "\n"
              << "loops=" << res.report.loop_count << " arrows=" << res.report.arrows
              << " three_cycles=" << res.report.three_cycle_count << "\n";
    return kExitDisagree;
  }
  return 0;
}

std::vector<long long> parse_list(const std::string& s, std::size_t want, const char* what) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  if (out.size() != want) throw ParseError(std::string(what) + " needs " + std::to_string(want) + " integers");
  return out;
}

Json lattice_json(const LatticeSpec& b) {
  return {{"b11", b.b11}, {"b12", b.b12}, {"b22", b.b22}, {"n", b.n()}, {"B_prime", b_prime(b)}};
}

int cmd_typea(const std::string& weights, const std::string& invariants, const std::string& w1, const std::string& w2,
              const std::string& family, long long m, long long lp) {
  Json j;
  if (!family.empty()) {
    const auto [b, gamma] = type_b_lattice(parse_family(family), m, lp);
    j["family"] = family;
    j["lattice"] = lattice_json(b);
    j["gamma"] = gamma;
    j["gamma_valid"] = gamma_valid(b, gamma);
  } else {
    AbelianDatum d;
    std::optional<std::array<long long, 2>> w3;
    if (!weights.empty()) {
      const auto w = parse_list(weights, 4, "--weights n,a,b,c");
      d = cyclic_datum(w[0], w[1], w[2]);
      w3 = std::array<long long, 2>{0, nt::mod(w[3], w[0])};
    } else if (!invariants.empty()) {
      const auto inv = parse_list(invariants, 2, "--invariants");
      const auto a = parse_list(w1, 2, "--w1");
      const auto b = parse_list(w2, 2, "--w2");
      d = {inv[0], inv[1], {a[0], a[1]}, {b[0], b[1]}};
    } else {
      throw ParseError("typea needs --weights, --invariants or --family");
    }
    const LatticeSpec b = lattice_from_weights(d, w3);
    const auto gamma = gamma_search(b);
    j["lattice"] = lattice_json(b);
    j["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
    j["cut_exists"] = gamma.has_value();
  }
  print(j);
  return 0;
}

int cmd_catalog_emit(const std::string& type, const std::vector<std::string>& params) {
  Json spec{{"type", type}};
  Json p = Json::object();
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("parameters are key=value, got '" + kv + "'");
    p[kv.substr(0, eq)] = parse_list(kv.substr(eq + 1), 1, "parameter value")[0];
  }
  if (!p.empty()) spec["params"] = p;
  print(spec_to_json(spec_from_json(spec)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay quivers and 3-preprojective cuts for finite subgroups of SL3"};
  app.require_subcommand(1);

  Common common;
  std::string path, format = "json", table_fmt, mode = "all", dot_path;
  bool with_float = false, all = false;
  std::size_t limit = 1;

  auto* quiver = app.add_subcommand("quiver", "McKay quiver of a group spec");
  quiver->add_option("spec", path, "group-spec JSON")->required();
  quiver->add_option("--format", format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
  quiver->add_option("--table", table_fmt, "also write the character table (csv or json) to stderr")
      ->check(CLI::IsMember({"csv", "json"}));
  quiver->add_flag("--float", with_float, "add floating-point character values (diagnostics)");
  add_common(quiver, common);

  auto* cuts = app.add_subcommand("cuts", "cuts of a group spec or quiver JSON");
  cuts->add_option("input", path, "group-spec or quiver JSON")->required();
  cuts->add_option("--mode", mode, "3-cycles to cut: all or det")->check(CLI::IsMember({"all", "det"}));
  cuts->add_option("--limit", limit, "stop after this many cuts")->capture_default_str();
  cuts->add_flag("--all", all, "enumerate every cut");
  cuts->add_option("--dot", dot_path, "write DOT with the first cut highlighted");
  add_common(cuts, common);

  auto* classify = app.add_subcommand("classify", "predicate and solver on a typed group spec");
  classify->add_option("spec", path, "group-spec JSON")->required();
  add_common(classify, common);

  std::string weights, invariants, w1, w2, family;
  long long m = 2, lp = 0;
  auto* typea = app.add_subcommand("typea", "lattice and type vector of an abelian group");
  typea->add_option("--weights", weights, "cyclic group: n,a,b,c with a+b+c = 0 mod n");
  typea->add_option("--invariants", invariants, "m1,m2 with m1 | m2");
  typea->add_option("--w1", w1, "weight of rho_1 in Z/m1 x Z/m2");
  typea->add_option("--w2", w2, "weight of rho_2 in Z/m1 x Z/m2");
  typea->add_option("--family", family, "type B folding lattice: dihedral, tetra, octa, icosa");
  typea->add_option("--m", m, "order of det(rho)");
  typea->add_option("--lp", lp, "l' for the dihedral family");

  std::string emit_type;
  std::vector<std::string> emit_params;
  auto* catalog = app.add_subcommand("catalog", "list catalog families or emit a group spec");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "catalog families");
  auto* emit = catalog->add_subcommand("emit", "group-spec JSON with explicit generators");
  emit->add_option("type", emit_type, "family tag")->required();
  emit->add_option("params", emit_params, "key=value parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*quiver) return cmd_quiver(path, format, table_fmt, with_float, common);
    if (*cuts) return cmd_cuts(path, mode, limit, all, dot_path, common);
    if (*classify) return cmd_classify(path, common);
    if (*typea) return cmd_typea(weights, invariants, w1, w2, family, m, lp);
    if (*list) {
      print(catalog_names());
      return 0;
    }
    if (*emit) return cmd_catalog_emit(emit_type, emit_params);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "order cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

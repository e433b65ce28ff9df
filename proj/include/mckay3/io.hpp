#pragma once

// JSON / CSV / text formats: cyclotomic numbers as "1/2 + z12^5 - 3*z12^7",
// group specs, quivers, cuts and character tables.

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"

namespace mckay3 {

using Json = nlohmann::ordered_json;

// Inverse of CycNum::str(). Accepts sums of terms "c", "c*zN^k", "zN^k", "zN"
// with rational c; orders of different terms are lifted to their lcm.
inline CycNum parse_cyc(const std::string& text) {
  static const std::regex split_token("[0-9A-Za-z]\\s+[0-9A-Za-z]");
  if (std::regex_search(text, split_token)) throw ParseError("stray space inside a term in '" + text + "'");
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty cyclotomic number");
  struct Term {
    Rat coeff;
    int order;
    long long power;
  };
  std::vector<Term> terms;
  std::size_t i = 0;
  auto read_int = [&](const char* what) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError(std::string("expected ") + what + " in '" + text + "'");
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    Rat coeff(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_int("integer");
      if (i < s.size() && s[i] == '/') {
        ++i;
        num += "/" + read_int("denominator");
      }
      try {
        coeff = Rat(num);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + num + "'");
      }
      if (coeff.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
      coeff.canonicalize();
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
      else {
        terms.push_back({sign * coeff, 1, 0});
        continue;
      }
    }
    if (i >= s.size() || s[i] != 'z') {
      throw ParseError(have_coeff ? "expected 'z' after '*' in '" + text + "'" : "expected a term in '" + text + "'");
    }
    ++i;
    const long long order = std::stoll(read_int("root order"));
    if (order < 1 || order > 100000) throw ParseError("root order out of range in '" + text + "'");
    long long power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
      }
      power = std::stoll(read_int("exponent"));
      if (neg) power = -power;
    }
    terms.push_back({sign * coeff, static_cast<int>(order), power});
  }
  int n = 1;
  for (const auto& t : terms) n = static_cast<int>(nt::lcm(n, t.order));
  std::vector<std::pair<Rat, long long>> lifted;
  for (const auto& t : terms) lifted.emplace_back(t.coeff, t.power * (n / t.order));
  return CycNum::from_terms(n, lifted);
}

inline Json matrix_to_json(const CMat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

inline CycNum cyc_from_json(const Json& j) {
  if (j.is_number_integer()) return CycNum(Rat(j.get<long>()));
  if (j.is_string()) return parse_cyc(j.get<std::string>());
  throw ParseError("matrix entry must be an integer or a string");
}

inline CMat3 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a generator is a 3x3 array");
  std::array<CycNum, 9> e;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw ParseError("a generator is a 3x3 array");
    for (int c = 0; c < 3; ++c) e[static_cast<std::size_t>(3 * r + c)] = cyc_from_json(j[r][c]);
  }
  return CMat3(std::move(e));
}

namespace detail {

inline long long param_of(const Json& params, const char* key, long long fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number_integer()) throw ParseError(std::string("parameter ") + key + " must be an integer");
  return params[key].get<long long>();
}

inline long long need_param(const Json& params, const char* key) {
  if (!params.contains(key)) throw ParseError(std::string("missing parameter ") + key);
  return param_of(params, key, 0);
}

}  // namespace detail

namespace detail {

inline GroupSpec spec_from_json_unchecked(const Json& j) {
  if (!j.is_object()) throw ParseError("group spec must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) throw ParseError("group spec needs a string field 'type'");
  const std::string type = j["type"].get<std::string>();
  const Json params = j.value("params", Json::object());
  if (!params.is_object()) throw ParseError("'params' must be an object");
  using detail::need_param;
  using detail::param_of;

  GroupSpec spec;
  const bool explicit_gens = j.contains("generators");
  if (!explicit_gens) {
    if (type == "A") {
      if (params.contains("weights")) {
        // cyclic shorthand: n and the three exponents (a, b, c)
        const auto w = params["weights"];
        if (!w.is_array() || w.size() != 3) throw ParseError("'weights' needs three integers");
        const long long n = need_param(params, "n");
        const AbelianDatum d = cyclic_datum(n, w[0].get<long long>(), w[1].get<long long>());
        if (nt::mod(w[0].get<long long>() + w[1].get<long long>() + w[2].get<long long>(), n) != 0)
          throw InvalidInput("weights do not sum to 0 mod n");
        spec = type_a(d);
      } else {
        spec = type_a({param_of(params, "m1", 1), need_param(params, "m2"),
                       {param_of(params, "w1a", 0), need_param(params, "w1b")},
                       {param_of(params, "w2a", 0), need_param(params, "w2b")}});
      }
    } else if (type == "B-dihedral") {
      spec = type_b_dihedral(need_param(params, "n"), need_param(params, "k"), param_of(params, "variant", 0),
                             param_of(params, "l", 1));
    } else if (type == "B-tetra") {
      spec = type_b_tetra(param_of(params, "k", 0), param_of(params, "l", 1), param_of(params, "binary", 0) != 0);
    } else if (type == "B-octa") {
      spec = type_b_octa(param_of(params, "k", 0), param_of(params, "l", 1), param_of(params, "binary", 0) != 0);
    } else if (type == "B-icosa") {
      spec = type_b_icosa(param_of(params, "l", 1));
    } else if (type == "C") {
      spec = type_c();
    } else if (type == "D") {
      spec = type_d();
    } else {
      spec = exceptional(type);
    }
  } else {
    spec.type = type;
    for (const auto& [k, v] : params.items()) {
      if (!v.is_number_integer()) throw ParseError("parameter " + k + " must be an integer");
      spec.params.emplace_back(k, v.get<long long>());
    }
    if (!j["generators"].is_array() || j["generators"].empty()) throw ParseError("'generators' must be a non-empty array");
    for (const auto& g : j["generators"]) spec.generators.push_back(matrix_from_json(g));
    spec.declared_order = 0;
    spec.name = type;
  }
  if (j.contains("declared_order")) {
    if (!j["declared_order"].is_number_unsigned()) throw ParseError("'declared_order' must be a positive integer");
    spec.declared_order = j["declared_order"].get<std::size_t>();
  }
  if (j.contains("name")) spec.name = j["name"].get<std::string>();
  return spec;
}

}  // namespace detail

// Builds the catalog group named by "type" and "params". Explicit
// "generators" replace the catalog ones (the type still drives the predicate).
inline GroupSpec spec_from_json(const Json& j) {
  try {
    return detail::spec_from_json_unchecked(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group spec: ") + e.what());
  }
}

inline Json spec_to_json(const GroupSpec& spec, bool with_generators = true) {
  Json j;
  j["type"] = spec.type;
  if (!spec.name.empty()) j["name"] = spec.name;
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  j["params"] = params;
  if (spec.declared_order) j["declared_order"] = spec.declared_order;
  if (with_generators) {
    Json gens = Json::array();
    for (const auto& g : spec.generators) gens.push_back(matrix_to_json(g));
    j["generators"] = gens;
  }
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& origin = "input") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

inline Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertex_count();
  j["degrees"] = q.degrees;
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back(Json::array({a.source, a.target, a.label}));
  j["arrows"] = arrows;
  j["adjacency"] = q.adjacency();
  return j;
}

// Accepts either an "arrows" list ([source, target] or [source, target, label])
// or an "adjacency" matrix.
inline Quiver quiver_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("quiver must be a JSON object");
  Quiver q;
  try {
    if (j.contains("arrows")) {
      if (!j.contains("vertices")) throw ParseError("quiver with 'arrows' needs 'vertices'");
      const auto n = j["vertices"].get<std::size_t>();
      q.degrees = j.contains("degrees") ? j["degrees"].get<std::vector<long>>() : std::vector<long>(n, 1);
      if (q.degrees.size() != n) throw ParseError("'degrees' does not match 'vertices'");
      for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() < 2 || a.size() > 3) throw ParseError("an arrow is [source, target, label?]");
        q.arrows.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>(),
                            a.size() == 3 ? a[2].get<std::string>() : std::string("plain")});
      }
    } else if (j.contains("adjacency")) {
      const auto a = j["adjacency"].get<IntMatrix>();
      std::vector<long> d;
      if (j.contains("degrees")) d = j["degrees"].get<std::vector<long>>();
      q = Quiver::from_adjacency(a, d);
    } else {
      throw ParseError("quiver needs 'arrows' or 'adjacency'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quiver: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("malformed quiver: ") + e.what());
  }
  try {
    q.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  return q;
}

inline Json report_to_json(const CutReport& r) {
  Json hist = Json::object();
  for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
  return {{"cycles", r.cycles}, {"histogram", hist}, {"every_cycle_cut_once", r.every_cycle_cut_once},
          {"acyclic", r.acyclic}, {"valid", r.valid}};
}

inline Json cut_to_json(const Quiver& q, const Cut& cut, CycleMode mode = CycleMode::all) {
  Json pairs = Json::array();
  for (auto a : cut) pairs.push_back(Json::array({q.arrows[a].source, q.arrows[a].target, q.arrows[a].label}));
  return {{"arrows", cut}, {"pairs", pairs}, {"report", report_to_json(verify_cut(q, cut, mode))}};
}

// Values as exact strings; one row per irreducible, one column per class.
inline std::string char_table_csv(const CharTable& t) {
  std::ostringstream out;
  out << "character";
  for (std::size_t k = 0; k < t.data.count(); ++k) out << ",C" << k;
  out << "\nclass_size";
  for (auto s : t.data.sizes) out << "," << s;
  out << "\nelement_order";
  for (auto o : t.data.element_orders) out << "," << o;
  out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "chi" << i;
    for (const auto& v : t[i].values) out << ",\"" << v.str() << "\"";
    out << "\n";
  }
  return out.str();
}

inline Json char_table_to_json(const CharTable& t) {
  Json rows = Json::array();
  for (const auto& chi : t.irreducibles) {
    Json row = Json::array();
    for (const auto& v : chi.values) row.push_back(v.str());
    rows.push_back(row);
  }
  return {{"group_order", t.data.group_order},
          {"class_sizes", t.data.sizes},
          {"element_orders", t.data.element_orders},
          {"exponent", t.data.exponent},
          {"prime", t.prime},
          {"characters", rows}};
}

}  // namespace mckay3

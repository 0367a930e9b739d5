#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "certifier.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace fwf {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"name": string, "m": int, "generators": [[int]], "expected": object?}
struct ComplexDocument {
  std::string name;
  int m = 0;
  std::vector<std::vector<int>> generators;  ///< sorted, deduplicated
  std::optional<Json> expected;

  SimplicialComplex complex() const { return make_complex(m, generators); }
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

inline std::string type_name(const Json& j) { return j.type_name(); }

}  // namespace detail

inline ComplexDocument parse_complex_json(const Json& root) {
  using detail::schema_error;
  if (!root.is_object()) schema_error("$", "expected object, got " + detail::type_name(root));
  for (const auto& [key, value] : root.items())
    if (key != "name" && key != "m" && key != "generators" && key != "expected")
      schema_error("$." + key, "unknown field");

  ComplexDocument doc;
  if (!root.contains("name")) schema_error("$.name", "missing");
  if (!root["name"].is_string()) schema_error("$.name", "expected string, got " + detail::type_name(root["name"]));
  doc.name = root["name"].get<std::string>();

  if (!root.contains("m")) schema_error("$.m", "missing");
  if (!root["m"].is_number_integer()) schema_error("$.m", "expected integer, got " + detail::type_name(root["m"]));
  const auto m = root["m"].get<long long>();
  if (m < 1 || m > kMaxVertices) schema_error("$.m", "must lie in 1.." + std::to_string(kMaxVertices));
  doc.m = static_cast<int>(m);

  if (!root.contains("generators")) schema_error("$.generators", "missing");
  const auto& gens = root["generators"];
  if (!gens.is_array()) schema_error("$.generators", "expected array, got " + detail::type_name(gens));
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "$.generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array()) schema_error(path, "expected array, got " + detail::type_name(gens[i]));
    VertexSet s;
    for (std::size_t k = 0; k < gens[i].size(); ++k) {
      const auto& v = gens[i][k];
      const std::string vpath = path + "[" + std::to_string(k) + "]";
      if (!v.is_number_integer()) schema_error(vpath, "expected integer, got " + detail::type_name(v));
      const auto x = v.get<long long>();
      if (x < 1) schema_error(vpath, "vertex " + std::to_string(x) + " < 1");
      if (x > doc.m) schema_error(vpath, "vertex " + std::to_string(x) + " > m=" + std::to_string(doc.m));
      s = s.with(static_cast<int>(x));
    }
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (auto s : sets) doc.generators.push_back(s.vertices());

  if (root.contains("expected")) {
    if (!root["expected"].is_object())
      schema_error("$.expected", "expected object, got " + detail::type_name(root["expected"]));
    doc.expected = root["expected"];
  }
  return doc;
}

inline ComplexDocument parse_complex(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
  return parse_complex_json(root);
}

inline ComplexDocument load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_complex(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json to_json(VertexSet s) { return Json(s.vertices()); }

inline Json to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(to_json(s));
  return out;
}

/// Facets of K (nothing for {∅}); the canonical generator list.
inline Json facets_json(const SimplicialComplex& K) {
  Json out = Json::array();
  if (!K.is_empty_complex())
    for (auto f : K.facets()) out.push_back(to_json(f));
  return out;
}

/// Canonical form: generators replaced by the facets of the complex.
inline Json to_json(const ComplexDocument& doc) {
  Json out{{"name", doc.name}, {"m", doc.m}, {"generators", facets_json(doc.complex())}};
  if (doc.expected) out["expected"] = *doc.expected;
  return out;
}

inline Json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(n));
  return Json(n.str());
}

/// Nonzero groups only, as {"degree", "rank", "torsion"}.
inline Json to_json(const HomologyProfile& H) {
  Json groups = Json::array();
  for (int q = H.min_degree; q <= H.max_degree(); ++q) {
    const auto& g = H.at(q);
    if (g.is_zero()) continue;
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(to_json(t));
    groups.push_back({{"degree", q}, {"rank", g.free_rank}, {"torsion", torsion}});
  }
  return {{"coefficients", H.ring.to_string()}, {"groups", groups}};
}

inline Json to_json(const GolodReport& r) {
  Json tor = Json::array();
  for (const auto& t : r.tor) {
    Json e{{"coefficients", t.ring.to_string()}, {"golod", t.golod}};
    if (t.witness)
      e["witness"] = {{"a", t.witness->first.to_string()}, {"b", t.witness->second.to_string()},
                      {"multidegrees", {to_json(t.witness->first.multidegree), to_json(t.witness->second.multidegree)}}};
    tor.push_back(e);
  }
  Json join{{"coefficients", r.join_Z.ring.to_string()}, {"golod", r.join_Z.golod}};
  if (r.join_Z.witness)
    join["witness"] = {{"I", to_json(r.join_Z.witness->I)}, {"J", to_json(r.join_Z.witness->J)},
                       {"degree", r.join_Z.witness->degree}};
  return {{"golod", r.golod},           {"golod_over_fields", r.golod_over_Z}, {"join", join},
          {"oracles_agree", r.oracles_agree}, {"torsion_primes", r.primes}, {"tor", tor}};
}

inline Json to_json(const TrivialityCertificate& c) {
  Json rules = Json::array();
  for (const auto& o : c.rules) {
    Json e{{"rule", to_string(o.rule)}, {"status", to_string(o.status)}, {"detail", o.detail}};
    if (o.dK) e["d_K"] = *o.dK;
    if (o.rule == Rule::NEIGHBORLY_DK && o.status != RuleStatus::skipped &&
        o.status != RuleStatus::not_applicable)
      e["neighborliness"] = o.neighborliness;
    if (o.shelling && o.shelling->status == SearchStatus::found) e["dual_shelling"] = to_json(o.shelling->order);
    if (!o.subcomplexes.empty()) {
      Json subs = Json::array();
      for (const auto& s : o.subcomplexes) {
        Json x{{"I", to_json(s.I)}, {"status", s.status}};
        if (!s.filling.empty()) x["filling"] = to_json(s.filling);
        subs.push_back(x);
      }
      e["subcomplexes"] = subs;
    }
    rules.push_back(e);
  }
  Json out{{"verdict", to_string(c.verdict)}, {"rules", rules}};
  out["rule"] = c.rule ? Json(to_string(*c.rule)) : Json(nullptr);
  if (c.golod) out["golod"] = to_json(*c.golod);
  return out;
}

/// Summands carry "spheres" when free, else their homology.
inline Json to_json(const WedgeReport& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands) {
    Json e{{"I", to_json(s.I)}};
    if (s.homology.has_torsion()) {
      e["homology"] = to_json(s.homology);
    } else {
      std::vector<int> spheres;
      for (int q = 0; q <= s.homology.max_degree(); ++q)
        for (long long c = 0; c < s.homology.betti(q); ++c) spheres.push_back(q);
      e["spheres"] = spheres;
    }
    summands.push_back(e);
  }
  Json out{{"summands", summands},
           {"aggregate", to_json(r.aggregate)},
           {"poincare", r.poincare},
           {"desuspended", r.desuspended}};
  out["sphere_list"] = r.sphere_list ? Json(*r.sphere_list) : Json(nullptr);
  return out;
}

/// Two-space indentation, sorted keys, trailing newline.
inline std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fwf

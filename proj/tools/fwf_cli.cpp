// fwf: command-line front end. Every command reads a complex document and
// writes one JSON report to stdout.
//
// Exit codes: 0 computed, 1 negative verdict of a check, 2 usage or parse
// error, 3 search budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include <fwf/fwf.hpp>

namespace {

using namespace fwf;

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kExhausted = 3;

struct Options {
  std::string file;
  std::string coeff;
  long budget = kDefaultSearchBudget;
  int max_m = kDefaultMaxCubeVertices;
  bool all_rules = false;
  bool dual = false;
  bool homology = false;
  int pair = 0;
  std::string betti;
  int level = -1;
  std::string name;
};

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kOk;
    case SearchStatus::exhausted: return kExhausted;
    default: return kNegative;
  }
}

CoefficientRing ring_or(const Options& o, const CoefficientRing& fallback) {
  return o.coeff.empty() ? fallback : CoefficientRing::parse(o.coeff);
}

int print(const Json& j, int code) {
  std::cout << emit(j);
  return code;
}

int cmd_homology(const ComplexDocument& doc, const Options& o) {
  const auto H = reduced_homology(doc.complex(), ring_or(o, CoefficientRing::Z()));
  return print({{"name", doc.name}, {"reduced_homology", to_json(H)}}, kOk);
}

int cmd_rmac(const ComplexDocument& doc, const Options& o) {
  const auto K = doc.complex();
  const auto R = ring_or(o, CoefficientRing::Z());
  const auto C = o.level >= 0 ? rmac_filtration(K, o.level, o.max_m) : build_rmac(K, o.max_m);
  const auto H = cubical_homology(C, R);
  Json out{{"name", doc.name}, {"face_counts", C.counts_by_dimension()}, {"homology", to_json(H)}};
  if (o.level >= 0) {
    out["level"] = o.level;
    return print(out, kOk);
  }
  const auto rhs = hochster_sum(full_subcomplex_homologies(K, R), R);
  const bool equal = H.same_groups(rhs);
  out["hochster_identity"] = equal;
  return print(out, equal ? kOk : kNegative);
}

int cmd_dual(const ComplexDocument& doc, const Options&) {
  const auto K = doc.complex();
  if (K.is_simplex() && K.facets()[0] == K.ground_set())
    return print({{"name", doc.name}, {"dual", nullptr}, {"void", true}}, kOk);
  const auto D = alexander_dual(K);
  return print({{"name", doc.name},
                {"dual", {{"name", doc.name + "_dual"}, {"m", D.m()}, {"generators", facets_json(D)}}},
                {"void", false}},
               kOk);
}

int cmd_nonfaces(const ComplexDocument& doc, const Options&) {
  return print({{"name", doc.name}, {"minimal_nonfaces", to_json(minimal_nonfaces(doc.complex()))}}, kOk);
}

int cmd_golod(const ComplexDocument& doc, const Options&) {
  const auto r = golod_report(doc.complex());
  auto out = to_json(r);
  out["name"] = doc.name;
  return print(out, r.golod ? kOk : kNegative);
}

int cmd_certify(const ComplexDocument& doc, const Options& o) {
  const auto c = certify_fwf_trivial(doc.complex(), {.all_rules = o.all_rules, .budget = o.budget});
  auto out = to_json(c);
  out["name"] = doc.name;
  int code = kOk;
  if (c.verdict == Verdict::nontrivial) code = kNegative;
  else if (c.verdict == Verdict::unknown && c.any_exhausted()) code = kExhausted;
  return print(out, code);
}

std::vector<SpacePoincare> spaces(const Options& o, int m) {
  if (!o.betti.empty()) {
    std::vector<SpacePoincare> out;
    std::stringstream ss(o.betti);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(SpacePoincare::parse(item));
    return out;
  }
  return std::vector<SpacePoincare>(static_cast<std::size_t>(m), SpacePoincare::sphere_pair(o.pair ? o.pair : 1));
}

int cmd_bbcg(const ComplexDocument& doc, const Options& o) {
  if (o.pair && !o.betti.empty()) throw CLI::ValidationError("--pair and --betti are mutually exclusive");
  const auto K = doc.complex();
  auto rep = bbcg_summands(K, spaces(o, K.m()), ring_or(o, CoefficientRing::Z()));
  const auto c = certify_fwf_trivial(K, {.budget = o.budget});
  rep.desuspended = c.verdict == Verdict::trivial;
  auto out = to_json(rep);
  out["name"] = doc.name;
  out["certificate_rule"] = c.rule ? Json(to_string(*c.rule)) : Json(nullptr);
  return print(out, kOk);
}

int cmd_fill(const ComplexDocument& doc, const Options& o) {
  const auto K = doc.complex();
  if (o.homology) {
    const auto h = homology_fillable(K);
    Json comps = Json::array();
    for (const auto& c : h.components) {
      Json fills = Json::array();
      for (const auto& [R, f] : c.fillings) {
        Json e{{"coefficients", R.to_string()}, {"status", to_string(f.status)}};
        if (f.certificate) e["nonfaces"] = to_json(f.certificate->nonfaces);
        fills.push_back(e);
      }
      comps.push_back({{"vertices", to_json(c.vertices)},
                       {"primes", c.primes},
                       {"fillings", fills},
                       {"simply_connected_surrogate", c.simply_connected_surrogate}});
    }
    return print({{"name", doc.name}, {"verdict", to_string(h.verdict)}, {"components", comps}},
                 h.verdict == FillVerdict::refuted ? kNegative : kOk);
  }
  const auto R = ring_or(o, CoefficientRing::Z());
  const auto mode = R.is_field() ? FillMode::acyclic_over(R) : FillMode::contractible();
  const auto f = fill_search(K, mode, o.budget);
  Json out{{"name", doc.name}, {"mode", mode.to_string()}, {"status", to_string(f.status)}, {"nodes", f.nodes}};
  if (f.certificate) {
    out["nonfaces"] = to_json(f.certificate->nonfaces);
    out["filled_homology"] = to_json(f.certificate->filled_homology);
    if (f.certificate->collapse) {
      Json steps = Json::array();
      for (const auto& s : f.certificate->collapse->steps) steps.push_back({to_json(s.free_face), to_json(s.coface)});
      out["collapse"] = steps;
    }
  }
  return print(out, status_code(f.status));
}

int cmd_shell(const ComplexDocument& doc, const Options& o) {
  const auto K = doc.complex();
  const auto r = o.dual ? dual_shelling_search(K, o.budget) : shelling_search(K, o.budget);
  Json out{{"name", doc.name}, {"dual", o.dual}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.status == SearchStatus::found) out["order"] = to_json(r.order);
  return print(out, status_code(r.status));
}

int cmd_scm(const ComplexDocument& doc, const Options& o) {
  const auto K = doc.complex();
  const auto R = ring_or(o, CoefficientRing::Z());
  const bool scm = o.dual ? is_dual_scm(K, R) : is_scm(K, R);
  return print({{"name", doc.name}, {"dual", o.dual}, {"coefficients", R.to_string()}, {"scm", scm}},
               scm ? kOk : kNegative);
}

int cmd_gcd(const ComplexDocument& doc, const Options& o) {
  const auto r = strong_gcd_search(doc.complex(), o.budget);
  Json out{{"name", doc.name}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.status == SearchStatus::found) out["order"] = to_json(r.order);
  return print(out, status_code(r.status));
}

int cmd_corpus(const Options& o) {
  const auto entries = corpus::all();
  if (o.name.empty()) {
    Json names = Json::array();
    for (const auto& e : entries) names.push_back(e.name);
    return print({{"complexes", names}}, kOk);
  }
  for (const auto& e : entries)
    if (e.name == o.name)
      return print({{"name", e.name}, {"m", e.complex.m()}, {"generators", facets_json(e.complex)}}, kOk);
  std::cerr << "error: no bundled complex named '" << o.name << "'\n";
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of simplicial complexes and their real moment-angle complexes"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const ComplexDocument&, const Options&);
  struct Command {
    const char* name;
    const char* help;
    Handler run;
  };
  const Command commands[] = {
      {"homology", "reduced simplicial homology", cmd_homology},
      {"rmac", "cubical homology of the real moment-angle complex", cmd_rmac},
      {"dual", "Alexander dual", cmd_dual},
      {"nonfaces", "minimal non-faces", cmd_nonfaces},
      {"golod", "Golodness over Z, Q and the relevant Z/p", cmd_golod},
      {"certify", "certify triviality of the fat wedge filtration", cmd_certify},
      {"bbcg", "wedge decomposition report", cmd_bbcg},
      {"fill", "search for a filling by minimal non-faces", cmd_fill},
      {"shell", "search for a shelling order", cmd_shell},
      {"scm", "sequential Cohen-Macaulayness", cmd_scm},
      {"gcd", "search for a strong gcd order of the minimal non-faces", cmd_gcd},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "complex document (JSON)")->required();
    const std::string n = c.name;
    if (n == "homology" || n == "rmac" || n == "bbcg" || n == "fill" || n == "scm")
      sub->add_option("--coeff", o.coeff, "Z, Q or Zp:<p>");
    if (n == "certify" || n == "bbcg" || n == "fill" || n == "shell" || n == "gcd")
      sub->add_option("--budget-nodes", o.budget, "search budget")->check(CLI::PositiveNumber);
    if (n == "rmac") {
      sub->add_option("--max-m", o.max_m, "largest m accepted by the cube model")->check(CLI::Range(1, 32));
      sub->add_option("--level", o.level, "stop at this level of the fat wedge filtration")
          ->check(CLI::NonNegativeNumber);
    }
    if (n == "certify") sub->add_flag("--all-rules", o.all_rules, "evaluate every rule");
    if (n == "bbcg") {
      sub->add_option("--pair", o.pair, "use the sphere pair (D^n, S^(n-1)) at every vertex")
          ->check(CLI::PositiveNumber);
      sub->add_option("--betti", o.betti, "Betti coefficients b0,b1,... per vertex, separated by ';'");
    }
    if (n == "shell" || n == "scm") sub->add_flag("--dual", o.dual, "work with the Alexander dual");
    if (n == "fill") sub->add_flag("--homology", o.homology, "homology fillability per component");
    subs.emplace_back(sub, c.run);
  }
  auto* corpus_cmd = app.add_subcommand("corpus", "list bundled complexes or print one");
  corpus_cmd->add_option("name", o.name, "bundled complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (corpus_cmd->parsed()) return cmd_corpus(o);
    for (const auto& [sub, run] : subs)
      if (sub->parsed()) return run(load_complex(o.file), o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

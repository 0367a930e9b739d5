#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "cubical.hpp"
#include "fillable.hpp"
#include "gcd.hpp"
#include "golod.hpp"
#include "homology.hpp"
#include "scm.hpp"
#include "shelling.hpp"

namespace fwf {

enum class Verdict { trivial, nontrivial, unknown };

enum class Rule {
  DIM_GE_M_MINUS_2,
  FLAG_CHORDAL,
  LOW_DUAL_DIM,
  NEIGHBORLY_DK,
  DUAL_SHELLABLE,
  DUAL_SCM_Z,
  ALL_FULLSUB_FILLABLE,
  ALL_FULLSUB_HOMOLOGY_FILLABLE,
  NON_GOLOD_OBSTRUCTION,
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "trivial";
    case Verdict::nontrivial: return "nontrivial";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::DIM_GE_M_MINUS_2: return "DIM_GE_M_MINUS_2";
    case Rule::FLAG_CHORDAL: return "FLAG_CHORDAL";
    case Rule::LOW_DUAL_DIM: return "LOW_DUAL_DIM";
    case Rule::NEIGHBORLY_DK: return "NEIGHBORLY_DK";
    case Rule::DUAL_SHELLABLE: return "DUAL_SHELLABLE";
    case Rule::DUAL_SCM_Z: return "DUAL_SCM_Z";
    case Rule::ALL_FULLSUB_FILLABLE: return "ALL_FULLSUB_FILLABLE";
    case Rule::ALL_FULLSUB_HOMOLOGY_FILLABLE: return "ALL_FULLSUB_HOMOLOGY_FILLABLE";
    case Rule::NON_GOLOD_OBSTRUCTION: return "NON_GOLOD_OBSTRUCTION";
  }
  return "?";
}

enum class RuleStatus { fired, failed, exhausted, not_applicable, skipped };

inline std::string to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::fired: return "fired";
    case RuleStatus::failed: return "failed";
    case RuleStatus::exhausted: return "exhausted";
    case RuleStatus::not_applicable: return "not_applicable";
    case RuleStatus::skipped: return "skipped";
  }
  return "?";
}

/// Per-full-subcomplex outcome for rules 7 and 8.
struct SubcomplexOutcome {
  VertexSet I;
  std::string status;  ///< fill status or homology-fillable verdict
  std::vector<VertexSet> filling;
};

struct RuleOutcome {
  Rule rule;
  RuleStatus status = RuleStatus::skipped;
  std::string detail;
  std::optional<ShellingResult> shelling;  ///< of K^∨, rule 5
  std::optional<int> dK;                   ///< rule 4
  int neighborliness = -1;                 ///< rule 4
  std::vector<SubcomplexOutcome> subcomplexes;
};

struct TrivialityCertificate {
  Verdict verdict = Verdict::unknown;
  std::optional<Rule> rule;
  std::vector<RuleOutcome> rules;
  std::optional<GolodReport> golod;
  bool any_exhausted() const {
    for (const auto& r : rules)
      if (r.status == RuleStatus::exhausted) return true;
    return false;
  }
};

struct CertifyOptions {
  bool all_rules = false;       ///< keep evaluating after the first rule fires
  long budget = kDefaultSearchBudget;
  bool check_soundness = true;  ///< recompute Golodness when a rule fires
};

namespace detail {

inline void rule_dim(const SimplicialComplex& K, RuleOutcome& out) {
  out.detail = "dim K = " + std::to_string(K.dimension()) + ", m = " + std::to_string(K.m());
  out.status = K.dimension() >= K.m() - 2 ? RuleStatus::fired : RuleStatus::failed;
}

inline void rule_flag_chordal(const SimplicialComplex& K, RuleOutcome& out) {
  const bool flag = flag_complex_of_skeleton(skeleton(K, 1)) == K;
  const bool chordal = is_chordal_skeleton(skeleton(K, 1));
  out.detail = std::string("flag: ") + (flag ? "yes" : "no") + ", chordal 1-skeleton: " + (chordal ? "yes" : "no");
  out.status = flag && chordal ? RuleStatus::fired : RuleStatus::failed;
}

inline void rule_low_dual_dim(const SimplicialComplex& K, RuleOutcome& out) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) {
    out.status = RuleStatus::not_applicable;
    out.detail = "Alexander dual is void";
    return;
  }
  const int d = alexander_dual(K).dimension();
  out.detail = "dim K^v = " + std::to_string(d);
  out.status = 2 * d + 2 < K.m() ? RuleStatus::fired : RuleStatus::failed;
}

inline void rule_neighborly(const std::vector<HomologyProfile>& integral_full, const SimplicialComplex& K,
                            RuleOutcome& out) {
  out.dK = dK(integral_full);
  out.neighborliness = max_neighborliness(K);
  if (!out.dK) {
    out.status = RuleStatus::failed;
    out.detail = "every full subcomplex is acyclic, d(K) undefined";
    return;
  }
  const int need = (*out.dK + 1) / 2;
  out.detail = "d(K) = " + std::to_string(*out.dK) + ", needs " + std::to_string(need) + "-neighborly, K is " +
               std::to_string(out.neighborliness) + "-neighborly";
  out.status = out.neighborliness >= need ? RuleStatus::fired : RuleStatus::failed;
}

inline void rule_dual_shellable(const SimplicialComplex& K, long budget, RuleOutcome& out) {
  auto r = dual_shelling_search(K, budget);
  out.detail = "shelling of K^v: " + to_string(r.status);
  out.status = r.status == SearchStatus::found       ? RuleStatus::fired
               : r.status == SearchStatus::exhausted ? RuleStatus::exhausted
                                                     : RuleStatus::failed;
  out.shelling = std::move(r);
}

inline void rule_dual_scm(const SimplicialComplex& K, RuleOutcome& out) {
  const bool scm = is_dual_scm(K, CoefficientRing::Z());
  out.detail = std::string("K^v SCM over Z: ") + (scm ? "yes" : "no");
  out.status = scm ? RuleStatus::fired : RuleStatus::failed;
}

/// Rules 7 and 8 stop at the first full subcomplex that is not certified.
template <class Check>
void rule_all_full(const SimplicialComplex& K, Check check, RuleOutcome& out) {
  out.status = RuleStatus::fired;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << K.m()); ++mask) {
    SubcomplexOutcome sub{VertexSet(mask), "", {}};
    const RuleStatus s = check(full_subcomplex(K, sub.I), sub);
    out.subcomplexes.push_back(std::move(sub));
    if (s != RuleStatus::fired) {
      out.status = s;
      out.detail = "first failure at I = " + VertexSet(mask).to_string();
      return;
    }
  }
  out.detail = "all " + std::to_string(out.subcomplexes.size()) + " full subcomplexes certified";
}

}  // namespace detail

/// Try the sufficient conditions for triviality of the fat wedge filtration
/// of the real moment-angle complex, cheapest first. With ghost vertices
/// only rules 1, 3 and 4 apply. When nothing fires a failure of Golodness
/// proves non-triviality; otherwise the verdict stays unknown.
inline TrivialityCertificate certify_fwf_trivial(const SimplicialComplex& K, const CertifyOptions& opt = {}) {
  TrivialityCertificate cert;
  const bool ghosts = K.has_ghost_vertices();
  std::optional<std::vector<HomologyProfile>> integral;
  auto full = [&]() -> const std::vector<HomologyProfile>& {
    if (!integral) integral = full_subcomplex_homologies(K, CoefficientRing::Z());
    return *integral;
  };
  const Rule order[] = {Rule::DIM_GE_M_MINUS_2, Rule::FLAG_CHORDAL,   Rule::LOW_DUAL_DIM,
                        Rule::NEIGHBORLY_DK,    Rule::DUAL_SHELLABLE, Rule::DUAL_SCM_Z,
                        Rule::ALL_FULLSUB_FILLABLE, Rule::ALL_FULLSUB_HOMOLOGY_FILLABLE};
  for (Rule r : order) {
    RuleOutcome out{r, RuleStatus::skipped, "", std::nullopt, std::nullopt, -1, {}};
    const bool done = cert.rule.has_value() && !opt.all_rules;
    const bool needs_vertices = r == Rule::FLAG_CHORDAL || r == Rule::DUAL_SHELLABLE || r == Rule::DUAL_SCM_Z ||
                                r == Rule::ALL_FULLSUB_FILLABLE || r == Rule::ALL_FULLSUB_HOMOLOGY_FILLABLE;
    if (done) {
      out.detail = "an earlier rule fired";
    } else if (ghosts && needs_vertices) {
      out.status = RuleStatus::not_applicable;
      out.detail = "K has ghost vertices";
    } else {
      switch (r) {
        case Rule::DIM_GE_M_MINUS_2: detail::rule_dim(K, out); break;
        case Rule::FLAG_CHORDAL: detail::rule_flag_chordal(K, out); break;
        case Rule::LOW_DUAL_DIM: detail::rule_low_dual_dim(K, out); break;
        case Rule::NEIGHBORLY_DK: detail::rule_neighborly(full(), K, out); break;
        case Rule::DUAL_SHELLABLE: detail::rule_dual_shellable(K, opt.budget, out); break;
        case Rule::DUAL_SCM_Z: detail::rule_dual_scm(K, out); break;
        case Rule::ALL_FULLSUB_FILLABLE:
          detail::rule_all_full(K, [&](const SimplicialComplex& L, SubcomplexOutcome& sub) {
            const auto f = fill_search(L, FillMode::contractible(), opt.budget);
            sub.status = to_string(f.status);
            if (f.certificate) sub.filling = f.certificate->nonfaces;
            return f.status == SearchStatus::found       ? RuleStatus::fired
                   : f.status == SearchStatus::exhausted ? RuleStatus::exhausted
                                                         : RuleStatus::failed;
          }, out);
          break;
        case Rule::ALL_FULLSUB_HOMOLOGY_FILLABLE:
          detail::rule_all_full(K, [&](const SimplicialComplex& L, SubcomplexOutcome& sub) {
            const auto h = homology_fillable(L);
            sub.status = to_string(h.verdict);
            return h.verdict == FillVerdict::certified ? RuleStatus::fired : RuleStatus::failed;
          }, out);
          break;
        case Rule::NON_GOLOD_OBSTRUCTION: break;
      }
      if (out.status == RuleStatus::fired && !cert.rule) cert.rule = r;
    }
    cert.rules.push_back(std::move(out));
  }

  if (cert.rule) {
    cert.verdict = Verdict::trivial;
    if (opt.check_soundness) {
      cert.golod = golod_report(K);
      if (!cert.golod->golod)
        throw std::logic_error("soundness violated: rule " + to_string(*cert.rule) + " fired on a non-Golod complex");
    }
    return cert;
  }
  cert.golod = golod_report(K);
  if (!cert.golod->golod) {
    cert.verdict = Verdict::nontrivial;
    cert.rule = Rule::NON_GOLOD_OBSTRUCTION;
  }
  return cert;
}

// --- BBCG wedge report ------------------------------------------------------

/// Reduced Betti numbers b_q of a space with free homology.
struct SpacePoincare {
  std::vector<long long> betti;

  /// The sphere S^{n−1} of the pair (D^n, S^{n−1}).
  static SpacePoincare sphere_pair(int n) {
    if (n < 1) throw std::invalid_argument("sphere pair needs n >= 1");
    SpacePoincare s;
    s.betti.assign(static_cast<std::size_t>(n), 0);
    s.betti.back() = 1;
    return s;
  }

  /// Comma-separated coefficients b_0,b_1,...
  static SpacePoincare parse(const std::string& text) {
    SpacePoincare s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad Betti coefficient '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad Betti coefficient '" + item + "'");
      if (v < 0) throw std::invalid_argument("Betti polynomial has a negative coefficient");
      s.betti.push_back(v);
    }
    return s;
  }
};

struct WedgeSummand {
  VertexSet I;
  HomologyProfile homology;  ///< H̃_*(|ΣK_I| ∧ X̂^I)
};

struct WedgeReport {
  std::vector<WedgeSummand> summands;  ///< nonzero summands, I in mask order
  HomologyProfile aggregate;
  std::vector<long long> poincare;              ///< free ranks of the aggregate by degree
  std::optional<std::vector<int>> sphere_list;  ///< when everything is free
  bool desuspended = false;
};

/// H̃_*(|ΣK_I| ∧ X̂^I) for every nonempty I: the Betti polynomials of the X_i
/// are multiplied and the (torsion-carrying) homology of K_I is shifted up by
/// one and spread along them.
inline WedgeReport bbcg_summands(const SimplicialComplex& K, const std::vector<SpacePoincare>& X,
                                 const CoefficientRing& R) {
  if (static_cast<int>(X.size()) != K.m())
    throw std::invalid_argument("need one Betti polynomial per vertex (" + std::to_string(K.m()) + ")");
  for (const auto& x : X)
    for (auto b : x.betti)
      if (b < 0) throw std::invalid_argument("Betti polynomial has a negative coefficient");
  WedgeReport rep;
  const auto full = full_subcomplex_homologies(K, R);
  std::vector<std::vector<HomologyGroup>> by_degree;
  auto add = [](std::vector<std::vector<HomologyGroup>>& v, std::size_t q, HomologyGroup g) {
    if (v.size() <= q) v.resize(q + 1);
    v[q].push_back(std::move(g));
  };
  for (std::uint64_t mask = 1; mask < full.size(); ++mask) {
    const VertexSet I(mask);
    std::vector<long long> poly{1};
    for (int v : I.vertices()) {
      const auto& b = X[static_cast<std::size_t>(v - 1)].betti;
      std::vector<long long> next(poly.size() + b.size(), 0);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) next[i + j] += poly[i] * b[j];
      poly = std::move(next);
    }
    std::vector<std::vector<HomologyGroup>> parts;
    const auto& H = full[mask];
    for (int q = H.min_degree; q <= H.max_degree(); ++q) {
      const auto& g = H.at(q);
      if (g.is_zero()) continue;
      for (std::size_t s = 0; s < poly.size(); ++s)
        for (long long c = 0; c < poly[s]; ++c) add(parts, static_cast<std::size_t>(q + 1) + s, g);
    }
    WedgeSummand sum{I, {}};
    sum.homology.ring = R;
    sum.homology.min_degree = 0;
    for (std::size_t q = 0; q < parts.size(); ++q) {
      sum.homology.groups.push_back(direct_sum(parts[q]));
      for (auto& g : parts[q]) add(by_degree, q, g);
    }
    sum.homology.trim();
    if (!sum.homology.is_zero()) rep.summands.push_back(std::move(sum));
  }
  rep.aggregate.ring = R;
  rep.aggregate.min_degree = 0;
  for (const auto& parts : by_degree) rep.aggregate.groups.push_back(direct_sum(parts));
  rep.aggregate.trim();
  for (const auto& g : rep.aggregate.groups) rep.poincare.push_back(g.free_rank);
  if (!rep.aggregate.has_torsion()) {
    std::vector<int> spheres;
    for (const auto& s : rep.summands)
      for (int q = 0; q <= s.homology.max_degree(); ++q)
        for (long long c = 0; c < s.homology.betti(q); ++c) spheres.push_back(q);
    rep.sphere_list = std::move(spheres);
  }
  return rep;
}

}  // namespace fwf

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "collapse.hpp"
#include "complex.hpp"
#include "homology.hpp"
#include "search.hpp"

namespace fwf {

/// What a filling must achieve: contractibility (certified by a collapse of
/// the filled complex, refuted through Z-acyclicity) or acyclicity over a
/// field.
struct FillMode {
  enum class Kind { contractible_surrogate, acyclic };
  Kind kind = Kind::contractible_surrogate;
  CoefficientRing ring = CoefficientRing::Z();

  static FillMode contractible() { return {}; }
  static FillMode p_acyclic(std::uint64_t p) { return {Kind::acyclic, CoefficientRing::Zp(p)}; }
  static FillMode acyclic_over(const CoefficientRing& R) {
    if (!R.is_field()) throw std::invalid_argument("acyclic fillings are decided over a field");
    return {Kind::acyclic, R};
  }
  std::string to_string() const {
    return kind == Kind::contractible_surrogate ? "contractible_surrogate" : "acyclic:" + ring.to_string();
  }
};

struct FillingCertificate {
  FillMode mode;
  std::vector<VertexSet> nonfaces;     ///< M_1, ..., M_r
  HomologyProfile filled_homology;     ///< reduced homology of K ∪ M_1 ∪ ... ∪ M_r
  std::optional<CollapseResult> collapse;
};

struct FillResult {
  SearchStatus status = SearchStatus::none;  ///< found, refuted or exhausted
  std::optional<FillingCertificate> certificate;
  long nodes = 0;
};

/// K with the given minimal non-faces added as simplices.
inline SimplicialComplex fill(const SimplicialComplex& K, const std::vector<VertexSet>& nonfaces) {
  std::vector<VertexSet> gens = K.facets();
  gens.insert(gens.end(), nonfaces.begin(), nonfaces.end());
  return SimplicialComplex::from_maximal(K.m(), detail::maximal_sets(std::move(gens)), K.labels());
}

namespace detail {

/// Row-echelon table over a field for incremental independence tests.
template <class F>
struct Echelon {
  using V = typename F::value_type;
  F field;
  std::vector<std::vector<V>> rows;
  std::vector<std::size_t> pivots;

  bool insert(std::vector<V> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const V c = v[pivots[r]];
      if (field.is_zero(c)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = field.sub(v[i], field.mul(c, rows[r][i]));
    }
    std::size_t p = 0;
    while (p < v.size() && field.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    const V inv = field.unit_inverse(v[p]);
    for (auto& x : v) x = field.mul(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

/// For every minimal non-face M (|M| = d + 2), the class of ∂M in H̃_d(K; F).
/// Adding a set S of minimal non-faces kills homology exactly when, degree by
/// degree, the classes of S form a basis (long exact sequence of (K ∪ S, K),
/// whose relative chains have zero differential).
template <class F>
struct FillingClasses {
  using V = typename F::value_type;
  std::vector<VertexSet> nonfaces;          ///< sorted
  std::vector<int> degree;                  ///< d = |M| − 2
  std::vector<std::vector<V>> coordinates;  ///< in a basis of H̃_d(K; F)
  std::vector<std::size_t> betti;           ///< index d + 1

  FillingClasses(const F& field, const SimplicialComplex& K) {
    nonfaces = minimal_nonfaces(K);
    const auto C = simplicial_chain_complex(K);
    std::vector<HomologyBasis<F>> bases;
    for (int d = -1; d <= K.dimension(); ++d) {
      bases.push_back(homology_basis(field, C, d));
      betti.push_back(bases.back().size());
    }
    for (auto M : nonfaces) {
      const int d = M.size() - 2;
      degree.push_back(d);
      if (d > K.dimension()) {
        coordinates.emplace_back();
        continue;
      }
      std::vector<V> chain(static_cast<std::size_t>(C.dim(d)), field.zero());
      int sign = 1;
      for (int v : M.vertices()) {
        chain[static_cast<std::size_t>(K.face_index(M.without(v)))] = sign > 0 ? field.one() : field.neg(field.one());
        sign = -sign;
      }
      coordinates.push_back(bases[static_cast<std::size_t>(d + 1)].coordinates(chain));
    }
  }

  std::size_t needed(int d) const {
    return d + 1 < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(d + 1)] : 0;
  }
  std::size_t total_needed() const {
    std::size_t n = 0;
    for (auto b : betti) n += b;
    return n;
  }
};

/// Greedy (lexicographically first) basis; nullopt when the classes do not
/// span in some degree.
template <class F>
std::optional<std::vector<VertexSet>> greedy_filling(const F& field, const SimplicialComplex& K) {
  FillingClasses<F> fc(field, K);
  std::vector<Echelon<F>> tables(fc.betti.size(), Echelon<F>{field, {}, {}});
  std::vector<VertexSet> chosen;
  for (std::size_t i = 0; i < fc.nonfaces.size(); ++i) {
    const int d = fc.degree[i];
    if (fc.needed(d) == 0) continue;
    auto& T = tables[static_cast<std::size_t>(d + 1)];
    if (T.rows.size() < fc.needed(d) && T.insert(fc.coordinates[i])) chosen.push_back(fc.nonfaces[i]);
  }
  for (std::size_t k = 0; k < tables.size(); ++k)
    if (tables[k].rows.size() != fc.betti[k]) return std::nullopt;
  return chosen;
}

}  // namespace detail

/// Search for minimal non-faces M_1..M_r making K ∪ M_1 ∪ ... ∪ M_r
/// contractible (surrogate: Z-acyclic and collapsible) or acyclic over a
/// field. Candidates are visited in size-lexicographic order of the sorted
/// non-face list, so the reported filling is canonical.
inline FillResult fill_search(const SimplicialComplex& K, const FillMode& mode, long budget = kDefaultSearchBudget) {
  FillResult res;
  if (mode.kind == FillMode::Kind::acyclic) {
    auto S = with_field(mode.ring, [&](auto F) { return detail::greedy_filling(F, K); });
    res.nodes = 1;
    if (!S) {
      res.status = SearchStatus::refuted;
      return res;
    }
    FillingCertificate cert{mode, *S, reduced_homology(fill(K, *S), mode.ring), std::nullopt};
    res.status = cert.filled_homology.is_zero() ? SearchStatus::found : SearchStatus::refuted;
    res.certificate = std::move(cert);
    return res;
  }

  // Every Z-acyclic filling is in particular a Q-basis; enumerate those in
  // lexicographic order of index lists.
  detail::FillingClasses<Rationals> fc(Rationals{}, K);
  const std::size_t n = fc.nonfaces.size(), target = fc.total_needed();
  std::vector<std::vector<std::size_t>> suffix_count(n + 1, std::vector<std::size_t>(fc.betti.size(), 0));
  for (std::size_t i = n; i-- > 0;) {
    suffix_count[i] = suffix_count[i + 1];
    const int d = fc.degree[i];
    if (d + 1 < static_cast<int>(fc.betti.size())) ++suffix_count[i][static_cast<std::size_t>(d + 1)];
  }
  bool any_acyclic = false, out_of_budget = false;
  std::vector<std::size_t> chosen;
  using Tables = std::vector<detail::Echelon<Rationals>>;

  auto dfs = [&](auto&& self, std::size_t start, const Tables& tables) -> bool {
    if (++res.nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (chosen.size() == target) {
      std::vector<VertexSet> S;
      for (auto i : chosen) S.push_back(fc.nonfaces[i]);
      const auto filled = fill(K, S);
      auto H = reduced_homology(filled, CoefficientRing::Z());
      if (!H.is_zero()) return false;
      any_acyclic = true;
      auto col = collapse_search(filled, budget - res.nodes);
      res.nodes += col.nodes;
      if (col.status == SearchStatus::found) {
        res.certificate = FillingCertificate{mode, std::move(S), std::move(H), std::move(col)};
        return true;
      }
      if (col.status == SearchStatus::exhausted) out_of_budget = true;
      return false;
    }
    for (std::size_t k = 0; k < tables.size(); ++k)
      if (tables[k].rows.size() + suffix_count[start][k] < fc.betti[k]) return false;
    for (std::size_t i = start; i < n; ++i) {
      const int d = fc.degree[i];
      const auto slot = static_cast<std::size_t>(d + 1);
      if (slot >= tables.size() || tables[slot].rows.size() == fc.betti[slot]) continue;
      Tables next = tables;
      if (!next[slot].insert(fc.coordinates[i])) continue;
      chosen.push_back(i);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  };
  Tables start(fc.betti.size(), detail::Echelon<Rationals>{Rationals{}, {}, {}});
  if (dfs(dfs, 0, start)) res.status = SearchStatus::found;
  else if (out_of_budget || any_acyclic) res.status = SearchStatus::exhausted;
  else res.status = SearchStatus::refuted;
  return res;
}

/// Spanning facets of a shelling F_1..F_t: those whose whole boundary is
/// already present. For F_1 that happens only when F_1 = ∅ (the void
/// boundary). Their complements fill K when the shelling is of K^∨.
inline std::vector<VertexSet> spanning_facets(const std::vector<VertexSet>& order) {
  std::vector<VertexSet> out;
  if (!order.empty() && order[0].empty()) out.push_back(order[0]);
  for (std::size_t k = 1; k < order.size(); ++k) {
    bool spanning = true;
    for (int w : order[k].vertices()) {
      const VertexSet r = order[k].without(w);
      if (!std::any_of(order.begin(), order.begin() + static_cast<long>(k), [&](VertexSet G) { return r.is_subset_of(G); }))
        spanning = false;
    }
    if (spanning) out.push_back(order[k]);
  }
  return out;
}

/// The filling of K read off from a shelling of K^∨.
inline std::vector<VertexSet> filling_from_dual_shelling(const SimplicialComplex& K, const std::vector<VertexSet>& order) {
  std::vector<VertexSet> out;
  for (auto F : spanning_facets(order)) out.push_back(K.ground_set() - F);
  std::sort(out.begin(), out.end());
  return out;
}

enum class FillVerdict { certified, refuted, unknown };

inline std::string to_string(FillVerdict v) {
  switch (v) {
    case FillVerdict::certified: return "certified";
    case FillVerdict::refuted: return "refuted";
    case FillVerdict::unknown: return "unknown";
  }
  return "?";
}

struct ComponentFillability {
  VertexSet vertices;                                  ///< in K's labels
  std::vector<std::uint64_t> primes;                   ///< primes checked besides Q
  std::vector<std::pair<CoefficientRing, FillResult>> fillings;
  bool simply_connected_surrogate = false;
};

struct HomologyFillability {
  FillVerdict verdict = FillVerdict::certified;
  std::vector<ComponentFillability> components;
};

/// L̂ surrogate for simple connectivity: L together with its minimal
/// non-faces of size ≥ 3 has a chordal 1-skeleton whose 3-cliques all span
/// 2-faces, so its 2-skeleton is that of a contractible flag complex.
inline bool hat_is_simply_connected_surrogate(const SimplicialComplex& L) {
  std::vector<VertexSet> big;
  for (auto M : minimal_nonfaces(L))
    if (M.size() >= 3) big.push_back(M);
  const auto hat = fill(L, big);
  const auto graph = skeleton(hat, 1);
  if (!is_chordal_skeleton(graph)) return false;
  const auto adj = detail::adjacency(graph);
  for (int a : hat.vertex_set().vertices())
    for (int b : adj[static_cast<std::size_t>(a)].vertices())
      for (int c : (adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)]).vertices())
        if (a < b && b < c && !hat.contains(VertexSet::of({a, b, c}))) return false;
  return true;
}

/// Homology fillability, one connected component at a time. The prime set
/// is finite: torsion primes of H̃(L; Z) and of H̃(L ∪ S; Z) for the canonical
/// rational filling S; for any other prime that S already works.
inline HomologyFillability homology_fillable(const SimplicialComplex& K) {
  HomologyFillability out;
  bool unknown = false;
  for (auto comp : connected_components(K)) {
    ComponentFillability cf;
    cf.vertices = comp;
    const auto L = full_subcomplex(K, comp);
    auto q = fill_search(L, FillMode::acyclic_over(CoefficientRing::Q()));
    const bool q_ok = q.status == SearchStatus::found;
    std::set<std::uint64_t> primes;
    auto collect = [&](const HomologyProfile& H) {
      for (const auto& g : H.groups)
        for (const auto& t : g.torsion)
          for (auto p : prime_factors(t)) primes.insert(p);
    };
    collect(reduced_homology(L, CoefficientRing::Z()));
    if (q_ok) collect(reduced_homology(fill(L, q.certificate->nonfaces), CoefficientRing::Z()));
    cf.fillings.emplace_back(CoefficientRing::Q(), std::move(q));
    cf.primes.assign(primes.begin(), primes.end());
    for (auto p : cf.primes) cf.fillings.emplace_back(CoefficientRing::Zp(p), fill_search(L, FillMode::p_acyclic(p)));
    cf.simply_connected_surrogate = hat_is_simply_connected_surrogate(L);
    for (const auto& [R, f] : cf.fillings)
      if (f.status == SearchStatus::refuted) out.verdict = FillVerdict::refuted;
    if (!cf.simply_connected_surrogate) unknown = true;
    out.components.push_back(std::move(cf));
  }
  if (out.verdict != FillVerdict::refuted && unknown) out.verdict = FillVerdict::unknown;
  return out;
}

}  // namespace fwf

#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "complex.hpp"
#include "search.hpp"

namespace fwf {

struct ElementaryCollapse {
  VertexSet free_face;
  VertexSet coface;
  friend bool operator==(const ElementaryCollapse&, const ElementaryCollapse&) = default;
};

struct CollapseResult {
  SearchStatus status = SearchStatus::none;
  std::vector<ElementaryCollapse> steps;
  long nodes = 0;
};

namespace detail {

/// Maximal faces after removing the free face σ = F − v and F itself.
inline std::vector<VertexSet> collapse_facets(const std::vector<VertexSet>& facets, std::size_t which, int v) {
  const VertexSet F = facets[which];
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (i != which) out.push_back(facets[i]);
  for (int w : F.vertices()) {
    if (w == v) continue;
    const VertexSet r = F.without(w);
    if (!std::any_of(out.begin(), out.end(), [&](VertexSet G) { return r.is_subset_of(G); })) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct FacetListHash {
  std::size_t operator()(const std::vector<VertexSet>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto s : v) h = (h ^ s.bits()) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Whether `steps` are valid elementary collapses of K, in order, ending at a
/// single vertex (or at {∅} when K = {∅}).
inline bool is_collapse_sequence(const SimplicialComplex& K, const std::vector<ElementaryCollapse>& steps) {
  std::vector<VertexSet> faces;
  K.for_each_face([&](VertexSet s) { faces.push_back(s); });
  for (const auto& st : steps) {
    if (st.free_face.empty() || st.coface.size() != st.free_face.size() + 1 || !st.free_face.is_subset_of(st.coface))
      return false;
    int above = 0;
    bool has_coface = false;
    for (auto f : faces) {
      if (f != st.free_face && st.free_face.is_subset_of(f)) ++above;
      if (f == st.coface) has_coface = true;
    }
    if (!has_coface || above != 1) return false;
    std::erase_if(faces, [&](VertexSet f) { return f == st.free_face || f == st.coface; });
  }
  if (K.vertex_set().empty()) return faces.size() == 1;
  return faces.size() == 2;  // ∅ and one vertex
}

/// Depth-first search over elementary collapses with a memo of complexes
/// already known to be dead ends. `found` certifies collapsibility (hence
/// contractibility); `none` proves only that no collapse sequence exists.
inline CollapseResult collapse_search(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  CollapseResult res;
  if (K.vertex_set().empty()) {
    res.status = SearchStatus::found;
    return res;
  }
  std::unordered_set<std::vector<VertexSet>, detail::FacetListHash> dead;
  bool out_of_budget = false;
  auto dfs = [&](auto&& self, const std::vector<VertexSet>& facets) -> bool {
    if (facets.size() == 1 && facets[0].size() == 1) return true;
    if (dead.count(facets)) return false;
    if (++res.nodes > budget) {
      out_of_budget = true;
      return false;
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const VertexSet F = facets[i];
      if (F.size() < 2) continue;
      for (int v : F.vertices()) {
        const VertexSet sigma = F.without(v);
        bool free = true;
        for (std::size_t j = 0; j < facets.size() && free; ++j)
          if (j != i && sigma.is_subset_of(facets[j])) free = false;
        if (!free) continue;
        res.steps.push_back({sigma, F});
        if (self(self, detail::collapse_facets(facets, i, v))) return true;
        res.steps.pop_back();
        if (out_of_budget) return false;
      }
    }
    dead.insert(facets);
    return false;
  };
  auto start = K.facets();
  std::sort(start.begin(), start.end());
  if (dfs(dfs, start)) res.status = SearchStatus::found;
  else res.status = out_of_budget ? SearchStatus::exhausted : SearchStatus::none;
  return res;
}

}  // namespace fwf

#pragma once

#include <algorithm>
#include <vector>

#include "complex.hpp"
#include "search.hpp"

namespace fwf {

struct ShellingResult {
  SearchStatus status = SearchStatus::none;
  std::vector<VertexSet> order;  ///< facets F_1, ..., F_t when found
  long nodes = 0;
};

namespace detail {

/// ⟨F⟩ ∩ ⟨previous⟩ is pure of dimension |F|−2: every F ∩ G lies in some
/// ridge F ∩ G' with |F ∩ G'| = |F| − 1.
inline bool shells_onto(VertexSet F, const std::vector<VertexSet>& previous) {
  std::vector<VertexSet> ridges;
  for (auto G : previous)
    if ((F & G).size() == F.size() - 1) ridges.push_back(F & G);
  for (auto G : previous) {
    const VertexSet meet = F & G;
    if (!std::any_of(ridges.begin(), ridges.end(), [&](VertexSet r) { return meet.is_subset_of(r); }))
      return false;
  }
  return true;
}

}  // namespace detail

/// Whether `order` lists the facets of K once each and is a shelling.
inline bool is_shelling_order(const SimplicialComplex& K, const std::vector<VertexSet>& order) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  auto facets = K.facets();
  std::sort(facets.begin(), facets.end());
  if (sorted != facets) return false;
  std::vector<VertexSet> prefix;
  for (auto F : order) {
    if (!detail::shells_onto(F, prefix)) return false;
    prefix.push_back(F);
  }
  return true;
}

/// Backtracking search for a (possibly non-pure) shelling. Facets are placed
/// in order of non-increasing dimension, which loses nothing by the
/// rearrangement lemma for non-pure shellings; among equal dimensions the
/// candidates sharing the most ridges with the placed facets go first. Dead
/// sets of placed facets are memoised, since extendability depends only on
/// the set.
inline ShellingResult shelling_search(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  ShellingResult res;
  auto facets = K.facets();
  std::stable_sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  const std::size_t t = facets.size();
  detail::ItemSet placed(t);
  detail::DeadStates dead;
  std::vector<VertexSet> prefix;
  bool out_of_budget = false;

  auto dfs = [&](auto&& self) -> bool {
    if (prefix.size() == t) return true;
    if (dead.count(placed)) return false;
    if (++res.nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int top = -1;
    for (std::size_t i = 0; i < t; ++i)
      if (!placed.test(i)) top = std::max(top, facets[i].size());
    std::vector<std::pair<int, std::size_t>> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (placed.test(i) || facets[i].size() != top) continue;
      if (!detail::shells_onto(facets[i], prefix)) continue;
      int ridges = 0;
      for (auto G : prefix) ridges += (facets[i] & G).size() == top - 1;
      cands.emplace_back(-ridges, i);
    }
    std::stable_sort(cands.begin(), cands.end(), [](auto a, auto b) { return a.first < b.first; });
    for (auto [score, i] : cands) {
      placed.set(i);
      prefix.push_back(facets[i]);
      if (self(self)) return true;
      prefix.pop_back();
      placed.reset(i);
      if (out_of_budget) return false;
    }
    dead.insert(placed);
    return false;
  };

  if (dfs(dfs)) {
    res.status = SearchStatus::found;
    res.order = prefix;
  } else {
    res.status = out_of_budget ? SearchStatus::exhausted : SearchStatus::none;
  }
  return res;
}

/// Shellability of the Alexander dual; the void dual (K the full simplex on
/// its ground set) counts as vacuously shellable.
inline ShellingResult dual_shelling_search(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) return {SearchStatus::found, {}, 0};
  return shelling_search(alexander_dual(K), budget);
}

inline bool is_dual_shellable(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  return dual_shelling_search(K, budget).status == SearchStatus::found;
}

}  // namespace fwf

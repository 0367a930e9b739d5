#pragma once

#include <algorithm>
#include <vector>

#include "complex.hpp"
#include "search.hpp"

namespace fwf {

struct OrderResult {
  SearchStatus status = SearchStatus::none;
  std::vector<VertexSet> order;
  long nodes = 0;
};

/// i < j, M_i ∩ M_j = ∅ ⟹ M_k ⊆ M_i ∪ M_j for some k > i, k ≠ j.
inline bool is_strong_gcd_order(const std::vector<VertexSet>& M) {
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      if (M[i].intersects(M[j])) continue;
      bool covered = false;
      for (std::size_t k = i + 1; k < M.size() && !covered; ++k)
        if (k != j && M[k].is_subset_of(M[i] | M[j])) covered = true;
      if (!covered) return false;
    }
  return true;
}

/// i < j, F_i ∪ F_j = ground ⟹ F_i ∩ F_j ⊆ F_k for some k < j, k ≠ i.
inline bool is_weak_shelling(const std::vector<VertexSet>& F, VertexSet ground) {
  for (std::size_t j = 0; j < F.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if ((F[i] | F[j]) != ground) continue;
      bool covered = false;
      for (std::size_t k = 0; k < j && !covered; ++k)
        if (k != i && (F[i] & F[j]).is_subset_of(F[k])) covered = true;
      if (!covered) return false;
    }
  return true;
}

namespace detail {

/// Build an ordering one item at a time; `fits(item, placed)` decides whether
/// the item may be added next given the set already placed, and must depend
/// only on that set. Dead sets are memoised.
template <class Fits>
OrderResult ordering_search(const std::vector<VertexSet>& items, Fits fits, long budget) {
  OrderResult res;
  const std::size_t n = items.size();
  ItemSet used(n);
  DeadStates dead;
  std::vector<VertexSet> placed;
  bool out_of_budget = false;
  auto dfs = [&](auto&& self) -> bool {
    if (placed.size() == n) return true;
    if (dead.count(used)) return false;
    if (++res.nodes > budget) {
      out_of_budget = true;
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used.test(i) || !fits(items[i], placed)) continue;
      used.set(i);
      placed.push_back(items[i]);
      if (self(self)) return true;
      placed.pop_back();
      used.reset(i);
      if (out_of_budget) return false;
    }
    dead.insert(used);
    return false;
  };
  if (dfs(dfs)) {
    res.status = SearchStatus::found;
    res.order = placed;
  } else {
    res.status = out_of_budget ? SearchStatus::exhausted : SearchStatus::none;
  }
  return res;
}

}  // namespace detail

/// Strong gcd-order of the minimal non-faces. The order is built from the
/// back: prepending M_i to a suffix can be checked against the suffix alone.
inline OrderResult strong_gcd_search(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  auto fits = [](VertexSet Mi, const std::vector<VertexSet>& suffix) {
    for (auto Mj : suffix) {
      if (Mi.intersects(Mj)) continue;
      const VertexSet U = Mi | Mj;
      if (!std::any_of(suffix.begin(), suffix.end(), [&](VertexSet Mk) { return Mk != Mj && Mk.is_subset_of(U); }))
        return false;
    }
    return true;
  };
  auto res = detail::ordering_search(minimal_nonfaces(K), fits, budget);
  std::reverse(res.order.begin(), res.order.end());
  return res;
}

/// Weak shelling of the facets of L (relative to its ground set), built
/// from the front.
inline OrderResult weak_shelling_search(const SimplicialComplex& L, long budget = kDefaultSearchBudget) {
  const VertexSet ground = L.ground_set();
  auto fits = [ground](VertexSet Fj, const std::vector<VertexSet>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if ((prefix[i] | Fj) != ground) continue;
      const VertexSet meet = prefix[i] & Fj;
      bool covered = false;
      for (std::size_t k = 0; k < prefix.size() && !covered; ++k)
        if (k != i && meet.is_subset_of(prefix[k])) covered = true;
      if (!covered) return false;
    }
    return true;
  };
  return detail::ordering_search(L.facets(), fits, budget);
}

/// Weak shelling of K^∨; the void dual is vacuously weakly shellable.
inline OrderResult dual_weak_shelling_search(const SimplicialComplex& K, long budget = kDefaultSearchBudget) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) return {SearchStatus::found, {}, 0};
  return weak_shelling_search(alexander_dual(K), budget);
}

}  // namespace fwf

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include <fwf/collapse.hpp>
#include <fwf/corpus.hpp>
#include <fwf/fillable.hpp>
#include <fwf/gcd.hpp>
#include <fwf/scm.hpp>
#include <fwf/shelling.hpp>

#include "support.hpp"

using namespace fwf;
using fwf::testing::cplx;
using fwf::testing::vs;

namespace {

/// Faces of ⟨gens⟩ by subset closure.
std::set<std::uint64_t> closure(const std::vector<VertexSet>& gens) {
  std::set<std::uint64_t> out;
  for (auto g : gens) for_each_subset(g, [&](VertexSet s) { out.insert(s.bits()); });
  return out;
}

/// Shelling condition straight from the definition with explicit face sets.
bool bf_is_shelling(const std::vector<VertexSet>& order) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto mine = closure({order[k]});
    const auto before = closure(std::vector<VertexSet>(order.begin(), order.begin() + static_cast<long>(k)));
    std::vector<VertexSet> meet;
    for (auto b : mine)
      if (before.count(b)) meet.push_back(VertexSet(b));
    for (auto s : meet) {
      bool maximal = std::none_of(meet.begin(), meet.end(), [&](VertexSet t) { return t != s && s.is_subset_of(t); });
      if (maximal && s.size() != order[k].size() - 1) return false;
    }
  }
  return true;
}

bool bf_shellable(const SimplicialComplex& K) {
  auto f = K.facets();
  std::sort(f.begin(), f.end());
  do {
    if (bf_is_shelling(f)) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

/// Reisner: pure K is CM iff H̃_i(lk σ) = 0 for i < dim lk σ, all σ.
bool reisner(const SimplicialComplex& K, const CoefficientRing& R) {
  bool ok = true;
  K.for_each_face([&](VertexSet s) {
    const auto L = link(K, s);
    const auto H = reduced_homology(L, R);
    for (int i = -1; i < L.dimension(); ++i)
      if (!H.at(i).is_zero()) ok = false;
  });
  return ok;
}

/// Collapsibility by exhaustive search over face sets.
bool bf_collapsible(const SimplicialComplex& K) {
  std::set<std::uint64_t> start;
  K.for_each_face([&](VertexSet s) { start.insert(s.bits()); });
  std::set<std::set<std::uint64_t>> seen;
  std::vector<std::set<std::uint64_t>> stack{start};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur.size() == 2) return true;  // ∅ and a vertex
    if (!seen.insert(cur).second) continue;
    for (auto s : cur) {
      if (s == 0) continue;
      std::vector<std::uint64_t> above;
      for (auto t : cur)
        if (t != s && (s & t) == s) above.push_back(t);
      if (above.size() == 1 && VertexSet(above[0]).size() == VertexSet(s).size() + 1) {
        auto next = cur;
        next.erase(s);
        next.erase(above[0]);
        stack.push_back(next);
      }
    }
  }
  return K.vertex_set().empty();
}

/// First subset of minimal non-faces, in size-lexicographic order, whose
/// filling is acyclic over R.
std::optional<std::vector<VertexSet>> bf_first_filling(const SimplicialComplex& K, const CoefficientRing& R) {
  const auto M = minimal_nonfaces(K);
  const std::size_t n = M.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<VertexSet> S;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) S.push_back(M[i]);
      if (reduced_homology(fill(K, S), R).is_zero()) return S;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

bool bf_gcd(const SimplicialComplex& K) {
  auto M = minimal_nonfaces(K);
  std::sort(M.begin(), M.end());
  do {
    if (is_strong_gcd_order(M)) return true;
  } while (std::next_permutation(M.begin(), M.end()));
  return false;
}

bool is_full_simplex(const SimplicialComplex& K) {
  return K.facets().size() == 1 && K.facets()[0] == K.ground_set();
}

}  // namespace

TEST_CASE("shelling examples") {
  for (int m = 2; m <= 6; ++m)
    for (int k = 0; k < m; ++k) {
      const auto r = shelling_search(corpus::simplex_skeleton(m, k));
      REQUIRE(r.status == SearchStatus::found);
      CHECK(is_shelling_order(corpus::simplex_skeleton(m, k), r.order));
    }
  const auto c4 = shelling_search(corpus::cycle(4));
  CHECK(c4.status == SearchStatus::found);
  CHECK(bf_is_shelling(c4.order));
  CHECK(shelling_search(corpus::two_disjoint_edges()).status == SearchStatus::none);
  CHECK(shelling_search(corpus::rp2()).status == SearchStatus::none);
  CHECK(shelling_search(empty_complex(3)).status == SearchStatus::found);
  CHECK(shelling_search(corpus::rp2(), 1).status == SearchStatus::exhausted);
}

TEST_CASE("shelling search agrees with brute force") {
  std::mt19937_64 rng(501);
  int shellable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5);
    if (K.facets().size() > 7) continue;
    const auto r = shelling_search(K);
    INFO(K.to_string());
    CHECK(bf_shellable(K) == (r.status == SearchStatus::found));
    if (r.status == SearchStatus::found) {
      ++shellable;
      CHECK(bf_is_shelling(r.order));
      CHECK(is_shelling_order(K, r.order));
    }
  }
  CHECK(shellable > 10);
}

TEST_CASE("sequential Cohen-Macaulay") {
  CHECK(is_scm(corpus::cycle(4), CoefficientRing::Q()));
  CHECK(is_cm(corpus::cycle(4), CoefficientRing::Q()));
  CHECK_FALSE(is_scm(corpus::two_disjoint_edges(), CoefficientRing::Q()));
  CHECK_FALSE(is_dual_scm(corpus::berglund(), CoefficientRing::Z()));
  CHECK(is_scm(corpus::rp2(), CoefficientRing::Q()));
  CHECK_FALSE(is_scm(corpus::rp2(), CoefficientRing::Zp(2)));
  CHECK(is_dual_scm(simplex(4), CoefficientRing::Z()));

  std::mt19937_64 rng(503);
  for (int trial = 0; trial < 120; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5);
    INFO(K.to_string());
    if (K.is_pure())
      for (const auto& R : {CoefficientRing::Q(), CoefficientRing::Zp(2)}) CHECK(is_cm(K, R) == reisner(K, R));
    if (shelling_search(K).status == SearchStatus::found) CHECK(is_scm(K, CoefficientRing::Z()));
  }
}

TEST_CASE("collapses") {
  for (int m = 1; m <= 5; ++m) {
    const auto r = collapse_search(simplex(m));
    REQUIRE(r.status == SearchStatus::found);
    CHECK(is_collapse_sequence(simplex(m), r.steps));
  }
  const auto p = collapse_search(corpus::path(4));
  CHECK(p.status == SearchStatus::found);
  CHECK(is_collapse_sequence(corpus::path(4), p.steps));
  const auto c4 = collapse_search(corpus::cycle(4));
  CHECK(c4.status == SearchStatus::none);
  CHECK(c4.nodes == 1);

  std::mt19937_64 rng(509);
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 4);
    if (K.vertex_set().empty()) continue;
    const auto r = collapse_search(K);
    INFO(K.to_string());
    CHECK(bf_collapsible(K) == (r.status == SearchStatus::found));
    if (r.status == SearchStatus::found) {
      CHECK(is_collapse_sequence(K, r.steps));
      CHECK(reduced_homology(K, CoefficientRing::Z()).is_zero());
    }
  }
}

TEST_CASE("fillings") {
  for (int m = 2; m <= 5; ++m) {
    const auto r = fill_search(boundary_of_simplex(m), FillMode::contractible());
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.certificate->nonfaces == std::vector<VertexSet>{VertexSet::range(m)});
    CHECK(is_collapse_sequence(fill(boundary_of_simplex(m), r.certificate->nonfaces), r.certificate->collapse->steps));
  }
  CHECK(fill_search(corpus::cycle(4), FillMode::p_acyclic(2)).status == SearchStatus::refuted);
  CHECK(fill_search(corpus::cycle(4), FillMode::contractible()).status == SearchStatus::refuted);
  const auto three = fill_search(corpus::three_points(), FillMode::contractible());
  REQUIRE(three.status == SearchStatus::found);
  CHECK(three.certificate->nonfaces == std::vector<VertexSet>{vs({1, 2}), vs({1, 3})});
  // RP²: Q-fillable, not Z/2-fillable
  CHECK(fill_search(corpus::rp2(), FillMode::acyclic_over(CoefficientRing::Q())).status == SearchStatus::found);
  CHECK(fill_search(corpus::rp2(), FillMode::p_acyclic(2)).status == SearchStatus::refuted);
  CHECK(fill_search(corpus::rp2(), FillMode::contractible()).status == SearchStatus::refuted);
  CHECK_THROWS(FillMode::acyclic_over(CoefficientRing::Z()));
}

TEST_CASE("acyclic fillings match subset enumeration") {
  std::mt19937_64 rng(521);
  for (int trial = 0; trial < 120; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5);
    if (minimal_nonfaces(K).size() > 12) continue;
    for (const auto& R : {CoefficientRing::Q(), CoefficientRing::Zp(2), CoefficientRing::Zp(3)}) {
      INFO(K.to_string() << " over " << R.to_string());
      const auto expected = bf_first_filling(K, R);
      const auto got = fill_search(K, FillMode::acyclic_over(R));
      CHECK(expected.has_value() == (got.status == SearchStatus::found));
      if (expected && got.certificate) CHECK(*expected == got.certificate->nonfaces);
    }
    // The contractible surrogate never contradicts Z-acyclicity.
    const auto c = fill_search(K, FillMode::contractible());
    if (c.status == SearchStatus::found) CHECK(c.certificate->filled_homology.is_zero());
    if (bf_first_filling(K, CoefficientRing::Q()) == std::nullopt) CHECK(c.status == SearchStatus::refuted);
  }
}

TEST_CASE("dual shelling gives a filling by spanning facets") {
  std::mt19937_64 rng(523);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5, false);
    if (is_full_simplex(K)) continue;
    const auto sh = dual_shelling_search(K);
    if (sh.status != SearchStatus::found) continue;
    ++seen;
    const auto S = filling_from_dual_shelling(K, sh.order);
    const auto M = minimal_nonfaces(K);
    for (auto s : S) CHECK(std::find(M.begin(), M.end(), s) != M.end());
    const auto filled = fill(K, S);
    INFO(K.to_string());
    CHECK(reduced_homology(filled, CoefficientRing::Z()).is_zero());
    CHECK(collapse_search(filled).status == SearchStatus::found);
    CHECK(fill_search(K, FillMode::contractible()).status == SearchStatus::found);
    CHECK(strong_gcd_search(K).status == SearchStatus::found);
    CHECK(is_dual_scm(K, CoefficientRing::Z()));
  }
  CHECK(seen > 20);
}

TEST_CASE("homology fillability") {
  const auto path = homology_fillable(corpus::path(4));
  CHECK(path.verdict == FillVerdict::certified);
  REQUIRE(path.components.size() == 1);
  CHECK(path.components[0].fillings[0].second.certificate->nonfaces.empty());

  const auto rp = homology_fillable(corpus::rp2());
  CHECK(rp.verdict == FillVerdict::refuted);
  REQUIRE(rp.components.size() == 1);
  CHECK(rp.components[0].primes == std::vector<std::uint64_t>{2});

  CHECK(homology_fillable(corpus::two_disjoint_edges()).components.size() == 2);
  CHECK(homology_fillable(corpus::two_disjoint_edges()).verdict == FillVerdict::certified);
  CHECK(hat_is_simply_connected_surrogate(corpus::path(3)));
  CHECK_FALSE(hat_is_simply_connected_surrogate(corpus::cycle(4)));
}

TEST_CASE("implication chain on the corpus") {
  for (const auto& e : corpus::all()) {
    const auto& K = e.complex;
    INFO(e.name);
    if (K.has_ghost_vertices() || K.m() > 8) continue;
    const bool shell = dual_shelling_search(K).status == SearchStatus::found;
    const bool scm = is_dual_scm(K, CoefficientRing::Z());
    if (shell) CHECK(scm);
    if (scm) CHECK(homology_fillable(K).verdict == FillVerdict::certified);
    if (shell) CHECK(strong_gcd_search(K).status == SearchStatus::found);
  }
}

TEST_CASE("strong gcd and weak shellings") {
  // The five 4-element non-faces of the Berglund complex form a pentagon
  // under "disjoint", and no ordering covers every disjoint pair from
  // strictly later positions; both searches exhaust.
  CHECK(strong_gcd_search(corpus::berglund()).status == SearchStatus::none);
  CHECK_FALSE(bf_gcd(corpus::berglund()));
  CHECK(dual_weak_shelling_search(corpus::berglund()).status == SearchStatus::none);
  for (int m = 2; m <= 5; ++m) CHECK(strong_gcd_search(boundary_of_simplex(m)).status == SearchStatus::found);
  CHECK(strong_gcd_search(corpus::cycle(4)).status == SearchStatus::none);
  CHECK(strong_gcd_search(simplex(3)).status == SearchStatus::found);
  CHECK(is_strong_gcd_order({vs({1, 2}), vs({3, 4}), vs({2, 3})}));
  CHECK(is_strong_gcd_order({vs({1, 2}), vs({2, 3}), vs({3, 4})}));
  CHECK_FALSE(is_strong_gcd_order({vs({2, 3}), vs({1, 2}), vs({3, 4})}));

  std::mt19937_64 rng(541);
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5);
    const auto M = minimal_nonfaces(K);
    if (M.size() > 7 || is_full_simplex(K)) continue;
    const auto g = strong_gcd_search(K);
    const auto w = dual_weak_shelling_search(K);
    INFO(K.to_string());
    CHECK(bf_gcd(K) == (g.status == SearchStatus::found));
    CHECK((g.status == SearchStatus::found) == (w.status == SearchStatus::found));
    if (g.status == SearchStatus::found) {
      CHECK(is_strong_gcd_order(g.order));
      std::vector<VertexSet> dual;
      for (auto it = g.order.rbegin(); it != g.order.rend(); ++it) dual.push_back(K.ground_set() - *it);
      CHECK(is_weak_shelling(dual, K.ground_set()));
    }
    if (w.status == SearchStatus::found) {
      CHECK(is_weak_shelling(w.order, K.ground_set()));
      std::vector<VertexSet> back;
      for (auto it = w.order.rbegin(); it != w.order.rend(); ++it) back.push_back(K.ground_set() - *it);
      CHECK(is_strong_gcd_order(back));
    }
  }
}

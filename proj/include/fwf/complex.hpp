#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vertex_set.hpp"

namespace fwf {

/// Raised for malformed complexes (bad m, vertex out of range).
struct InvalidComplexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would produce the void complex (no faces at all).
struct VoidComplexError : std::domain_error {
  using std::domain_error::domain_error;
};

class SimplicialComplex;
SimplicialComplex make_complex(int m, const std::vector<VertexSet>& generators);

/// Immutable simplicial complex on the ground set [m], stored by its facets.
///
/// Facets are kept in lexicographic order so that equality is structural.
/// The empty complex {∅} has the single facet ∅. Vertices of [m] that are not
/// faces ("ghost" vertices) are allowed. `labels()` records where each vertex
/// came from when the complex was cut out of a larger one.
class SimplicialComplex {
 public:
  /// {∅} on the empty ground set.
  SimplicialComplex() : SimplicialComplex(0, {VertexSet{}}, {}) {}

  int m() const { return impl_->m; }
  VertexSet ground_set() const { return VertexSet::range(impl_->m); }
  const std::vector<VertexSet>& facets() const { return impl_->facets; }
  /// labels()[k] is the original name of vertex k+1.
  const std::vector<int>& labels() const { return impl_->labels; }

  int dimension() const {
    int d = -1;
    for (auto f : facets()) d = std::max(d, f.dimension());
    return d;
  }

  /// Union of all faces.
  VertexSet vertex_set() const {
    VertexSet v;
    for (auto f : facets()) v = v | f;
    return v;
  }

  bool has_ghost_vertices() const { return vertex_set() != ground_set(); }
  bool is_empty_complex() const { return facets().size() == 1 && facets()[0].empty(); }

  bool is_pure() const {
    const int d = facets().front().dimension();
    return std::all_of(facets().begin(), facets().end(),
                       [d](VertexSet f) { return f.dimension() == d; });
  }

  bool is_simplex() const { return facets().size() == 1; }

  bool contains(VertexSet sigma) const {
    if (!sigma.is_subset_of(ground_set())) return false;
    return cache().index.count(sigma.bits()) != 0;
  }

  /// Faces of dimension d (d ≥ −1) in lexicographic order.
  const std::vector<VertexSet>& faces(int d) const {
    static const std::vector<VertexSet> none;
    const auto& by_dim = cache().by_dim;
    const int slot = d + 1;
    if (slot < 0 || slot >= static_cast<int>(by_dim.size())) return none;
    return by_dim[static_cast<std::size_t>(slot)];
  }

  /// Position of `sigma` within faces(sigma.dimension()), or −1.
  int face_index(VertexSet sigma) const {
    const auto& idx = cache().index;
    auto it = idx.find(sigma.bits());
    return it == idx.end() ? -1 : it->second;
  }

  std::size_t num_faces() const { return cache().index.size(); }

  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : cache().by_dim) f.push_back(level.size());
    return f;
  }

  template <class Fn>
  void for_each_face(Fn&& fn) const {
    for (const auto& level : cache().by_dim)
      for (auto s : level) fn(s);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m() == b.m() && a.facets() == b.facets();
  }

  std::string to_string() const {
    std::string s = "K[m=" + std::to_string(m()) + "]{";
    for (std::size_t i = 0; i < facets().size(); ++i) {
      if (i) s += ",";
      s += facets()[i].to_string();
    }
    return s + "}";
  }

  /// Facets must already be pairwise non-nested and inside [m]; used by the
  /// constructions below, which know this to be the case.
  static SimplicialComplex from_maximal(int m, std::vector<VertexSet> facets,
                                        std::vector<int> labels = {}) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    if (facets.empty()) throw VoidComplexError("void complex");
    return SimplicialComplex(m, std::move(facets), std::move(labels));
  }

 private:
  struct Cache {
    std::vector<std::vector<VertexSet>> by_dim;
    std::unordered_map<std::uint64_t, int> index;
  };
  struct Impl {
    int m = 0;
    std::vector<VertexSet> facets;
    std::vector<int> labels;
    mutable std::once_flag once;
    mutable Cache cache;
  };

  SimplicialComplex(int m, std::vector<VertexSet> facets, std::vector<int> labels)
      : impl_(std::make_shared<Impl>()) {
    if (m < 0 || m > kMaxVertices)
      throw InvalidComplexError("ground set size " + std::to_string(m) +
                                " outside [0, 64]");
    impl_->m = m;
    impl_->facets = std::move(facets);
    if (labels.empty()) {
      labels.resize(static_cast<std::size_t>(m));
      std::iota(labels.begin(), labels.end(), 1);
    }
    impl_->labels = std::move(labels);
  }

  const Cache& cache() const {
    std::call_once(impl_->once, [this] { build_cache(); });
    return impl_->cache;
  }

  void build_cache() const {
    Cache& c = impl_->cache;
    std::vector<std::uint64_t> all;
    for (auto f : impl_->facets)
      for_each_subset(f, [&](VertexSet s) { all.push_back(s.bits()); });
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    c.by_dim.assign(static_cast<std::size_t>(dimension() + 2), {});
    for (auto b : all) {
      VertexSet s(b);
      c.by_dim[static_cast<std::size_t>(s.size())].push_back(s);
    }
    c.index.reserve(all.size());
    for (auto& level : c.by_dim) {
      std::sort(level.begin(), level.end());
      for (std::size_t i = 0; i < level.size(); ++i)
        c.index.emplace(level[i].bits(), static_cast<int>(i));
    }
  }

  std::shared_ptr<Impl> impl_;
};

namespace detail {

/// Keep only the inclusion-maximal sets.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets) {
    bool covered = false;
    for (auto k : kept)
      if (s.is_subset_of(k)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(s);
  }
  if (kept.empty()) kept.push_back(VertexSet{});
  return kept;
}

}  // namespace detail

/// Downward closure of `generators` on [m]; no generators gives {∅}.
inline SimplicialComplex make_complex(int m, const std::vector<VertexSet>& generators) {
  if (m < 1) throw InvalidComplexError("m must be at least 1, got " + std::to_string(m));
  if (m > kMaxVertices)
    throw InvalidComplexError("m = " + std::to_string(m) + " exceeds 64");
  const VertexSet ground = VertexSet::range(m);
  for (auto g : generators)
    if (!g.is_subset_of(ground))
      throw InvalidComplexError("vertex " + std::to_string((g - ground).min_vertex()) +
                                " > m=" + std::to_string(m));
  return SimplicialComplex::from_maximal(m, detail::maximal_sets(generators));
}

inline SimplicialComplex make_complex(int m, const std::vector<std::vector<int>>& generators) {
  std::vector<VertexSet> sets;
  for (const auto& g : generators) {
    VertexSet s;
    for (int v : g) {
      if (v < 1 || v > m)
        throw InvalidComplexError("vertex " + std::to_string(v) + " > m=" + std::to_string(m));
      s = s.with(v);
    }
    sets.push_back(s);
  }
  return make_complex(m, sets);
}

inline SimplicialComplex simplex(int m) { return make_complex(m, {VertexSet::range(m)}); }

/// ∂Δ^{[m]}: all proper subsets of [m].
inline SimplicialComplex boundary_of_simplex(int m) {
  std::vector<VertexSet> gens;
  for (int v = 1; v <= m; ++v) gens.push_back(VertexSet::range(m).without(v));
  return make_complex(m, gens);
}

/// {∅} on [m].
inline SimplicialComplex empty_complex(int m) { return make_complex(m, std::vector<VertexSet>{}); }

/// K_I re-indexed onto [|I|]; labels() maps back to K's labels.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexSet I) {
  if (!I.is_subset_of(K.ground_set()))
    throw InvalidComplexError("subset " + I.to_string() + " not inside [" +
                              std::to_string(K.m()) + "]");
  std::vector<VertexSet> gens;
  for (auto f : K.facets()) gens.push_back(compress(f & I, I));
  std::vector<int> labels;
  for (int v : I.vertices()) labels.push_back(K.labels()[static_cast<std::size_t>(v - 1)]);
  return SimplicialComplex::from_maximal(I.size(), detail::maximal_sets(std::move(gens)),
                                         std::move(labels));
}

/// lk_K(σ) on the ground set [m]−σ, re-indexed.
inline SimplicialComplex link(const SimplicialComplex& K, VertexSet sigma) {
  if (!K.contains(sigma))
    throw std::invalid_argument("link: " + sigma.to_string() + " is not a face");
  const VertexSet rest = K.ground_set() - sigma;
  std::vector<VertexSet> gens;
  for (auto f : K.facets())
    if (sigma.is_subset_of(f)) gens.push_back(compress(f - sigma, rest));
  std::vector<int> labels;
  for (int v : rest.vertices()) labels.push_back(K.labels()[static_cast<std::size_t>(v - 1)]);
  return SimplicialComplex::from_maximal(rest.size(), detail::maximal_sets(std::move(gens)),
                                         std::move(labels));
}

/// dl_K(σ) = K_{[m]−σ}.
inline SimplicialComplex deletion(const SimplicialComplex& K, VertexSet sigma) {
  return full_subcomplex(K, K.ground_set() - sigma);
}

/// st_K(v) on the same ground set: the facets through v.
inline SimplicialComplex star(const SimplicialComplex& K, int v) {
  if (!K.contains(VertexSet{}.with(v)))
    throw std::invalid_argument("star: " + std::to_string(v) + " is not a vertex");
  std::vector<VertexSet> gens;
  for (auto f : K.facets())
    if (f.contains(v)) gens.push_back(f);
  return SimplicialComplex::from_maximal(K.m(), std::move(gens), K.labels());
}

/// K1 * K2 on [m1 + m2]; K2's vertex i becomes m1 + i.
inline SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
  const int m = K1.m() + K2.m();
  if (m > kMaxVertices) throw InvalidComplexError("join exceeds 64 vertices");
  std::vector<VertexSet> gens;
  for (auto f1 : K1.facets())
    for (auto f2 : K2.facets()) gens.push_back(f1 | VertexSet(f2.bits() << K1.m()));
  return SimplicialComplex::from_maximal(m, std::move(gens));
}

/// Apex is vertex 1.
inline SimplicialComplex cone(const SimplicialComplex& K) { return join(simplex(1), K); }

/// Suspension points are vertices 1 and 2.
inline SimplicialComplex suspension(const SimplicialComplex& K) {
  return join(make_complex(2, {VertexSet::of({1}), VertexSet::of({2})}), K);
}

/// Lexicographically sorted minimal non-faces. Ghost vertices show up as
/// singletons.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& K) {
  std::vector<VertexSet> out;
  const int m = K.m();
  K.for_each_face([&](VertexSet sigma) {
    for (int v = sigma.max_vertex() + 1; v <= m; ++v) {
      const VertexSet cand = sigma.with(v);
      if (K.contains(cand)) continue;
      bool minimal = true;
      for (int u : sigma.vertices())
        if (!K.contains(cand.without(u))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(cand);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// K^∨ over S: faces are σ ⊆ S with S−σ ∉ K. The result keeps K's ground
/// set; vertices outside S are ghosts. Throws VoidComplexError when K is the
/// full simplex on S.
inline SimplicialComplex alexander_dual(const SimplicialComplex& K, VertexSet S) {
  if (!S.is_subset_of(K.ground_set()))
    throw InvalidComplexError("dual ambient set " + S.to_string() + " not inside [" +
                              std::to_string(K.m()) + "]");
  if (!K.vertex_set().is_subset_of(S))
    throw std::invalid_argument("dual ambient set " + S.to_string() +
                                " misses vertices of the complex");
  std::vector<VertexSet> gens;
  for (auto M : minimal_nonfaces(K))
    if (M.is_subset_of(S)) gens.push_back(S - M);
  if (gens.empty())
    throw VoidComplexError("Alexander dual of the full simplex on " + S.to_string() + " is void");
  return SimplicialComplex::from_maximal(K.m(), std::move(gens), K.labels());
}

inline SimplicialComplex alexander_dual(const SimplicialComplex& K) {
  return alexander_dual(K, K.ground_set());
}

enum class Generation { at_least, exactly };

/// Subcomplex generated by faces of dimension ≥ i (or exactly i).
inline SimplicialComplex generated_subcomplex(const SimplicialComplex& K, int i,
                                              Generation mode = Generation::at_least) {
  if (i < 0) throw std::invalid_argument("generated_subcomplex: i must be >= 0");
  std::vector<VertexSet> gens;
  if (mode == Generation::at_least) {
    for (auto f : K.facets())
      if (f.dimension() >= i) gens.push_back(f);
  } else {
    gens = K.faces(i);
  }
  if (gens.empty()) gens.push_back(VertexSet{});
  return SimplicialComplex::from_maximal(K.m(), detail::maximal_sets(std::move(gens)),
                                         K.labels());
}

/// Faces of dimension ≤ k.
inline SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
  std::vector<VertexSet> gens;
  for (auto f : K.facets()) {
    if (f.dimension() <= k) {
      gens.push_back(f);
    } else {
      for_each_subset(f, [&](VertexSet s) {
        if (s.dimension() == k) gens.push_back(s);
      });
    }
  }
  return SimplicialComplex::from_maximal(K.m(), detail::maximal_sets(std::move(gens)),
                                         K.labels());
}

namespace detail {

inline std::vector<VertexSet> adjacency(const SimplicialComplex& G) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(G.m() + 1));
  for (auto e : G.faces(1)) {
    const int a = e.min_vertex(), b = e.max_vertex();
    adj[static_cast<std::size_t>(a)] = adj[static_cast<std::size_t>(a)].with(b);
    adj[static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)].with(a);
  }
  return adj;
}

inline void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet R, VertexSet P,
                          VertexSet X, std::vector<VertexSet>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  const int pivot = (P | X).min_vertex();
  for (int v : (P - adj[static_cast<std::size_t>(pivot)]).vertices()) {
    const VertexSet nv = adj[static_cast<std::size_t>(v)];
    bron_kerbosch(adj, R.with(v), P & nv, X & nv, out);
    P = P.without(v);
    X = X.with(v);
  }
}

inline void require_graph(const SimplicialComplex& G, const char* what) {
  if (G.dimension() > 1)
    throw std::invalid_argument(std::string(what) + ": input has a face of dimension " +
                                std::to_string(G.dimension()));
}

}  // namespace detail

/// Clique complex of the 1-skeleton of G. Ghost vertices stay ghosts.
inline SimplicialComplex flag_complex_of_skeleton(const SimplicialComplex& G) {
  const auto adj = detail::adjacency(G);
  std::vector<VertexSet> cliques;
  const VertexSet verts = G.vertex_set();
  if (!verts.empty()) detail::bron_kerbosch(adj, {}, verts, {}, cliques);
  if (cliques.empty()) cliques.push_back(VertexSet{});
  return SimplicialComplex::from_maximal(G.m(), std::move(cliques), G.labels());
}

/// Flag complex of a graph (a complex of dimension ≤ 1).
inline SimplicialComplex flag_complex(const SimplicialComplex& G) {
  detail::require_graph(G, "flag_complex");
  return flag_complex_of_skeleton(G);
}

/// Chordality of the 1-skeleton: maximum cardinality search, then a perfect
/// elimination check.
inline bool is_chordal_skeleton(const SimplicialComplex& G) {
  const auto adj = detail::adjacency(G);
  const VertexSet verts = G.vertex_set();
  const int n = verts.size();
  std::vector<int> weight(static_cast<std::size_t>(G.m() + 1), 0);
  std::vector<int> order;  // visiting order; reverse is a PEO for chordal graphs
  std::vector<int> position(static_cast<std::size_t>(G.m() + 1), -1);
  VertexSet unvisited = verts;
  while (!unvisited.empty()) {
    int best = -1;
    for (int v : unvisited.vertices())
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
        best = v;
    position[static_cast<std::size_t>(best)] = static_cast<int>(order.size());
    order.push_back(best);
    unvisited = unvisited.without(best);
    for (int u : (adj[static_cast<std::size_t>(best)] & unvisited).vertices())
      ++weight[static_cast<std::size_t>(u)];
  }
  // Each vertex's earlier neighbours must form a clique; it suffices that
  // they are all adjacent to the latest of them.
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    VertexSet earlier;
    int latest = -1;
    for (int u : adj[static_cast<std::size_t>(v)].vertices())
      if (position[static_cast<std::size_t>(u)] < i) {
        earlier = earlier.with(u);
        if (latest < 0 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(latest)])
          latest = u;
      }
    if (latest < 0) continue;
    if (!(earlier.without(latest)).is_subset_of(adj[static_cast<std::size_t>(latest)]))
      return false;
  }
  return true;
}

inline bool is_chordal(const SimplicialComplex& G) {
  detail::require_graph(G, "is_chordal");
  return is_chordal_skeleton(G);
}

/// Largest k with every (k+1)-subset of [m] a face; m−1 for the simplex.
inline int max_neighborliness(const SimplicialComplex& K) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) return K.m() - 1;
  int smallest = kMaxVertices + 1;
  for (auto M : minimal_nonfaces(K)) smallest = std::min(smallest, M.size());
  return smallest - 2;
}

inline bool is_k_neighborly(const SimplicialComplex& K, int k) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) return true;
  return k <= max_neighborliness(K);
}

/// Vertex sets of the connected components (ghost vertices excluded).
inline std::vector<VertexSet> connected_components(const SimplicialComplex& K) {
  std::vector<VertexSet> comps;
  for (auto f : K.facets()) {
    if (f.empty()) continue;
    VertexSet merged = f;
    std::vector<VertexSet> rest;
    for (auto c : comps) {
      if (c.intersects(merged))
        merged = merged | c;
      else
        rest.push_back(c);
    }
    rest.push_back(merged);
    comps = std::move(rest);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace fwf

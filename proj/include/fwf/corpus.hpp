#pragma once

#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace fwf::corpus {

/// Boundary of an n-gon, vertices in cyclic order.
inline SimplicialComplex cycle(int n) {
  std::vector<VertexSet> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(VertexSet::of({i, i % n + 1}));
  return make_complex(n, gens);
}

/// Path 1–2–…–n.
inline SimplicialComplex path(int n) {
  std::vector<VertexSet> gens{VertexSet::of({1})};
  for (int i = 1; i < n; ++i) gens.push_back(VertexSet::of({i, i + 1}));
  return make_complex(n, gens);
}

/// k-skeleton of Δ^{[m]}.
inline SimplicialComplex simplex_skeleton(int m, int k) { return skeleton(simplex(m), k); }

inline SimplicialComplex two_disjoint_edges() { return make_complex(4, {VertexSet::of({1, 2}), VertexSet::of({3, 4})}); }

inline SimplicialComplex three_points() {
  return make_complex(3, {VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3})});
}

/// Two triangles sharing the edge 23 with a pendant edge 45: chordal.
inline SimplicialComplex chordal_graph() {
  return make_complex(5, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

/// Six-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2() {
  return make_complex(6, std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 3, 6}, {1, 4, 6},
                                                       {2, 3, 4}, {2, 3, 6}, {2, 5, 6}, {3, 4, 5}, {4, 5, 6}});
}

/// The ten triples of [6] that are not faces of rp2().
inline std::vector<VertexSet> rp2_missing_triangles() {
  return {VertexSet::of({1, 2, 3}), VertexSet::of({1, 2, 6}), VertexSet::of({1, 3, 4}),
          VertexSet::of({1, 4, 5}), VertexSet::of({1, 5, 6}), VertexSet::of({2, 3, 5}),
          VertexSet::of({2, 4, 5}), VertexSet::of({2, 4, 6}), VertexSet::of({3, 4, 6}),
          VertexSet::of({3, 5, 6})};
}

/// Berglund's complex on [10], given by its minimal non-faces and built as
/// the dual of the complex whose facets are their complements.
inline std::vector<VertexSet> berglund_nonfaces() {
  return {VertexSet::of({1, 2, 6, 7}), VertexSet::of({2, 3, 7, 8}), VertexSet::of({3, 4, 8, 9}),
          VertexSet::of({4, 5, 9, 10}), VertexSet::of({1, 5, 6, 10}), VertexSet::of({6, 7, 8, 9, 10})};
}

inline SimplicialComplex berglund() {
  std::vector<VertexSet> complements;
  for (auto M : berglund_nonfaces()) complements.push_back(VertexSet::range(10) - M);
  return alexander_dual(make_complex(10, complements));
}

struct Entry {
  std::string name;
  SimplicialComplex complex;
};

/// Every bundled complex, in a fixed order.
inline std::vector<Entry> all() {
  std::vector<Entry> out;
  out.push_back({"c4", cycle(4)});
  out.push_back({"c5", cycle(5)});
  for (int m = 2; m <= 5; ++m) out.push_back({"boundary_d" + std::to_string(m), boundary_of_simplex(m)});
  out.push_back({"simplex_4", simplex(4)});
  out.push_back({"skeleton_5_0", simplex_skeleton(5, 0)});
  out.push_back({"skeleton_5_1", simplex_skeleton(5, 1)});
  out.push_back({"skeleton_6_2", simplex_skeleton(6, 2)});
  out.push_back({"path4", path(4)});
  out.push_back({"chordal5", chordal_graph()});
  out.push_back({"two_disjoint_edges", two_disjoint_edges()});
  out.push_back({"three_points", three_points()});
  out.push_back({"rp2_6", rp2()});
  out.push_back({"berglund_10", berglund()});
  out.push_back({"join_d2_d3", join(boundary_of_simplex(2), boundary_of_simplex(3))});
  return out;
}

}  // namespace fwf::corpus

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chain_complex.hpp"
#include "complex.hpp"
#include "rings.hpp"
#include "snf.hpp"
#include "sparse.hpp"

namespace fwf {

/// One homology group: R^free_rank ⊕ ⊕ Z/torsion_i (torsion only over Z).
struct HomologyGroup {
  long long free_rank = 0;
  std::vector<BigInt> torsion;  ///< d_1 | d_2 | ..., all ≥ 2

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

  std::string to_string(const CoefficientRing& R) const {
    if (is_zero()) return "0";
    std::string s;
    const std::string base = R.kind == CoefficientRing::Kind::integers   ? "Z"
                             : R.kind == CoefficientRing::Kind::rationals ? "Q"
                                                                          : "Z/" + std::to_string(R.p);
    if (free_rank > 0) s = free_rank == 1 ? base : base + "^" + std::to_string(free_rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : "+") + ("Z/" + t.str());
    return s;
  }
};

/// Graded homology from min_degree upward. Degrees beyond the stored range
/// are zero.
struct HomologyProfile {
  CoefficientRing ring;
  int min_degree = -1;
  std::vector<HomologyGroup> groups;

  const HomologyGroup& at(int q) const {
    static const HomologyGroup zero;
    const int k = q - min_degree;
    if (k < 0 || k >= static_cast<int>(groups.size())) return zero;
    return groups[static_cast<std::size_t>(k)];
  }
  long long betti(int q) const { return at(q).free_rank; }
  int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }

  /// Highest degree with a nonzero group, or nullopt when everything vanishes.
  std::optional<int> top_nonzero_degree() const {
    for (int q = max_degree(); q >= min_degree; --q)
      if (!at(q).is_zero()) return q;
    return std::nullopt;
  }

  bool is_zero() const { return !top_nonzero_degree().has_value(); }
  bool has_torsion() const {
    return std::any_of(groups.begin(), groups.end(), [](const auto& g) { return !g.torsion.empty(); });
  }

  /// Same groups in every degree (storage ranges may differ).
  bool same_groups(const HomologyProfile& o) const {
    const int lo = std::min(min_degree, o.min_degree), hi = std::max(max_degree(), o.max_degree());
    for (int q = lo; q <= hi; ++q)
      if (!(at(q) == o.at(q))) return false;
    return true;
  }
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.ring == b.ring && a.same_groups(b);
  }

  /// Drop zero groups above the top nonzero degree.
  void trim() {
    while (!groups.empty() && groups.back().is_zero() &&
           max_degree() > min_degree)
      groups.pop_back();
  }

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int q = min_degree; q <= max_degree(); ++q) {
      if (at(q).is_zero()) continue;
      os << (any ? ", " : "") << "H" << q << "=" << at(q).to_string(ring);
      any = true;
    }
    return any ? os.str() : "0";
  }
};

/// Homology of a chain complex over R.
inline HomologyProfile homology(const ChainComplex& C, const CoefficientRing& R) {
  const int lo = C.min_degree, hi = C.max_degree();
  // rank[q - lo] = rank of ∂_q; torsion[q - lo] = torsion invariants of ∂_q.
  std::vector<RankResult> ranks(static_cast<std::size_t>(hi - lo + 2));
  for (int q = lo + 1; q <= hi; ++q) {
    const auto& d = C.maps[static_cast<std::size_t>(q - lo)];
    if (d.nonzeros() == 0) continue;
    if (R.is_field())
      ranks[static_cast<std::size_t>(q - lo)] = with_field(R, [&](auto F) { return sparse_rank(F, d); });
    else
      ranks[static_cast<std::size_t>(q - lo)] = integer_rank(d);
  }
  HomologyProfile P;
  P.ring = R;
  P.min_degree = lo;
  for (int q = lo; q <= hi; ++q) {
    const auto& out = ranks[static_cast<std::size_t>(q - lo)];
    const auto& in = ranks[static_cast<std::size_t>(q - lo + 1)];
    HomologyGroup g;
    g.free_rank = static_cast<long long>(C.dim(q)) - static_cast<long long>(out.rank) -
                  static_cast<long long>(in.rank);
    g.torsion = in.torsion;
    std::sort(g.torsion.begin(), g.torsion.end());
    P.groups.push_back(std::move(g));
  }
  return P;
}

/// Reduced simplicial homology, degree −1 included.
inline HomologyProfile reduced_homology(const SimplicialComplex& K, const CoefficientRing& R) {
  return homology(simplicial_chain_complex(K), R);
}

/// Reduced cohomology by universal coefficients: H^q has the free part of
/// H_q and the torsion of H_{q−1}.
inline HomologyProfile cohomology_from_homology(const HomologyProfile& H) {
  if (H.ring.is_field()) return H;
  HomologyProfile C = H;
  C.groups.push_back({});
  for (int q = C.max_degree(); q >= C.min_degree; --q) {
    auto& g = C.groups[static_cast<std::size_t>(q - C.min_degree)];
    g.torsion = H.at(q - 1).torsion;
  }
  C.trim();
  return C;
}

inline HomologyProfile reduced_cohomology(const SimplicialComplex& K, const CoefficientRing& R) {
  return cohomology_from_homology(reduced_homology(K, R));
}

/// dim over Z/p of degree q, read off an integral profile.
inline long long mod_p_dimension(const HomologyProfile& H, int q, std::uint64_t p) {
  auto count = [&](const HomologyGroup& g) {
    long long n = 0;
    for (const auto& t : g.torsion)
      if (t % p == 0) ++n;
    return n;
  };
  return H.at(q).free_rank + count(H.at(q)) + count(H.at(q - 1));
}

/// H̃_q vanishes for all q ≤ i (degree −1 included).
inline bool is_i_acyclic(const HomologyProfile& H, int i) {
  for (int q = H.min_degree; q <= i; ++q)
    if (!H.at(q).is_zero()) return false;
  return true;
}

inline bool is_i_acyclic(const SimplicialComplex& K, const CoefficientRing& R, int i) {
  return is_i_acyclic(reduced_homology(K, R), i);
}

inline bool is_acyclic(const SimplicialComplex& K, const CoefficientRing& R) {
  return reduced_homology(K, R).is_zero();
}

/// Largest n with H̃_n(X; A) ≠ 0 for some finitely generated A, from the
/// integral profile: free or torsion part at q, or torsion at q−1.
/// nullopt means acyclic over Z.
inline std::optional<int> hodim(const HomologyProfile& H) {
  std::optional<int> best;
  for (int q = H.min_degree; q <= H.max_degree(); ++q) {
    const auto& g = H.at(q);
    if (!g.is_zero()) best = std::max(best.value_or(q), q);
    if (!g.torsion.empty()) best = std::max(best.value_or(q + 1), q + 1);
  }
  return best;
}

inline std::optional<int> hodim(const SimplicialComplex& K) {
  return hodim(reduced_homology(K, CoefficientRing::Z()));
}

/// Reduced homology of every full subcomplex, indexed by the bit mask of I
/// (I = ∅ gives {∅}).
inline std::vector<HomologyProfile> full_subcomplex_homologies(const SimplicialComplex& K,
                                                               const CoefficientRing& R) {
  if (K.m() > 24) throw std::invalid_argument("too many full subcomplexes (m > 24)");
  const std::uint64_t n = std::uint64_t{1} << K.m();
  std::vector<HomologyProfile> out;
  out.reserve(n);
  for (std::uint64_t mask = 0; mask < n; ++mask)
    out.push_back(reduced_homology(full_subcomplex(K, VertexSet(mask)), R));
  return out;
}

/// d(K) = max hodim K_I over nonempty I; nullopt when every K_I is acyclic.
inline std::optional<int> dK(const std::vector<HomologyProfile>& integral_full_subcomplexes) {
  std::optional<int> best;
  for (std::size_t mask = 1; mask < integral_full_subcomplexes.size(); ++mask) {
    const auto h = hodim(integral_full_subcomplexes[mask]);
    if (h) best = std::max(best.value_or(*h), *h);
  }
  return best;
}

inline std::optional<int> dK(const SimplicialComplex& K) {
  return dK(full_subcomplex_homologies(K, CoefficientRing::Z()));
}

// ---------------------------------------------------------------------------
// Bases and induced maps.

/// Generators of H_q(C; R) as explicit cycles, with a coordinate map.
///
/// Over Z the kernel lattice W = V[:, r:] of ∂_q (from the Smith form of ∂_q)
/// is rewritten through the Smith form of ∂_{q+1} expressed in W; the new
/// basis vectors with non-unit divisor are the torsion generators, the ones
/// past the rank are free. Over a field the same recipe gives a basis.
template <class R>
struct HomologyBasis {
  using V = typename R::value_type;
  R ring;
  int degree = 0;
  std::vector<std::vector<V>> generators;  ///< cycles in C_q coordinates
  std::vector<V> orders;                   ///< 0 for free generators
  Matrix<V> to_coordinates;                ///< rows = generators, cols = dim C_q

  std::size_t size() const { return generators.size(); }

  /// Coordinates of a cycle (torsion coordinates reduced mod their order).
  std::vector<V> coordinates(const std::vector<V>& cycle) const {
    std::vector<V> out(generators.size(), ring.zero());
    for (std::size_t t = 0; t < generators.size(); ++t) {
      V acc = ring.zero();
      for (std::size_t c = 0; c < cycle.size(); ++c)
        if (!ring.is_zero(cycle[c])) acc = ring.add(acc, ring.mul(to_coordinates(t, c), cycle[c]));
      if constexpr (!R::is_field) {
        if (!ring.is_zero(orders[t])) {
          acc = acc % orders[t];
          if (acc < 0) acc += orders[t];
        }
      }
      out[t] = acc;
    }
    return out;
  }
};

template <class R>
Matrix<typename R::value_type> dense_in(const R& ring, const SparseIntMatrix& A) {
  Matrix<typename R::value_type> M(static_cast<std::size_t>(A.rows), static_cast<std::size_t>(A.cols),
                                   ring.zero());
  for (int j = 0; j < A.cols; ++j)
    for (auto [i, v] : A.columns[static_cast<std::size_t>(j)])
      M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = ring.from_int(v);
  return M;
}

template <class R>
HomologyBasis<R> homology_basis(const R& ring, const ChainComplex& C, int q) {
  using V = typename R::value_type;
  HomologyBasis<R> B{ring, q, {}, {}, {}};
  const std::size_t n = static_cast<std::size_t>(C.dim(q));
  auto out = smith_normal_form(ring, dense_in(ring, C.boundary(q)), true);
  const std::size_t r = out.rank, k = n - r;
  // W: n × k kernel basis, Wp: k × n left inverse.
  Matrix<V> W(n, k, ring.zero()), Wp(k, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      W(i, t) = out.Vt(i, r + t);
      Wp(t, i) = out.Vt_inv(r + t, i);
    }
  const auto M = multiply(ring, Wp, dense_in(ring, C.boundary(q + 1)));
  auto in = smith_normal_form(ring, M, true);
  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < k; ++t) {
    if (t < in.rank && ring.is_unit(in.divisors[t])) continue;
    keep.push_back(t);
  }
  B.to_coordinates = Matrix<V>(keep.size(), n, ring.zero());
  const auto PWp = multiply(ring, in.U, Wp);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const std::size_t t = keep[a];
    std::vector<V> g(n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
      V acc = ring.zero();
      for (std::size_t s = 0; s < k; ++s)
        if (!ring.is_zero(in.U_inv(s, t))) acc = ring.add(acc, ring.mul(W(i, s), in.U_inv(s, t)));
      g[i] = acc;
    }
    B.generators.push_back(std::move(g));
    B.orders.push_back(t < in.rank ? in.divisors[t] : ring.zero());
    for (std::size_t c = 0; c < n; ++c) B.to_coordinates(a, c) = PWp(t, c);
  }
  return B;
}

/// Matrix of H̃_q(A) → H̃_q(B) in the bases of homology_basis, with entries
/// lifted to rationals (integers over Z and Z/p).
struct InducedMap {
  Matrix<Rational> matrix;  ///< rows: generators of H̃_q(B), cols: of H̃_q(A)
  std::vector<BigInt> source_orders, target_orders;  ///< 0 = free
  bool is_zero() const {
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (matrix(i, j) != 0) return false;
    return true;
  }
};

template <class R>
InducedMap induced_map_with(const R& ring, const SimplicialComplex& A, const SimplicialComplex& B,
                            const std::vector<int>& vertex_map, int q) {
  using V = typename R::value_type;
  const auto CA = simplicial_chain_complex(A), CB = simplicial_chain_complex(B);
  const auto HA = homology_basis(ring, CA, q), HB = homology_basis(ring, CB, q);
  const auto f = simplicial_chain_map(A, B, vertex_map, q);
  InducedMap out;
  out.matrix = Matrix<Rational>(HB.size(), HA.size(), Rational(0));
  auto lift = [&](const V& x) -> Rational {
    if constexpr (std::is_same_v<R, PrimeField>) return Rational(static_cast<long long>(x));
    else return Rational(x);
  };
  for (std::size_t j = 0; j < HA.size(); ++j) {
    std::vector<V> image(static_cast<std::size_t>(CB.dim(q)), ring.zero());
    for (std::size_t s = 0; s < HA.generators[j].size(); ++s) {
      const auto& x = HA.generators[j][s];
      if (ring.is_zero(x)) continue;
      for (auto [row, v] : f.columns[s])
        image[static_cast<std::size_t>(row)] = ring.add(image[static_cast<std::size_t>(row)], ring.mul(ring.from_int(v), x));
    }
    const auto c = HB.coordinates(image);
    for (std::size_t i = 0; i < c.size(); ++i) out.matrix(i, j) = lift(c[i]);
  }
  auto order = [&](const V& o) -> BigInt {
    if constexpr (R::is_field) return BigInt(0);
    else return BigInt(o);
  };
  for (const auto& o : HA.orders) out.source_orders.push_back(order(o));
  for (const auto& o : HB.orders) out.target_orders.push_back(order(o));
  return out;
}

/// H̃_q(A; R) → H̃_q(B; R) for the simplicial map given by vertex_map.
inline InducedMap induced_map_on_homology(const SimplicialComplex& A, const SimplicialComplex& B,
                                          const std::vector<int>& vertex_map,
                                          const CoefficientRing& R, int q) {
  if (R.is_field())
    return with_field(R, [&](auto F) { return induced_map_with(F, A, B, vertex_map, q); });
  return induced_map_with(BigIntegers{}, A, B, vertex_map, q);
}

/// Whether every cycle of A in degree q maps to a boundary of B, decided by
/// sparse elimination (no explicit bases).
template <class R>
bool chain_map_zero_on_homology(const R& ring, const ChainComplex& CA, const ChainComplex& CB,
                                const SparseIntMatrix& f, int q) {
  auto cycles = kernel_basis(ring, CA.boundary(q));
  if (cycles.empty()) return true;
  std::vector<SparseVector<R>> targets;
  for (const auto& z : cycles) {
    SparseVector<R> img;
    for (const auto& [s, x] : z) {
      SparseVector<R> col = to_ring(ring, f.columns[static_cast<std::size_t>(s)]);
      sparse_axpy(ring, img, ring.neg(x), col);
    }
    targets.push_back(std::move(img));
  }
  const auto in = image_membership(ring, CB.boundary(q + 1), std::move(targets));
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

inline bool is_zero_on_homology(const SimplicialComplex& A, const SimplicialComplex& B,
                                const std::vector<int>& vertex_map, const CoefficientRing& R,
                                int q) {
  const auto CA = simplicial_chain_complex(A), CB = simplicial_chain_complex(B);
  const auto f = simplicial_chain_map(A, B, vertex_map, q);
  if (R.is_field())
    return with_field(R, [&](auto F) { return chain_map_zero_on_homology(F, CA, CB, f, q); });
  return with_integers([&](auto Z) { return chain_map_zero_on_homology(Z, CA, CB, f, q); });
}

}  // namespace fwf

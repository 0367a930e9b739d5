#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chain_complex.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace fwf {

/// Face C_{σ⊂τ} of the cube [−1,1]^m: coordinates in σ sit at −1, those
/// outside τ at +1, and the ones in τ−σ are free.
struct CubeFace {
  VertexSet sigma;
  VertexSet tau;

  int dimension() const { return (tau - sigma).size(); }
  VertexSet free_coordinates() const { return tau - sigma; }
  friend bool operator==(const CubeFace&, const CubeFace&) = default;
  friend auto operator<=>(const CubeFace& a, const CubeFace& b) {
    if (auto c = a.sigma <=> b.sigma; c != 0) return c;
    return a.tau <=> b.tau;
  }
};

/// Default cap on m for explicit cube complexes (3^m cells).
inline constexpr int kDefaultMaxCubeVertices = 12;

/// Set of cube faces, bucketed by dimension and sorted within a bucket.
class CubicalComplex {
 public:
  CubicalComplex(int m, std::vector<CubeFace> faces, std::string provenance)
      : m_(m), provenance_(std::move(provenance)) {
    if (m > 32) throw std::invalid_argument("cubical complexes are limited to m <= 32");
    int top = -1;
    for (const auto& f : faces) top = std::max(top, f.dimension());
    by_dim_.assign(static_cast<std::size_t>(top + 1), {});
    for (const auto& f : faces) by_dim_[static_cast<std::size_t>(f.dimension())].push_back(f);
    for (auto& level : by_dim_) {
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
      for (std::size_t i = 0; i < level.size(); ++i) index_.emplace(key(level[i]), static_cast<int>(i));
    }
  }

  int m() const { return m_; }
  const std::string& provenance() const { return provenance_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<CubeFace>& faces(int d) const {
    static const std::vector<CubeFace> none;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::vector<std::size_t> counts_by_dimension() const {
    std::vector<std::size_t> c;
    for (const auto& level : by_dim_) c.push_back(level.size());
    return c;
  }

  std::size_t num_faces() const { return index_.size(); }

  bool contains(const CubeFace& f) const { return index_.count(key(f)) != 0; }

  /// Position of f within faces(f.dimension()), or −1.
  int face_index(const CubeFace& f) const {
    auto it = index_.find(key(f));
    return it == index_.end() ? -1 : it->second;
  }

  /// Every face of every face is present.
  bool is_boundary_closed() const {
    for (const auto& level : by_dim_)
      for (const auto& f : level)
        for (int j : f.free_coordinates().vertices())
          if (!contains({f.sigma, f.tau.without(j)}) || !contains({f.sigma.with(j), f.tau})) return false;
    return true;
  }

 private:
  static std::uint64_t key(const CubeFace& f) { return (f.sigma.bits() << 32) | f.tau.bits(); }

  int m_;
  std::string provenance_;
  std::vector<std::vector<CubeFace>> by_dim_;
  std::unordered_map<std::uint64_t, int> index_;
};

namespace detail {

inline void check_cube_size(const SimplicialComplex& K, int max_m) {
  if (K.m() > max_m)
    throw std::invalid_argument("m = " + std::to_string(K.m()) + " exceeds the cube-complex cap of " +
                                std::to_string(max_m) + " (raise --max-m to override)");
}

/// All C_{σ⊂τ} with τ−σ ∈ K and |σ| ≥ min_sigma.
inline std::vector<CubeFace> rmac_faces(const SimplicialComplex& K, int min_sigma) {
  std::vector<CubeFace> out;
  const VertexSet ground = K.ground_set();
  K.for_each_face([&](VertexSet mu) {
    for_each_subset(ground - mu, [&](VertexSet sigma) {
      if (sigma.size() >= min_sigma) out.push_back({sigma, sigma | mu});
    });
  });
  return out;
}

}  // namespace detail

/// The real moment-angle complex of K as a subcomplex of the cube.
inline CubicalComplex build_rmac(const SimplicialComplex& K, int max_m = kDefaultMaxCubeVertices) {
  detail::check_cube_size(K, max_m);
  return CubicalComplex(K.m(), detail::rmac_faces(K, 0), "rmac");
}

/// Level i of the fat wedge filtration: cells with at least m−i coordinates
/// at the base point −1.
inline CubicalComplex rmac_filtration(const SimplicialComplex& K, int i,
                                      int max_m = kDefaultMaxCubeVertices) {
  if (i < 0 || i > K.m())
    throw std::invalid_argument("filtration level " + std::to_string(i) + " outside [0, " +
                                std::to_string(K.m()) + "]");
  detail::check_cube_size(K, max_m);
  return CubicalComplex(K.m(), detail::rmac_faces(K, K.m() - i), "rmac_filtration:" + std::to_string(i));
}

/// Augmented cellular chain complex (degree −1 is a single point). For the
/// k-th smallest free coordinate j of C_{σ⊂τ} the boundary picks up
/// (−1)^{k−1}(C_{σ⊂τ−j} − C_{σ∪j⊂τ}).
inline ChainComplex cubical_chain_complex(const CubicalComplex& C) {
  ChainComplex out;
  out.min_degree = -1;
  out.dims.push_back(1);
  for (int d = 0; d <= C.dimension(); ++d) out.dims.push_back(static_cast<int>(C.faces(d).size()));
  out.maps.emplace_back(0, 1);
  SparseIntMatrix aug(1, static_cast<int>(C.faces(0).size()));
  for (auto& col : aug.columns) col.emplace_back(0, 1);
  out.maps.push_back(std::move(aug));
  for (int d = 1; d <= C.dimension(); ++d) {
    const auto& src = C.faces(d);
    SparseIntMatrix b(static_cast<int>(C.faces(d - 1).size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& f = src[c];
      auto& col = b.columns[c];
      int sign = 1;
      for (int j : f.free_coordinates().vertices()) {
        const int up = C.face_index({f.sigma, f.tau.without(j)});
        const int down = C.face_index({f.sigma.with(j), f.tau});
        if (up < 0 || down < 0)
          throw std::invalid_argument("cubical complex is not closed under taking faces");
        col.emplace_back(up, sign);
        col.emplace_back(down, -sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
    }
    out.maps.push_back(std::move(b));
  }
  audit(out, "cubical chain complex");
  return out;
}

/// Reduced homology of the cube complex (degree −1 included, always zero for
/// a nonempty complex).
inline HomologyProfile cubical_homology(const CubicalComplex& C, const CoefficientRing& R) {
  return homology(cubical_chain_complex(C), R);
}

/// Unreduced H_0 rank from a reduced profile of a nonempty space.
inline long long unreduced_betti0(const HomologyProfile& reduced) { return reduced.betti(0) + 1; }

/// Direct sum of groups with torsion brought back to invariant-factor form.
inline HomologyGroup direct_sum(const std::vector<HomologyGroup>& parts) {
  HomologyGroup out;
  std::map<std::uint64_t, std::vector<BigInt>> prime_powers;
  for (const auto& g : parts) {
    out.free_rank += g.free_rank;
    for (const auto& t : g.torsion) {
      BigInt rest = t;
      for (auto p : prime_factors(t)) {
        BigInt pk = 1;
        while (rest % p == 0) rest /= p, pk *= p;
        prime_powers[p].push_back(pk);
      }
    }
  }
  std::size_t n = 0;
  for (auto& [p, v] : prime_powers) {
    std::sort(v.begin(), v.end(), std::greater<>());
    n = std::max(n, v.size());
  }
  // The largest invariant factor takes the largest power of every prime.
  std::vector<BigInt> factors(n, BigInt(1));
  for (const auto& [p, v] : prime_powers)
    for (std::size_t k = 0; k < v.size(); ++k) factors[k] *= v[k];
  std::reverse(factors.begin(), factors.end());
  out.torsion = std::move(factors);
  return out;
}

struct HochsterReport {
  HomologyProfile lhs;  ///< H̃_*(ℝZ_K)
  HomologyProfile rhs;  ///< ⊕_{I≠∅} H̃_{*−1}(K_I)
  bool equal = false;
};

/// ⊕_{∅≠I⊆[m]} H̃_{q−1}(K_I; R), from precomputed full-subcomplex homologies.
inline HomologyProfile hochster_sum(const std::vector<HomologyProfile>& full, const CoefficientRing& R) {
  HomologyProfile rhs;
  rhs.ring = R;
  rhs.min_degree = -1;
  int top = -1;
  for (std::size_t mask = 1; mask < full.size(); ++mask) top = std::max(top, full[mask].max_degree() + 1);
  for (int q = -1; q <= top; ++q) {
    std::vector<HomologyGroup> parts;
    for (std::size_t mask = 1; mask < full.size(); ++mask) parts.push_back(full[mask].at(q - 1));
    rhs.groups.push_back(direct_sum(parts));
  }
  rhs.trim();
  return rhs;
}

/// Compare H̃_*(ℝZ_K) with the full-subcomplex sum in every degree.
inline HochsterReport hochster_identity_check(const SimplicialComplex& K, const CoefficientRing& R,
                                              int max_m = kDefaultMaxCubeVertices) {
  HochsterReport rep;
  rep.lhs = cubical_homology(build_rmac(K, max_m), R);
  rep.rhs = hochster_sum(full_subcomplex_homologies(K, R), R);
  rep.equal = rep.lhs.same_groups(rep.rhs);
  return rep;
}

}  // namespace fwf

#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "sparse.hpp"

namespace fwf {

/// Raised when a constructed differential fails ∂∘∂ = 0.
struct ChainComplexError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Free chain complex C_lo ← ... ← C_hi with integer differentials.
/// boundary(q) : C_q → C_{q−1}; the map out of the lowest degree is zero.
struct ChainComplex {
  int min_degree = -1;
  std::vector<int> dims;                ///< dims[k] = rank of C_{min_degree + k}
  std::vector<SparseIntMatrix> maps;    ///< maps[k] : C_{min_degree+k} → C_{min_degree+k−1}

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  int dim(int q) const {
    const int k = q - min_degree;
    return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<std::size_t>(k)];
  }
  /// ∂_q as a dim(q−1) × dim(q) matrix (zero outside the range).
  SparseIntMatrix boundary(int q) const {
    const int k = q - min_degree;
    if (k <= 0 || k >= static_cast<int>(dims.size())) return SparseIntMatrix(dim(q - 1), dim(q));
    return maps[static_cast<std::size_t>(k)];
  }
};

/// Number of differentials verified to square to zero in this process.
inline std::atomic<long>& boundary_square_checks() {
  static std::atomic<long> counter{0};
  return counter;
}

/// Differentials found not to square to zero (should stay 0).
inline std::atomic<long>& boundary_square_failures() {
  static std::atomic<long> counter{0};
  return counter;
}

/// True iff A·B = 0 (A after B).
inline bool composes_to_zero(const SparseIntMatrix& A, const SparseIntMatrix& B) {
  std::vector<std::int64_t> acc(static_cast<std::size_t>(A.rows), 0);
  std::vector<int> touched;
  for (const auto& col : B.columns) {
    touched.clear();
    for (auto [k, b] : col)
      for (auto [i, a] : A.columns[static_cast<std::size_t>(k)]) {
        if (acc[static_cast<std::size_t>(i)] == 0) touched.push_back(i);
        acc[static_cast<std::size_t>(i)] += a * b;
      }
    bool ok = true;
    for (int i : touched) {
      if (acc[static_cast<std::size_t>(i)] != 0) ok = false;
      acc[static_cast<std::size_t>(i)] = 0;
    }
    if (!ok) return false;
  }
  return true;
}

/// Check every ∂_{q−1}∘∂_q and count the check.
inline void verify_boundary_squared(const ChainComplex& C, const std::string& what) {
  for (std::size_t k = 2; k < C.maps.size(); ++k) {
    if (!composes_to_zero(C.maps[k - 1], C.maps[k])) {
      ++boundary_square_failures();
      throw ChainComplexError(what + ": boundary does not square to zero in degree " +
                              std::to_string(C.min_degree + static_cast<int>(k)));
    }
  }
  ++boundary_square_checks();
}

/// Builders call this on every complex they produce; it is a no-op unless
/// FWF_AUDIT_CHAIN_COMPLEXES is defined.
inline void audit(const ChainComplex& C, const char* what) {
#ifdef FWF_AUDIT_CHAIN_COMPLEXES
  verify_boundary_squared(C, what);
#else
  (void)C;
  (void)what;
#endif
}

/// Augmented simplicial chain complex: degrees −1..dim K, basis in degree q
/// is K.faces(q), ∂[v_0..v_q] = Σ (−1)^i [.. v̂_i ..].
inline ChainComplex simplicial_chain_complex(const SimplicialComplex& K) {
  ChainComplex C;
  C.min_degree = -1;
  const int top = K.dimension();
  for (int q = -1; q <= top; ++q) C.dims.push_back(static_cast<int>(K.faces(q).size()));
  C.maps.emplace_back(0, C.dims[0]);
  for (int q = 0; q <= top; ++q) {
    const auto& faces = K.faces(q);
    SparseIntMatrix d(C.dim(q - 1), C.dim(q));
    for (std::size_t j = 0; j < faces.size(); ++j) {
      auto& col = d.columns[j];
      int sign = 1;
      for (int v : faces[j].vertices()) {
        col.emplace_back(K.face_index(faces[j].without(v)), sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
    }
    C.maps.push_back(std::move(d));
  }
  audit(C, "simplicial chain complex");
  return C;
}

/// Chain map on simplicial chains induced by an injective vertex map
/// A → B (vertex v of A goes to vertex_map[v−1] of B), in degree q. A simplex
/// whose image is listed out of ascending order picks up the sign of the
/// sorting permutation.
inline SparseIntMatrix simplicial_chain_map(const SimplicialComplex& A, const SimplicialComplex& B,
                                            const std::vector<int>& vertex_map, int q) {
  const auto& src = A.faces(q);
  SparseIntMatrix f(static_cast<int>(B.faces(q).size()), static_cast<int>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    std::vector<int> image;
    for (int v : src[j].vertices()) image.push_back(vertex_map.at(static_cast<std::size_t>(v - 1)));
    int inversions = 0;
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b) {
        if (image[a] == image[b]) throw std::invalid_argument("vertex map is not injective on a face");
        if (image[a] > image[b]) ++inversions;
      }
    VertexSet target;
    for (int w : image) target = target.with(w);
    const int row = B.face_index(target);
    if (row < 0 || target.size() != q + 1)
      throw std::invalid_argument("vertex map sends face " + src[j].to_string() + " to non-face " +
                                  target.to_string());
    f.columns[j].emplace_back(row, inversions % 2 ? -1 : 1);
  }
  return f;
}

}  // namespace fwf

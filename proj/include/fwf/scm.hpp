#pragma once

#include "complex.hpp"
#include "homology.hpp"

namespace fwf {

/// Sequential Cohen–Macaulayness over R: for every face σ (∅ included) and
/// 0 ≤ i ≤ dim lk σ, the subcomplex of lk σ generated by its faces of
/// dimension ≥ i is (i−1)-acyclic.
inline bool is_scm(const SimplicialComplex& K, const CoefficientRing& R) {
  bool ok = true;
  K.for_each_face([&](VertexSet sigma) {
    if (!ok) return;
    const auto L = link(K, sigma);
    for (int i = 0; i <= L.dimension() && ok; ++i)
      if (!is_i_acyclic(generated_subcomplex(L, i, Generation::at_least), R, i - 1)) ok = false;
  });
  return ok;
}

inline bool is_cm(const SimplicialComplex& K, const CoefficientRing& R) { return K.is_pure() && is_scm(K, R); }

/// SCM of the Alexander dual; the void dual is vacuously SCM.
inline bool is_dual_scm(const SimplicialComplex& K, const CoefficientRing& R) {
  if (K.facets().size() == 1 && K.facets()[0] == K.ground_set()) return true;
  return is_scm(alexander_dual(K), R);
}

}  // namespace fwf

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "chain_complex.hpp"
#include "complex.hpp"
#include "homology.hpp"
#include "tor_algebra.hpp"

namespace fwf {

struct JoinWitness {
  VertexSet I, J;
  int degree = 0;  ///< degree of the homology class of K_{I∪J} that survives
  friend bool operator==(const JoinWitness&, const JoinWitness&) = default;
};

struct JoinGolodVerdict {
  CoefficientRing ring;
  bool golod = true;
  std::optional<JoinWitness> witness;
};

/// Vertex map K_{I∪J} → K_I * K_J in the re-indexed vertex labels of both.
inline std::vector<int> join_inclusion_map(VertexSet I, VertexSet J) {
  std::vector<int> map;
  for (int v : (I | J).vertices())
    map.push_back(I.contains(v) ? I.count_below(v) + 1 : I.size() + J.count_below(v) + 1);
  return map;
}

/// Whether K_{I∪J} → K_I * K_J is zero on H̃_q(−; R).
inline bool join_inclusion_zero(const SimplicialComplex& K, VertexSet I, VertexSet J, int q,
                                const CoefficientRing& R) {
  const auto A = full_subcomplex(K, I | J);
  const auto B = join(full_subcomplex(K, I), full_subcomplex(K, J));
  return is_zero_on_homology(A, B, join_inclusion_map(I, J), R, q);
}

/// Golodness through the join criterion: for all disjoint nonempty I, J the
/// inclusion K_{I∪J} → K_I * K_J vanishes in homology. Pairs where one of the
/// three complexes is acyclic are skipped. The witness is the lexicographically
/// smallest failing (I, J, degree) with I before J.
inline JoinGolodVerdict golod_via_join(const SimplicialComplex& K, const CoefficientRing& R,
                                       const std::vector<HomologyProfile>* full = nullptr) {
  JoinGolodVerdict out;
  out.ring = R;
  std::vector<HomologyProfile> own;
  if (!full) {
    own = full_subcomplex_homologies(K, R);
    full = &own;
  }
  std::vector<VertexSet> live;
  for (std::size_t mask = 1; mask < full->size(); ++mask)
    if (!(*full)[mask].is_zero()) live.push_back(VertexSet(mask));
  std::sort(live.begin(), live.end());
  for (std::size_t a = 0; a < live.size(); ++a)
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const VertexSet I = live[a], J = live[b];
      if (I.intersects(J)) continue;
      const auto& HU = (*full)[(I | J).bits()];
      if (HU.is_zero()) continue;
      const auto A = full_subcomplex(K, I | J);
      const auto B = join(full_subcomplex(K, I), full_subcomplex(K, J));
      const auto map = join_inclusion_map(I, J);
      for (int q = HU.min_degree; q <= HU.max_degree(); ++q) {
        if (HU.at(q).is_zero()) continue;
        if (is_zero_on_homology(A, B, map, R, q)) continue;
        out.golod = false;
        out.witness = JoinWitness{I, J, q};
        return out;
      }
    }
  return out;
}

/// Primes p for which mod-p homology of some full subcomplex differs from the
/// rational one. Join targets add nothing: by the Künneth formula for joins
/// their torsion primes already divide torsion of K_I or K_J.
inline std::vector<std::uint64_t> torsion_primes(const std::vector<HomologyProfile>& integral_full) {
  std::set<std::uint64_t> primes;
  for (const auto& H : integral_full)
    for (const auto& g : H.groups)
      for (const auto& t : g.torsion)
        for (auto p : prime_factors(t)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

struct GolodReport {
  JoinGolodVerdict join_Z;
  std::vector<TorGolodVerdict> tor;         ///< Q, Z/2, Z/3 and the torsion primes
  std::vector<JoinGolodVerdict> join_field;  ///< the join oracle over the same fields
  std::vector<std::uint64_t> primes;         ///< torsion primes of full subcomplexes
  bool oracles_agree = true;
  bool golod_over_Z = true;  ///< Golod over Q and every relevant Z/p
  bool golod = true;         ///< golod_over_Z and the integral join criterion
};

inline GolodReport golod_report(const SimplicialComplex& K) {
  GolodReport rep;
  const auto integral = full_subcomplex_homologies(K, CoefficientRing::Z());
  rep.join_Z = golod_via_join(K, CoefficientRing::Z(), &integral);
  rep.primes = torsion_primes(integral);
  std::set<std::uint64_t> ps{2, 3};
  ps.insert(rep.primes.begin(), rep.primes.end());
  std::vector<CoefficientRing> rings{CoefficientRing::Q()};
  for (auto p : ps) rings.push_back(CoefficientRing::Zp(p));
  for (const auto& R : rings) {
    rep.tor.push_back(golod_via_tor(K, R));
    rep.join_field.push_back(golod_via_join(K, R));
    if (rep.tor.back().golod != rep.join_field.back().golod) rep.oracles_agree = false;
    if (!rep.tor.back().golod) rep.golod_over_Z = false;
  }
  rep.golod = rep.golod_over_Z && rep.join_Z.golod;
  return rep;
}

}  // namespace fwf

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chain_complex.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace fwf {

/// Basis monomial u_ω v_σ of the finite Koszul model, ω ∩ σ = ∅, σ ∈ K.
struct TorBasisElement {
  VertexSet omega;
  VertexSet sigma;

  int degree() const { return omega.size() + 2 * sigma.size(); }
  VertexSet multidegree() const { return omega | sigma; }
  std::string to_string() const {
    std::string s;
    if (!omega.empty()) s += "u" + omega.to_string();
    if (!sigma.empty()) s += "v" + sigma.to_string();
    return s.empty() ? "1" : s;
  }
  friend bool operator==(const TorBasisElement&, const TorBasisElement&) = default;
  friend auto operator<=>(const TorBasisElement& a, const TorBasisElement& b) {
    if (auto c = a.multidegree() <=> b.multidegree(); c != 0) return c;
    return a.sigma <=> b.sigma;
  }
};

/// Sign of u_a · u_b = ± u_{a∪b} for disjoint a, b: one factor −1 for every
/// pair x ∈ a, y ∈ b with x > y.
inline int exterior_sign(VertexSet a, VertexSet b) {
  int inversions = 0;
  for (int y : b.vertices()) inversions += a.size() - a.count_below(y + 1);
  return inversions % 2 ? -1 : 1;
}

/// A cohomology class of the model with a cocycle representative, lifted to
/// rational coefficients for reporting (Z/p residues as integers 0..p−1).
struct TorClass {
  VertexSet multidegree;
  int degree = 0;
  std::vector<std::pair<TorBasisElement, Rational>> representative;

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : representative) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const Rational a = abs(c);
      if (a != 1) os << a << "*";
      os << e.to_string();
    }
    return first ? "0" : os.str();
  }
};

/// The Koszul-type cochain algebra Λ[u_1..u_m] ⊗ 𝕜[K]/(v_i², u_i v_i) with
/// d u_i = v_i. It splits by multidegree I = ω ∪ σ; the piece for I is the
/// (shifted) cochain complex of K_I and is computed on demand.
template <class F>
class TorModel {
 public:
  using V = typename F::value_type;
  using Element = std::map<TorBasisElement, V>;

  /// Cochains of one multidegree, graded by s = |σ|.
  struct Piece {
    VertexSet I;
    std::vector<std::vector<VertexSet>> basis;  ///< basis[s]: σ ⊆ I in K with |σ| = s, sorted
    ChainComplex cochains;                     ///< chain degree −s, integer signs
    std::vector<HomologyBasis<F>> classes;     ///< classes[s]: basis of H^s

    int index(int s, VertexSet sigma) const {
      const auto& b = basis[static_cast<std::size_t>(s)];
      auto it = std::lower_bound(b.begin(), b.end(), sigma);
      return (it != b.end() && *it == sigma) ? static_cast<int>(it - b.begin()) : -1;
    }
    std::size_t dimension(int s) const {
      return s < 0 || s >= static_cast<int>(classes.size()) ? 0 : classes[static_cast<std::size_t>(s)].size();
    }
    std::size_t total_dimension() const {
      std::size_t n = 0;
      for (const auto& c : classes) n += c.size();
      return n;
    }
  };

  TorModel(SimplicialComplex K, F field) : K_(std::move(K)), field_(field) {}

  const SimplicialComplex& complex() const { return K_; }
  const F& field() const { return field_; }

  Element basis_vector(VertexSet omega, VertexSet sigma) const { return {{TorBasisElement{omega, sigma}, field_.one()}}; }

  bool is_basis_element(const TorBasisElement& e) const {
    return !e.omega.intersects(e.sigma) && e.multidegree().is_subset_of(K_.ground_set()) && K_.contains(e.sigma);
  }

  /// d(u_ω v_σ) = Σ_{i∈ω} (−1)^{#{j∈ω : j<i}} u_{ω−i} v_{σ∪i}, terms with
  /// σ∪i ∉ K dropped.
  Element d(const Element& x) const {
    Element out;
    for (const auto& [e, c] : x) {
      int k = 0;
      for (int i : e.omega.vertices()) {
        const VertexSet s = e.sigma.with(i);
        if (K_.contains(s)) accumulate(out, {e.omega.without(i), s}, k % 2 ? field_.neg(c) : c);
        ++k;
      }
    }
    return out;
  }

  Element product(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        if (a.multidegree().intersects(b.multidegree())) continue;
        const VertexSet s = a.sigma | b.sigma;
        if (!K_.contains(s)) continue;
        const V c = field_.mul(ca, cb);
        accumulate(out, {a.omega | b.omega, s}, exterior_sign(a.omega, b.omega) < 0 ? field_.neg(c) : c);
      }
    return out;
  }

  Element add(Element x, const Element& y, const V& scale) const {
    for (const auto& [e, c] : y) accumulate(x, e, field_.mul(scale, c));
    return x;
  }

  /// Degree of the basis monomials (total degree |ω| + 2|σ|); the element
  /// must be homogeneous.
  static int degree_of(const Element& x) { return x.empty() ? 0 : x.begin()->first.degree(); }

  const Piece& piece(VertexSet I) const {
    auto it = cache_.find(I.bits());
    if (it == cache_.end()) it = cache_.emplace(I.bits(), std::make_unique<Piece>(build_piece(I))).first;
    return *it->second;
  }

  /// Whether a cocycle concentrated in one multidegree and one σ-size is a
  /// coboundary.
  bool is_coboundary(const Element& z) const {
    if (z.empty()) return true;
    const auto& first = z.begin()->first;
    const Piece& P = piece(first.multidegree());
    const int s = first.sigma.size();
    const auto coords = P.classes[static_cast<std::size_t>(s)].coordinates(to_vector(P, s, z));
    return std::all_of(coords.begin(), coords.end(), [&](const V& c) { return field_.is_zero(c); });
  }

  Element representative(const Piece& P, int s, std::size_t t) const {
    Element out;
    const auto& g = P.classes[static_cast<std::size_t>(s)].generators[t];
    for (std::size_t c = 0; c < g.size(); ++c)
      if (!field_.is_zero(g[c])) out.emplace(TorBasisElement{P.I - P.basis[static_cast<std::size_t>(s)][c], P.basis[static_cast<std::size_t>(s)][c]}, g[c]);
    return out;
  }

  TorClass describe(const Element& x) const {
    TorClass out;
    if (!x.empty()) {
      out.multidegree = x.begin()->first.multidegree();
      out.degree = x.begin()->first.degree();
    }
    for (const auto& [e, c] : x) out.representative.emplace_back(e, lift(c));
    return out;
  }

  /// dim Tor in each total degree.
  std::map<int, long long> dimensions() const {
    std::map<int, long long> out;
    for_each_subset(K_.ground_set(), [&](VertexSet I) {
      const Piece& P = piece(I);
      for (int s = 0; s < static_cast<int>(P.classes.size()); ++s)
        if (P.dimension(s)) out[I.size() + s] += static_cast<long long>(P.dimension(s));
    });
    return out;
  }

 private:
  void accumulate(Element& out, const TorBasisElement& e, const V& c) const {
    if (field_.is_zero(c)) return;
    auto [it, fresh] = out.emplace(e, c);
    if (fresh) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) out.erase(it);
  }

  std::vector<V> to_vector(const Piece& P, int s, const Element& z) const {
    std::vector<V> v(P.basis[static_cast<std::size_t>(s)].size(), field_.zero());
    for (const auto& [e, c] : z) {
      const int i = P.index(s, e.sigma);
      if (i < 0 || e.multidegree() != P.I) throw std::invalid_argument("element is not homogeneous");
      v[static_cast<std::size_t>(i)] = c;
    }
    return v;
  }

  Rational lift(const V& c) const {
    if constexpr (std::is_same_v<F, PrimeField>) return Rational(static_cast<long long>(c));
    else return Rational(c);
  }

  Piece build_piece(VertexSet I) const {
    Piece P;
    P.I = I;
    const int n = I.size();
    P.basis.resize(static_cast<std::size_t>(n + 1));
    for (int s = 0; s <= n; ++s)
      for (VertexSet f : K_.faces(s - 1))
        if (f.is_subset_of(I)) P.basis[static_cast<std::size_t>(s)].push_back(f);
    while (P.basis.size() > 1 && P.basis.back().empty()) P.basis.pop_back();
    const int top = static_cast<int>(P.basis.size()) - 1;
    // Chain degree q = −s, so the coboundary C^s → C^{s+1} is ∂_{−s}.
    ChainComplex& C = P.cochains;
    C.min_degree = -top;
    for (int s = top; s >= 0; --s) C.dims.push_back(static_cast<int>(P.basis[static_cast<std::size_t>(s)].size()));
    for (int s = top; s >= 0; --s) {
      const auto& src = P.basis[static_cast<std::size_t>(s)];
      SparseIntMatrix m(s == top ? 0 : static_cast<int>(P.basis[static_cast<std::size_t>(s + 1)].size()),
                        static_cast<int>(src.size()));
      if (s < top)
        for (std::size_t j = 0; j < src.size(); ++j) {
          const VertexSet omega = I - src[j];
          int k = 0;
          for (int i : omega.vertices()) {
            const int row = P.index(s + 1, src[j].with(i));
            if (row >= 0) m.columns[j].emplace_back(row, k % 2 ? -1 : 1);
            ++k;
          }
          std::sort(m.columns[j].begin(), m.columns[j].end());
        }
      C.maps.push_back(std::move(m));
    }
    audit(C, "Koszul complex");
    for (int s = 0; s <= top; ++s) P.classes.push_back(homology_basis(field_, C, -s));
    return P;
  }

  SimplicialComplex K_;
  F field_;
  mutable std::map<std::uint64_t, std::unique_ptr<Piece>> cache_;
};

template <class F>
TorModel<F> build_tor(const SimplicialComplex& K, F field) {
  return TorModel<F>(K, field);
}

/// dim_𝕜 Tor^i over a field, keyed by total degree i.
inline std::map<int, long long> tor_dimensions(const SimplicialComplex& K, const CoefficientRing& R) {
  return with_field(R, [&](auto F) { return build_tor(K, F).dimensions(); });
}

/// Σ_{I ⊆ [m]} dim H̃^{i−|I|−1}(K_I; 𝕜), keyed by i (I = ∅ contributes the
/// unit through H̃^{−1}({∅})).
inline std::map<int, long long> hochster_tor_dimensions(const SimplicialComplex& K, const CoefficientRing& R) {
  if (!R.is_field()) throw std::invalid_argument("Tor dimensions need a field");
  const auto full = full_subcomplex_homologies(K, R);
  std::map<int, long long> out;
  for (std::size_t mask = 0; mask < full.size(); ++mask) {
    const int n = VertexSet(mask).size();
    const auto& H = full[mask];
    for (int q = H.min_degree; q <= H.max_degree(); ++q)
      if (H.betti(q)) out[q + n + 1] += H.betti(q);
  }
  return out;
}

inline bool hochster_tor_check(const SimplicialComplex& K, const CoefficientRing& R) {
  return tor_dimensions(K, R) == hochster_tor_dimensions(K, R);
}

struct TorGolodVerdict {
  CoefficientRing ring;
  bool golod = true;
  std::optional<std::pair<TorClass, TorClass>> witness;  ///< classes with nonzero product
};

/// Golodness via products: every product of two basis classes of positive
/// degree is a coboundary. Products are bilinear and respect multidegree, so
/// basis classes of disjoint multidegrees suffice. The witness is the first
/// failing pair with I before J in lexicographic order.
template <class F>
TorGolodVerdict golod_via_tor_with(const TorModel<F>& T, const CoefficientRing& R) {
  TorGolodVerdict out;
  out.ring = R;
  const auto& K = T.complex();
  std::vector<VertexSet> multidegrees;
  for_each_subset(K.ground_set(), [&](VertexSet I) {
    if (!I.empty() && T.piece(I).total_dimension() > 0) multidegrees.push_back(I);
  });
  std::sort(multidegrees.begin(), multidegrees.end());
  for (std::size_t a = 0; a < multidegrees.size(); ++a)
    for (std::size_t b = a + 1; b < multidegrees.size(); ++b) {
      const VertexSet I = multidegrees[a], J = multidegrees[b];
      if (I.intersects(J)) continue;
      const auto &PI = T.piece(I), &PJ = T.piece(J), &PU = T.piece(I | J);
      if (PU.total_dimension() == 0) continue;
      for (int s = 0; s < static_cast<int>(PI.classes.size()); ++s)
        for (int t = 0; t < static_cast<int>(PJ.classes.size()); ++t) {
          if (PU.dimension(s + t) == 0) continue;
          for (std::size_t x = 0; x < PI.dimension(s); ++x)
            for (std::size_t y = 0; y < PJ.dimension(t); ++y) {
              const auto rx = T.representative(PI, s, x), ry = T.representative(PJ, t, y);
              if (T.is_coboundary(T.product(rx, ry))) continue;
              out.golod = false;
              out.witness.emplace(T.describe(rx), T.describe(ry));
              return out;
            }
        }
    }
  return out;
}

inline TorGolodVerdict golod_via_tor(const SimplicialComplex& K, const CoefficientRing& R) {
  return with_field(R, [&](auto F) { return golod_via_tor_with(build_tor(K, F), R); });
}

}  // namespace fwf

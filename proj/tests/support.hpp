#pragma once
// Shared test helpers: random complexes and brute-force oracles that do not
// go through the library's own face cache or normal-form code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <fwf/complex.hpp>
#include <fwf/rings.hpp>
#include <fwf/matrix.hpp>

namespace fwf::testing {

inline VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }

inline SimplicialComplex cplx(int m, std::vector<std::vector<int>> gens) {
  return make_complex(m, gens);
}

/// Random complex on [m] from a few random generators. With ghosts allowed
/// some vertices may be missing.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int m, bool allow_ghosts = true) {
  std::uniform_int_distribution<int> count(1, m + 2);
  std::uniform_int_distribution<int> size(1, std::max(1, m - 1));
  std::uniform_int_distribution<int> vertex(1, m);
  std::vector<VertexSet> gens;
  const int n = count(rng);
  for (int g = 0; g < n; ++g) {
    VertexSet s;
    const int k = size(rng);
    for (int t = 0; t < k; ++t) s = s.with(vertex(rng));
    gens.push_back(s);
  }
  if (!allow_ghosts)
    for (int v = 1; v <= m; ++v) gens.push_back(VertexSet{}.with(v));
  std::bernoulli_distribution empty(0.03);
  if (allow_ghosts && empty(rng)) gens.clear();
  return make_complex(m, gens);
}

/// Random graph on [m] with all vertices present.
inline SimplicialComplex random_graph(std::mt19937_64& rng, int m, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<VertexSet> gens;
  for (int v = 1; v <= m; ++v) gens.push_back(VertexSet{}.with(v));
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (edge(rng)) gens.push_back(VertexSet::of({a, b}));
  return make_complex(m, gens);
}

/// σ is a face iff it sits inside some facet.
inline bool bf_is_face(const SimplicialComplex& K, VertexSet s) {
  for (auto f : K.facets())
    if (s.is_subset_of(f)) return true;
  return false;
}

/// All faces by scanning every subset of [m].
inline std::vector<VertexSet> bf_faces(const SimplicialComplex& K) {
  std::vector<VertexSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << K.m()); ++b)
    if (bf_is_face(K, VertexSet(b))) out.push_back(VertexSet(b));
  return out;
}

/// Inclusion-minimal non-faces by scanning every subset of [m].
inline std::vector<VertexSet> bf_minimal_nonfaces(const SimplicialComplex& K) {
  std::vector<VertexSet> out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << K.m()); ++b) {
    VertexSet s(b);
    if (bf_is_face(K, s)) continue;
    bool minimal = true;
    for (int v : s.vertices())
      if (!bf_is_face(K, s.without(v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Euler characteristic of the augmented chain complex, Σ (−1)^q f_q, q ≥ −1.
inline long long reduced_euler(const SimplicialComplex& K) {
  long long chi = 0;
  for (auto s : bf_faces(K)) chi += (s.size() % 2 == 1) ? 1 : -1;  // dim = size − 1
  return chi;
}

// --- Integer normal form oracles -------------------------------------------

/// Textbook elementary-operations Smith form: repeatedly clear the first row
/// and column with gcd steps (extended Euclid), no pivot strategy.
inline std::vector<BigInt> naive_smith_divisors(Matrix<BigInt> A) {
  const std::size_t r = A.rows(), c = A.cols();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    // find any nonzero
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r && pi == r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (A(i, j) != 0) {
          pi = i, pj = j;
          break;
        }
    if (pi == r) break;
    A.swap_rows(t, pi);
    A.swap_cols(t, pj);
    bool done = false;
    while (!done) {
      done = true;
      // gcd the column into the pivot with 2x2 unimodular row operations
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A(i, t) == 0) continue;
        if (A(i, t) % A(t, t) == 0) {
          const BigInt q = A(i, t) / A(t, t);
          for (std::size_t j = t; j < c; ++j) A(i, j) -= q * A(t, j);
          continue;
        }
        BigInt a = A(t, t), b = A(i, t);
        // extended gcd
        BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
        while (bb != 0) {
          BigInt q = aa / bb, tmp = aa - q * bb;
          aa = bb, bb = tmp;
          tmp = x0 - q * x1, x0 = x1, x1 = tmp;
          tmp = y0 - q * y1, y0 = y1, y1 = tmp;
        }
        // aa = x0 a + y0 b;  rows: [x0 y0; -b/aa a/aa]
        const BigInt ua = -b / aa, ub = a / aa;
        for (std::size_t j = t; j < c; ++j) {
          BigInt rt = x0 * A(t, j) + y0 * A(i, j);
          BigInt ri = ua * A(t, j) + ub * A(i, j);
          A(t, j) = rt, A(i, j) = ri;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A(t, j) == 0) continue;
        if (A(t, j) % A(t, t) == 0) {
          const BigInt q = A(t, j) / A(t, t);
          for (std::size_t i = t; i < r; ++i) A(i, j) -= q * A(i, t);
          continue;
        }
        BigInt a = A(t, t), b = A(t, j);
        BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a, bb = b;
        while (bb != 0) {
          BigInt q = aa / bb, tmp = aa - q * bb;
          aa = bb, bb = tmp;
          tmp = x0 - q * x1, x0 = x1, x1 = tmp;
          tmp = y0 - q * y1, y0 = y1, y1 = tmp;
        }
        const BigInt ua = -b / aa, ub = a / aa;
        for (std::size_t i = t; i < r; ++i) {
          BigInt ct = x0 * A(i, t) + y0 * A(i, j);
          BigInt cj = ua * A(i, t) + ub * A(i, j);
          A(i, t) = ct, A(i, j) = cj;
        }
        done = false;
      }
      for (std::size_t i = t + 1; i < r; ++i)
        if (A(i, t) != 0) done = false;
    }
    diag.push_back(abs(A(t, t)));
  }
  // Diagonal form reached; fix divisibility with gcd/lcm swaps.
  for (std::size_t a = 0; a < diag.size(); ++a)
    for (std::size_t b = a + 1; b < diag.size(); ++b) {
      BigInt g = gcd(diag[a], diag[b]);
      BigInt l = diag[a] / g * diag[b];
      diag[a] = g, diag[b] = l;
    }
  return diag;
}

inline BigInt det(Matrix<BigInt> A) {
  // Bareiss fraction-free elimination.
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && A(s, k) == 0) ++s;
      if (s == n) return 0;
      A.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Determinantal divisors: d_k = gcd of k×k minors / gcd of (k−1)×(k−1)
/// minors. Exponential; only for small matrices.
inline std::vector<BigInt> determinantal_divisors(const Matrix<BigInt>& A) {
  const std::size_t r = A.rows(), c = A.cols();
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    BigInt g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        Matrix<BigInt> M(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) M(a, b++) = A(i, j);
          ++a;
        }
        g = gcd(g, abs(det(M)));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

}  // namespace fwf::testing

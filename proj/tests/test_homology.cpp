#include <catch_amalgamated.hpp>

#include <fwf/corpus.hpp>
#include <fwf/homology.hpp>

#include "support.hpp"

using namespace fwf;
using fwf::testing::cplx;
using fwf::testing::vs;

namespace {

const auto Z = CoefficientRing::Z();
const auto Q = CoefficientRing::Q();

/// Reduced integral homology from dense Smith forms of whole boundary
/// matrices built straight from the facet list.
HomologyProfile dense_oracle(const SimplicialComplex& K) {
  std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(K.dimension() + 2));
  for (auto s : fwf::testing::bf_faces(K)) faces[static_cast<std::size_t>(s.size())].push_back(s);
  auto boundary = [&](int q) {  // C_q → C_{q−1}
    const auto& src = faces[static_cast<std::size_t>(q + 1)];
    const auto& dst = faces[static_cast<std::size_t>(q)];
    Matrix<BigInt> M(dst.size(), src.size(), BigInt(0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      int k = 0;
      for (int v : src[j].vertices()) {
        const auto it = std::find(dst.begin(), dst.end(), src[j].without(v));
        M(static_cast<std::size_t>(it - dst.begin()), j) = (k % 2 == 0) ? 1 : -1;
        ++k;
      }
    }
    return M;
  };
  HomologyProfile H;
  H.ring = Z;
  H.min_degree = -1;
  const int top = K.dimension();
  for (int q = -1; q <= top; ++q) {
    const std::size_t n = faces[static_cast<std::size_t>(q + 1)].size();
    const std::size_t r_out = q == -1 ? 0 : smith_normal_form(boundary(q), false).rank;
    std::vector<BigInt> in_div;
    if (q < top) in_div = smith_normal_form(boundary(q + 1), false).divisors;
    HomologyGroup g;
    g.free_rank = static_cast<long long>(n - r_out - in_div.size());
    for (const auto& d : in_div)
      if (d > 1) g.torsion.push_back(d);
    H.groups.push_back(g);
  }
  return H;
}

HomologyGroup free_group(long long r) { return {r, {}}; }

}  // namespace

TEST_CASE("reduced homology of basic complexes") {
  const auto circle = reduced_homology(boundary_of_simplex(3), Z);
  CHECK(circle.at(1) == free_group(1));
  CHECK(circle.at(0).is_zero());
  CHECK(circle.at(-1).is_zero());

  const auto rp2 = reduced_homology(corpus::rp2(), Z);
  CHECK(rp2.at(1).free_rank == 0);
  CHECK(rp2.at(1).torsion == std::vector<BigInt>{2});
  CHECK(rp2.at(2).is_zero());
  CHECK(rp2.at(0).is_zero());
  CHECK(reduced_homology(corpus::rp2(), CoefficientRing::Zp(2)).betti(2) == 1);
  CHECK(reduced_homology(corpus::rp2(), CoefficientRing::Zp(2)).betti(1) == 1);
  CHECK(reduced_homology(corpus::rp2(), Q).is_zero());
  CHECK(reduced_homology(corpus::rp2(), CoefficientRing::Zp(3)).is_zero());

  const auto e = reduced_homology(cplx(3, {}), Z);
  CHECK(e.at(-1) == free_group(1));
  CHECK(e.top_nonzero_degree() == -1);

  for (int m = 2; m <= 6; ++m) {
    const auto s = reduced_homology(boundary_of_simplex(m), Z);
    CHECK(s.top_nonzero_degree() == m - 2);
    CHECK(s.at(m - 2) == free_group(1));
    CHECK(is_acyclic(simplex(m), Z));
  }
  CHECK(reduced_homology(corpus::cycle(4), Z).at(1) == free_group(1));
  CHECK(reduced_homology(corpus::three_points(), Z).at(0) == free_group(2));
}

TEST_CASE("acyclicity queries read degree -1") {
  const auto two = cplx(2, {{1}, {2}});
  CHECK(is_i_acyclic(two, Z, -1));
  CHECK_FALSE(is_i_acyclic(two, Z, 0));
  CHECK_FALSE(is_i_acyclic(cplx(2, {}), Z, -1));
  CHECK(is_acyclic(corpus::berglund(), Z));
  for (auto R : {Q, CoefficientRing::Zp(2), CoefficientRing::Zp(3)}) CHECK(is_acyclic(simplex(4), R));
}

TEST_CASE("sparse homology agrees with a dense Smith-form oracle") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 1 + trial % 7);
    INFO(K.to_string());
    CHECK(reduced_homology(K, Z) == dense_oracle(K));
  }
  for (const auto& e : corpus::all()) {
    if (e.complex.m() > 8) continue;
    INFO(e.name);
    CHECK(reduced_homology(e.complex, Z) == dense_oracle(e.complex));
  }
}

TEST_CASE("Euler characteristic and universal coefficients") {
  std::mt19937_64 rng(223);
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 1 + trial % 7);
    const auto HZ = reduced_homology(K, Z);
    const auto HQ = reduced_homology(K, Q);
    long long chi = 0;
    for (int q = -1; q <= K.dimension(); ++q) chi += (q % 2 == 0 ? 1 : -1) * HQ.betti(q);
    CHECK(chi == fwf::testing::reduced_euler(K));
    for (int q = -1; q <= K.dimension(); ++q) CHECK(HQ.betti(q) == HZ.betti(q));
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto Hp = reduced_homology(K, CoefficientRing::Zp(p));
      for (int q = -1; q <= K.dimension() + 1; ++q) CHECK(Hp.betti(q) == mod_p_dimension(HZ, q, p));
    }
  }
  // Torsion shows up mod 2 in two adjacent degrees.
  const auto HZ = reduced_homology(corpus::rp2(), Z);
  CHECK(mod_p_dimension(HZ, 1, 2) == 1);
  CHECK(mod_p_dimension(HZ, 2, 2) == 1);
}

TEST_CASE("Alexander duality over fields") {
  std::mt19937_64 rng(227);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 7;
    const auto K = fwf::testing::random_complex(rng, m);
    const VertexSet S = K.vertex_set() | VertexSet(rng() & VertexSet::range(m).bits());
    if (K.facets().size() == 1 && K.facets()[0] == S) continue;
    const auto D = alexander_dual(K, S);
    for (auto R : {Q, CoefficientRing::Zp(2), CoefficientRing::Zp(3)}) {
      const auto H = reduced_homology(K, R), C = reduced_cohomology(D, R);
      for (int i = -1; i <= S.size(); ++i) CHECK(H.betti(i) == C.betti(S.size() - i - 3));
    }
    // Over Z the torsion moves one degree in cohomology.
    const auto H = reduced_homology(K, Z), C = reduced_cohomology(D, Z);
    for (int i = -1; i <= S.size(); ++i) CHECK(H.at(i) == C.at(S.size() - i - 3));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("Kunneth formula for joins over fields") {
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 60; ++trial) {
    const auto A = fwf::testing::random_complex(rng, 1 + trial % 4);
    const auto B = fwf::testing::random_complex(rng, 1 + trial % 3);
    const auto J = join(A, B);
    for (auto R : {Q, CoefficientRing::Zp(2)}) {
      const auto HA = reduced_homology(A, R), HB = reduced_homology(B, R), HJ = reduced_homology(J, R);
      for (int n = -1; n <= J.dimension(); ++n) {
        long long expect = 0;
        for (int p = -1; p <= n; ++p) expect += HA.betti(p) * HB.betti(n - 1 - p);
        CHECK(HJ.betti(n) == expect);
      }
    }
  }
}

TEST_CASE("neighborly complexes have highly connected full subcomplexes") {
  std::mt19937_64 rng(233);
  for (int trial = 0; trial < 40; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 3 + trial % 4, false);
    const int k = max_neighborliness(K);
    const auto all = full_subcomplex_homologies(K, Z);
    for (std::size_t mask = 1; mask < all.size(); ++mask) CHECK(is_i_acyclic(all[mask], k - 1));
  }
}

TEST_CASE("hodim and d(K)") {
  CHECK(hodim(corpus::rp2()) == 2);
  CHECK(dK(corpus::rp2()) == 2);
  CHECK_FALSE(hodim(simplex(4)).has_value());
  CHECK_FALSE(dK(simplex(4)).has_value());
  CHECK(hodim(boundary_of_simplex(4)) == 2);
  CHECK(hodim(cplx(2, {})) == -1);
  CHECK(dK(corpus::cycle(4)) == 1);
  CHECK(dK(corpus::berglund()) == 4);
  CHECK_FALSE(hodim(corpus::berglund()).has_value());
}

TEST_CASE("integral homology bases") {
  const auto C = simplicial_chain_complex(corpus::rp2());
  const auto B1 = homology_basis(BigIntegers{}, C, 1);
  REQUIRE(B1.size() == 1);
  CHECK(B1.orders[0] == 2);
  const auto B2 = homology_basis(BigIntegers{}, C, 2);
  CHECK(B2.size() == 0);
  const auto Bt = homology_basis(BigIntegers{}, simplicial_chain_complex(corpus::cycle(4)), 1);
  REQUIRE(Bt.size() == 1);
  CHECK(Bt.orders[0] == 0);
  // the generator is ± the fundamental cycle
  for (const auto& x : Bt.generators[0]) CHECK(abs(x) == 1);

  // Generators are cycles and count matches the profile.
  std::mt19937_64 rng(239);
  for (int trial = 0; trial < 40; ++trial) {
    const auto K = fwf::testing::random_complex(rng, 2 + trial % 5);
    const auto CC = simplicial_chain_complex(K);
    const auto H = homology(CC, Z);
    for (int q = -1; q <= K.dimension(); ++q) {
      const auto B = homology_basis(BigIntegers{}, CC, q);
      CHECK(static_cast<long long>(B.size()) == H.betti(q) + static_cast<long long>(H.at(q).torsion.size()));
      const auto d = CC.boundary(q);
      for (const auto& g : B.generators) {
        std::vector<BigInt> img(static_cast<std::size_t>(d.rows), 0);
        for (int j = 0; j < d.cols; ++j)
          for (auto [i, v] : d.columns[static_cast<std::size_t>(j)]) img[static_cast<std::size_t>(i)] += v * g[static_cast<std::size_t>(j)];
        for (const auto& x : img) CHECK(x == 0);
        // A generator has coordinates e_t in its own basis.
      }
      for (std::size_t t = 0; t < B.size(); ++t) {
        const auto c = B.coordinates(B.generators[t]);
        for (std::size_t s = 0; s < c.size(); ++s) CHECK(c[s] == (s == t ? 1 : 0));
      }
    }
  }
}

TEST_CASE("induced maps on homology") {
  const auto c4 = corpus::cycle(4);
  const std::vector<int> id{1, 2, 3, 4};
  for (auto R : {Z, Q, CoefficientRing::Zp(2)}) {
    const auto f = induced_map_on_homology(c4, c4, id, R, 1);
    REQUIRE(f.matrix.rows() == 1);
    CHECK(f.matrix(0, 0) == 1);
    CHECK(is_zero_on_homology(c4, c4, id, R, 0));
    CHECK_FALSE(is_zero_on_homology(c4, c4, id, R, 1));
  }
  // Two points {1,3} into the connected 4-cycle: zero on H̃_0.
  const auto pts = full_subcomplex(c4, vs({1, 3}));
  const auto g = induced_map_on_homology(pts, c4, {1, 3}, Q, 0);
  CHECK(g.matrix.cols() == 1);
  CHECK(g.is_zero());
  CHECK(is_zero_on_homology(pts, c4, {1, 3}, Q, 0));
  CHECK(is_zero_on_homology(pts, c4, {1, 3}, Z, 0));

  // 4-cycle into the join of two pairs of points, relabelled; identity on H̃_1.
  const auto two = cplx(2, {{1}, {2}});
  const auto sq = join(two, two);  // vertices 1,2 | 3,4
  const std::vector<int> to_join{1, 3, 2, 4};  // 1→1, 2→3, 3→2, 4→4
  const auto h = induced_map_on_homology(c4, sq, to_join, Z, 1);
  REQUIRE(h.matrix.rows() == 1);
  CHECK(abs(h.matrix(0, 0)) == 1);
  CHECK_FALSE(is_zero_on_homology(c4, sq, to_join, Z, 1));
  // Order-reversing relabelling flips the sign of the fundamental class.
  const std::vector<int> reversed{4, 3, 2, 1};
  const auto r = induced_map_on_homology(c4, c4, reversed, Z, 1);
  CHECK(r.matrix(0, 0) == -1);
  CHECK_THROWS(induced_map_on_homology(c4, c4, {1, 3, 2, 4}, Z, 1));

  // A map killing only torsion mod 2: RP^2 → cone over RP^2.
  const auto rp2 = corpus::rp2();
  const auto cone_rp2 = cone(rp2);
  const std::vector<int> shift{2, 3, 4, 5, 6, 7};
  CHECK(is_zero_on_homology(rp2, cone_rp2, shift, Z, 1));
  CHECK_FALSE(is_zero_on_homology(rp2, rp2, {1, 2, 3, 4, 5, 6}, Z, 1));
  CHECK_FALSE(is_zero_on_homology(rp2, rp2, {1, 2, 3, 4, 5, 6}, CoefficientRing::Zp(2), 2));
  CHECK(is_zero_on_homology(rp2, rp2, {1, 2, 3, 4, 5, 6}, Q, 1));
}

TEST_CASE("chain complexes square to zero") {
  const long before = boundary_square_checks().load();
  std::mt19937_64 rng(241);
  for (int trial = 0; trial < 30; ++trial) simplicial_chain_complex(fwf::testing::random_complex(rng, 6));
  CHECK(boundary_square_checks().load() >= before + 30);
  CHECK(boundary_square_failures().load() == 0);
  // A deliberately broken differential is caught.
  ChainComplex bad;
  bad.min_degree = 0;
  bad.dims = {1, 1, 1};
  bad.maps = {SparseIntMatrix(0, 1), SparseIntMatrix(1, 1), SparseIntMatrix(1, 1)};
  bad.maps[1].columns[0] = {{0, 1}};
  bad.maps[2].columns[0] = {{0, 1}};
  CHECK_THROWS_AS(verify_boundary_squared(bad, "broken"), ChainComplexError);
  boundary_square_failures() = 0;
}

#include <doctest.h>

#include "torichodge/hodge.hpp"
#include "torichodge/mirror.hpp"
#include "unit/fixtures.hpp"

using namespace th;

namespace {

LatticePolytope simplex_dual(std::vector<long long> last) {
  const int d = static_cast<int>(last.size());
  std::vector<ZVec> pts;
  for (int k = 0; k < d; ++k) {
    ZVec e(d, 0);
    e[k] = 1;
    pts.push_back(e);
  }
  for (auto& x : last) x = -x;
  pts.push_back(last);
  return LatticePolytope::from_points(d, pts);
}

// Resolved P(1,1,2,2) and its mirror: one edge of length 3 with one interior ray.
const MirrorPair& k3_pair() {
  static const MirrorPair pair = [] {
    MirrorOptions opt;
    opt.rational_edges = true;
    return build_mirror_pair(polar_dual(simplex_dual({1, 2, 2})), 3, opt);
  }();
  return pair;
}

int edge_ray(const SemiampleContraction& c) {
  for (int k = 0; k < static_cast<int>(c.fan().nrays()); ++k)
    if (c.cone_dim(c.ray_face(k)) == c.kappa() - 1) return k;
  return -1;
}

bool in_pattern(const std::vector<int>& ks) {
  for (int a : ks)
    for (int b : ks)
      if (std::abs(a - b) > 1) return true;
  return std::all_of(ks.begin(), ks.end(), [&](int k) { return k == ks[0]; }) && ks.size() % 2 == 1;
}

}  // namespace

TEST_CASE("Batyrev numbers by lattice-point counting") {
  auto quintic = batyrev_hodge(simplex_dual({1, 1, 1, 1}));
  CHECK(quintic.h11 == 1);
  CHECK(quintic.h_d2_1 == 101);
  auto mirror = batyrev_hodge(polar_dual(simplex_dual({1, 1, 1, 1})));
  CHECK(mirror.h11 == 101);
  CHECK(mirror.h_d2_1 == 1);

  // K3 surfaces without edge corrections: the two numbers add up to 20.
  auto quartic = batyrev_hodge(simplex_dual({1, 1, 1}));
  CHECK(quartic.h11 + quartic.h_d2_1 == 20);
  auto octahedron = LatticePolytope::from_points(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  auto cube = batyrev_hodge(octahedron);
  CHECK(cube.h11 == 3);
  CHECK(cube.h11 + cube.h_d2_1 == 20);

  CHECK_THROWS_AS(batyrev_hodge(simplex_dual({1, 1, 2})), InvalidInput);
}

TEST_CASE("simplified points drop facet interiors") {
  auto nabla = simplex_dual({1, 1, 1, 4});
  CHECK(nabla.lattice_points().size() == 7);
  auto pts = simplified_points(nabla);
  CHECK(pts.size() == 6);
  CHECK(std::find(pts.begin(), pts.end(), ZVec{0, 0, 0, -1}) == pts.end());
  CHECK(std::find(pts.begin(), pts.end(), ZVec{0, 0, 0, 0}) != pts.end());
}

TEST_CASE("products in the A_n root system") {
  CHECK(alpha_product(2, {1, 1}) == 2);
  CHECK(alpha_product(2, {1, 2}) == -1);
  CHECK(alpha_product(3, {1, 3}) == 0);
  CHECK(alpha_product(2, {1}) == 0);
  CHECK(alpha_product(2, {1, 1, 1}) == 0);
  CHECK(alpha_product(2, {1, 1, 2}) == -1);
  CHECK(alpha_product(2, {1, 2, 2}) == 1);
  CHECK_THROWS_AS(alpha_product(2, {3}), InvalidInput);
}

TEST_CASE("rational edges split with roots 1..vol") {
  const auto& pair = k3_pair();
  Hypersurface X(pair.x, pair.f);
  const int ray = edge_ray(*pair.x);
  REQUIRE(ray >= 0);
  auto cc = component_classes(X, ray, RootMode::exact);
  REQUIRE(cc.edge.exact_roots.size() == 3);
  CHECK(cc.edge.exact_roots == std::vector<Rat>{1, 2, 3});
  CHECK(cc.exact.size() == 2);
}

TEST_CASE("monomial-divisor map on K3 pairs") {
  const auto& pair = k3_pair();
  auto m = monomial_divisor_map(pair);
  CHECK(m.toric_dim == 2);
  CHECK(m.polynomial_dim == 2);
  CHECK(m.relations_vanish);
  CHECK(m.isomorphism);

  auto octahedron = LatticePolytope::from_points(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  auto cube = build_mirror_pair(polar_dual(octahedron), 5);
  auto mc = monomial_divisor_map(cube);
  CHECK(mc.toric_dim == 3);
  CHECK(mc.isomorphism);

  MirrorOptions full;
  full.simplified = false;
  CHECK_THROWS_AS(monomial_divisor_map(build_mirror_pair(polar_dual(octahedron), 5, full)), InvalidInput);
}

TEST_CASE("generalized monomial-divisor map counts match") {
  const auto& pair = k3_pair();
  for (auto mode : {RootMode::exact, RootMode::numeric}) {
    auto g = generalized_mdmm(pair, mode);
    REQUIRE(g.blocks.size() == 1);
    const auto& b = g.blocks[0];
    CHECK(b.volume == 3);
    CHECK(b.interior_rays.size() == 1);
    CHECK(b.classes == std::vector<std::size_t>{2});
    CHECK(b.n_dual == 2);
    CHECK(b.dual_slice_dim == 1);
    CHECK(b.A_rank == 1);
    CHECK(g.holds);
  }
}

TEST_CASE("chiral products vanish on the root pattern") {
  const auto& pair = k3_pair();
  Hypersurface Xd(pair.x_dual, pair.f_dual);
  auto b = generalized_mdmm(pair).blocks.at(0);
  const int face = b.dual_face;
  REQUIRE(ordered_cone_rays(*pair.x_dual, face).size() == 4);
  const CoxPolynomial& A = b.A[0];
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 2; ++k2) {
      auto v = chiral_product(Xd, {{true, face, k1, 1, A}, {true, face, k2, 1, A}});
      CHECK(v.alpha == alpha_product(2, {k1, k2}));
      CHECK(v.is_zero() == in_pattern({k1, k2}));
    }
  // One sigma factor in the top degree.
  CoxPolynomial B = CoxPolynomial::monomial(pair.f_dual.terms().begin()->first);
  for (int k = 1; k <= 2; ++k) {
    auto v = chiral_product(Xd, {{true, face, k, 1, A}, {false, -1, 0, 1, B}});
    CHECK(v.is_zero());
  }
  // Below the top degree a single sigma factor survives.
  auto v = chiral_product(Xd, {{true, face, 1, 1, A}});
  CHECK(v.kind == ChiralValue::Kind::sigma);

  std::vector<ChiralElement> four(4, ChiralElement{true, face, 1, 1, A});
  for (auto& e : four) e.q = 0;
  CHECK_THROWS_AS(chiral_product(Xd, four), UnsupportedProduct);

  int other = -1;
  for (int f = 0; f < pair.x_dual->nfaces(); ++f)
    if (f != face && pair.x_dual->cone_dim(f) == 2) other = f;
  REQUIRE(other >= 0);
  CHECK(chiral_product(Xd, {{true, face, 1, 1, A}, {true, other, 1, 1, A}}).is_zero());
}

TEST_CASE("chiral products need the anticanonical degree") {
  auto c = fixtures::projective(2, 2);
  Hypersurface X(c, fixtures::fermat(3, 2));
  CHECK_THROWS_AS(chiral_product(X, {}), InvalidInput);
}

TEST_CASE("quantum-side products carry 1/(n+1)") {
  const auto& pair = k3_pair();
  Hypersurface X(pair.x, pair.f);
  ToricCohomology H(pair.x->fan());
  CohomologyRing R(X, H);
  const int ray = edge_ray(*pair.x);
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 2; ++k2) {
      auto q = quantum_side_product(R, {}, {{ray, k1}, {ray, k2}});
      CHECK(q.alpha == alpha_product(2, {k1, k2}));
      CHECK(q.closed_integral != 0);
      // The cup product sees alpha_{k1} . alpha_{k2} / (n + 1).
      CHECK(q.cup_integral * 3 == q.closed_integral);
    }
  for (int j = 0; j < static_cast<int>(X.n()); ++j) {
    ZVec u(X.n(), 0);
    u[j] = 1;
    for (int k = 1; k <= 2; ++k) {
      auto q = quantum_side_product(R, {H.divisor(u)}, {{ray, k}});
      CHECK(q.cup.is_zero());
      CHECK(q.closed_integral == 0);
    }
  }
  CHECK_THROWS_AS(quantum_side_product(R, {}, {{ray, 1}}), InvalidInput);
  CHECK_THROWS_AS(quantum_side_product(R, {}, {{ray, 1}, {ray, 3}}), InvalidInput);
}

TEST_CASE("mirror K3 pipeline agrees with Batyrev") {
  const auto& pair = k3_pair();
  Hypersurface X(pair.x, pair.f);
  ToricCohomology H(pair.x->fan());
  auto D = hodge_diamond(X, H);
  CHECK(D.h(1, 1) == 20);
  auto b = batyrev_hodge(pair.nabla);
  CHECK(b.h11 == 4);
  CHECK(picard_group(X).formula == b.h11);
}

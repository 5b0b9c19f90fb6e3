#include "doctest.h"
#include "torichodge/hodge.hpp"
#include "torichodge/picard.hpp"
#include "unit/fixtures.hpp"

using namespace th;
using namespace th::fixtures;

namespace {

// P(1,1,2,2) with the curve of A_1 points blown up: ray 4 = (v0 + v1) / 2.
Fan resolved_p1122() {
  return Fan(3, {{-1, -2, -2}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}},
             {{0, 4, 2}, {4, 1, 2}, {0, 4, 3}, {4, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Replaces the edge terms (no killed variable) of f by the given coefficients of x2^{3-j} x3^j.
CoxPolynomial with_edge(const CoxPolynomial& f, const std::vector<int>& killed, const std::vector<long>& coef) {
  CoxPolynomial g = f - f.truncate(killed);
  for (int j = 0; j <= 3; ++j) g.add_term({0, 0, 3 - j, j, 0}, coef[j]);
  return g;
}

}  // namespace

TEST_CASE("Picard group of the quintic") {
  auto c = projective(4, 5);
  Hypersurface X(c, fermat(5, 5));
  auto P = picard_group(X);
  CHECK(P.identified_with_h2);
  CHECK(P.rank() == 1);
  CHECK(P.formula == 1);
  CHECK(P.residue.empty());
}

TEST_CASE("K3 in resolved P(1,1,2,2): three components over the blown-up curve") {
  Fan f = resolved_p1122();
  REQUIRE(f.complete());
  auto c = std::make_shared<SemiampleContraction>(f, ZVec{1, 1, 1, 1, 1});
  REQUIRE(c->kappa() == 3);
  const int face = c->ray_face(4);
  REQUIRE(c->cone_dim(face) == 2);
  const auto killed = Hypersurface(c, generic_polynomial(c, 1)).killed(face);
  // (x2 - x3)(x2 - 2 x3)(x2 - 3 x3) on the edge.
  auto fpoly = with_edge(generic_polynomial(c, 4), killed, {1, -6, 11, -6});
  Hypersurface X(c, fpoly);
  REQUIRE(X.certificate());

  auto P = picard_group(X);
  CHECK(!P.identified_with_h2);
  CHECK(P.toric_rank == 2);
  REQUIRE(P.residue.size() == 1);
  CHECK(P.residue[0].ray == 4);
  CHECK(P.residue[0].components == 3);
  CHECK(P.residue[0].slice_dim == 2);
  CHECK(P.formula == 4);
  CHECK(P.rank() == 4);

  auto cc = component_classes(X, 4, RootMode::exact);
  REQUIRE(cc.edge.exact_roots.size() == 3);
  REQUIRE(cc.exact.size() == 2);
  const auto& slice = X.r1(face, X.degree(1, face));
  RatMatrix M(2, slice.dim());
  for (int l = 0; l < 2; ++l) {
    auto co = slice.coords(cc.exact[l]);
    for (std::size_t b = 0; b < co.size(); ++b) M(l, b) = co[b];
  }
  CHECK(rank(M) == 2);

  // Numeric mode agrees with exact mode.
  auto nc = component_classes(X, 4, RootMode::numeric);
  REQUIRE(nc.numeric.size() == 2);
  for (int l = 0; l < 2; ++l)
    for (std::size_t b = 0; b < slice.dim(); ++b) CHECK(std::abs(nc.numeric[l][b] - cc.numeric[l][b]) < 1e-8);

  // An irreducible edge cubic is rejected in exact mode but fine numerically.
  Hypersurface Y(c, with_edge(fpoly, killed, {1, 0, 0, -2}));
  REQUIRE(Y.certificate());
  CHECK_THROWS_AS(component_classes(Y, 4, RootMode::exact), InvalidInput);
  CHECK(component_classes(Y, 4, RootMode::numeric).numeric.size() == 2);

  ToricCohomology H(f);
  auto D = hodge_diamond(X, H);
  CHECK(D.h(1, 1) == 20);
}

TEST_CASE("component classes on short edges and vertex faces") {
  // One fiber of P^1 x P^1: Gamma is a unit segment, so X cap D_k is connected.
  auto c = std::make_shared<SemiampleContraction>(p1xp1(), ZVec{1, 0, 0, 0});
  Hypersurface X(c, generic_polynomial(c, 2));
  auto cc = component_classes(X, 2, RootMode::exact);
  CHECK(cc.exact.empty());
  CHECK(cc.edge.exact_roots.size() == 1);
  // F_2 anticanonical: e_4 maps into a 2-cone of Sigma_X, a vertex face of Delta.
  Fan f(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto a = std::make_shared<SemiampleContraction>(f, ZVec{1, 1, 1, 1});
  Hypersurface Y(a, generic_polynomial(a, 7));
  CHECK_THROWS_AS(component_classes(Y, 3, RootMode::numeric), InvalidInput);
}

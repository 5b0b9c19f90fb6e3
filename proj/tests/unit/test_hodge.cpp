#include "doctest.h"
#include "torichodge/hodge.hpp"

using namespace th;

namespace {

std::shared_ptr<const SemiampleContraction> projective(int d, long long deg) {
  std::vector<ZVec> rays;
  for (int k = 0; k < d; ++k) {
    ZVec e(d, 0);
    e[k] = 1;
    rays.push_back(e);
  }
  rays.push_back(ZVec(d, -1));
  std::vector<Cone> cones;
  for (int skip = 0; skip <= d; ++skip) {
    Cone c;
    for (int k = 0; k <= d; ++k)
      if (k != skip) c.push_back(k);
    cones.push_back(c);
  }
  ZVec a(d + 1, 0);
  a[0] = deg;
  return std::make_shared<SemiampleContraction>(Fan(d, rays, cones), a);
}

// Monomials of degree 4 in 4 variables with every exponent at most 2.
std::size_t k3_oracle() {
  std::size_t n = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        int e = 4 - a - b - c;
        if (e >= 0 && e <= 2) ++n;
      }
  return n;
}

}  // namespace

TEST_CASE("Fermat quartic K3") {
  auto c = projective(3, 4);
  Hypersurface X(c, vertex_polynomial(*c));
  ToricCohomology H(c->fan());
  auto D = hodge_diamond(X, H);
  CHECK(D.h(1, 1) == 20);
  CHECK(D.cells[1][1].toric == 1);
  REQUIRE(D.cells[1][1].residue.size() == 1);
  CHECK(D.cells[1][1].residue[0].face == c->zero_cone());
  CHECK(D.cells[1][1].residue[0].r_dim == k3_oracle());
  CHECK(D.h(2, 0) == 1);
  CHECK(D.h(0, 2) == 1);
  CHECK(D.h(1, 0) == 0);
  CHECK(D.poincare_symmetric());
  CHECK(D.hodge_symmetric());
  CHECK(D.structure_sheaf_vanishing(3));
}

TEST_CASE("plane cubic and generic quartic agree across job counts") {
  auto c = projective(2, 3);
  Hypersurface X(c, generic_polynomial(c, 2));
  ToricCohomology H(c->fan());
  auto D = hodge_diamond(X, H);
  CHECK(D.h(0, 0) == 1);
  CHECK(D.h(1, 0) == 1);
  CHECK(D.h(1, 1) == 1);
  auto c3 = projective(3, 4);
  Hypersurface Y(c3, generic_polynomial(c3, 1));
  ToricCohomology H3(c3->fan());
  auto A = hodge_diamond(Y, H3, {1});
  auto B = hodge_diamond(Y, H3, {3});
  CHECK(A.table() == B.table());
  CHECK(A.h(1, 1) == 20);
}

TEST_CASE("elliptic curve in F_2") {
  Fan f(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto c = std::make_shared<SemiampleContraction>(f, ZVec{1, 1, 1, 1});
  Hypersurface X(c, generic_polynomial(c, 7));
  ToricCohomology H(f);
  auto D = hodge_diamond(X, H);
  CHECK(D.h(1, 0) == 1);
  CHECK(D.h(0, 1) == 1);
  CHECK(D.h(0, 0) == 1);
  CHECK(D.h(1, 1) == 1);
  CHECK(D.nonvanishing_vertex_faces.empty());
}

TEST_CASE("curve of bidegree (2,2) on P^1 x P^1 and a fiber-type divisor") {
  Fan f(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
  auto c = std::make_shared<SemiampleContraction>(f, ZVec{2, 0, 2, 0});
  Hypersurface X(c, generic_polynomial(c, 3));
  ToricCohomology H(f);
  auto D = hodge_diamond(X, H);
  CHECK(D.h(1, 0) == 1);
  // Two fibers of P^1 x P^1 -> P^1: a disconnected curve with h^{0,0} = 2.
  auto g = std::make_shared<SemiampleContraction>(f, ZVec{2, 0, 0, 0});
  Hypersurface Y(g, generic_polynomial(g, 3));
  auto E = hodge_diamond(Y, H);
  CHECK(E.h(0, 0) == 2);
  CHECK(E.h(1, 1) == 2);
  CHECK(E.h(1, 0) == 0);
  CHECK(E.poincare_symmetric());
}

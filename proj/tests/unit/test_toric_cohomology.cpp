#include "doctest.h"
#include "torichodge/toric_cohomology.hpp"

using namespace th;

namespace {

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }
Fan f2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Fan p112() { return Fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}); }
Fan p3() {
  return Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}
Fan p1xp1xp1() {
  std::vector<ZVec> rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<Cone> cones;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) cones.push_back({a, b, c});
  return Fan(3, rays, cones);
}

}  // namespace

TEST_CASE("toric cohomology slice dimensions") {
  ToricCohomology P2(p2());
  CHECK(P2.slice(1).dim() == 1);
  CHECK(P2.slice(2).dim() == 1);
  ToricCohomology F2(f2());
  CHECK(F2.slice(1).dim() == 2);
  CHECK(F2.slice(2).dim() == 1);
  for (const Fan& f : {p2(), f2(), p112(), p3(), p1xp1xp1()}) {
    ToricCohomology H(f);
    CHECK(H.total_dim() == f.max_cones().size());
    for (int k = 0; k <= f.dim(); ++k) CHECK(H.slice(k).dim() == H.slice(f.dim() - k).dim());
  }
}

TEST_CASE("integration is calibrated on every maximal cone") {
  ToricCohomology P2(p2());
  CHECK(P2.integrate(CoxPolynomial::monomial({1, 1, 0})) == 1);
  CHECK(P2.integrate(CoxPolynomial::monomial({2, 0, 0})) == 1);
  ToricCohomology F2(f2());
  CHECK(F2.integrate(CoxPolynomial::monomial({0, 0, 1, 1})) == 1);
  CHECK(F2.integrate(CoxPolynomial::monomial({0, 0, 0, 2})) == -2);
  for (const Fan& f : {f2(), p112(), p1xp1xp1()}) {
    ToricCohomology H(f);
    for (const Cone& s : f.max_cones()) CHECK(H.integrate(H.cone_class(s)) == Rat(1) / Rat(cone_multiplicity(f, s)));
  }
  ToricCohomology W(p112());
  CHECK(W.integrate(CoxPolynomial::monomial({0, 0, 2})) == Rat(1, 2));
  CHECK(W.integrate(CoxPolynomial::monomial({0, 2, 0})) == Rat(2));
}

TEST_CASE("A_1(X) slices") {
  ToricCohomology F2(f2());
  CHECK(a1_slice(F2, {1, 1, 1, 1}, 0).dim() == 1);
  auto A = a1_slice(F2, {1, 1, 1, 1}, 1);
  CHECK(A.dim() == 1);
  // D_4 [X] = 0: the fiber class vanishes on the curve.
  auto c = A.coords(CoxPolynomial::monomial({0, 0, 0, 1}));
  REQUIRE(c);
  CHECK(std::all_of(c->begin(), c->end(), [](const Rat& x) { return x == 0; }));
  ToricCohomology P3(p3());
  CHECK(a1_slice(P3, {4, 0, 0, 0}, 1).dim() == 1);
  CHECK(a1_slice(P3, {4, 0, 0, 0}, 2).dim() == 1);
  CHECK(a1_slice(P3, {4, 0, 0, 0}, 3).dim() == 0);
}

TEST_CASE("A_1^sigma slices on F_2") {
  Fan f = f2();
  SemiampleContraction c(f, {1, 1, 1, 1});
  ToricCohomology H(f);
  int face = -1;
  for (int g = 0; g < c.nfaces(); ++g)
    if (c.cone_dim(g) == 2 && c.ray_in(3, g)) face = g;
  REQUIRE(face >= 0);
  // D_4 has bidegree (1,1); it pairs with itself to -2.
  CHECK(a1_sigma_slice(H, c, face, 0).dim() == 0);
  CHECK(a1_sigma_slice(H, c, face, 1).dim() == 1);
  CHECK(a1_sigma_slice(H, c, face, 2).dim() == 0);
  auto span = u_sigma_span(H, c, face, 1);
  CHECK(span.size() == 1);
  CHECK(a1_sigma_slice(H, c, c.zero_cone(), 0).dim() == 1);
  CHECK(a1_sigma_slice(H, c, c.zero_cone(), 1).dim() == 0);
}

TEST_CASE("intersection numbers follow the contraction") {
  Fan f = f2();
  SemiampleContraction c(f, {1, 1, 1, 1});
  ToricCohomology H(f);
  CHECK(intersection_number(H, {1, 1, 1, 1}, 1, {3}) == 0);
  CHECK(intersection_number(H, {1, 1, 1, 1}, 1, {0}) > 0);
  CHECK(intersection_number(H, {1, 1, 1, 1}, 2, {}) == 8);
  for (int k = 0; k <= 2; ++k)
    for (int idx : f.cones_of_dim(2 - k)) {
      const Cone& tau = f.cones()[idx];
      Rat v = intersection_number(H, {1, 1, 1, 1}, k, tau);
      CHECK(v >= 0);
      CHECK((v > 0) == intersection_expected_positive(c, k, tau));
    }
  // Fiber class of F_2 -> P^1.
  SemiampleContraction fib(f, {1, 0, 0, 0});
  for (int k = 0; k <= 2; ++k)
    for (int idx : f.cones_of_dim(2 - k)) {
      const Cone& tau = f.cones()[idx];
      Rat v = intersection_number(H, {1, 0, 0, 0}, k, tau);
      CHECK((v > 0) == intersection_expected_positive(fib, k, tau));
    }
}

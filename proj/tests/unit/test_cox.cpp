#include "doctest.h"
#include "torichodge/cox.hpp"

using namespace th;

namespace {

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

std::shared_ptr<const SemiampleContraction> p2_cubic() {
  return std::make_shared<SemiampleContraction>(p2(), ZVec{1, 1, 1});
}

}  // namespace

TEST_CASE("Chow group with torsion") {
  Fan f(2, {{2, -1}, {-1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
  ChowGroup A(f);
  CHECK(A.free_rank() == 1);
  CHECK(A.torsion() == std::vector<Int>{3});
  CHECK_FALSE(A.equal({1, 0, 0}, {0, 1, 0}));
  CHECK(A.equal({1, 0, 0}, {0, 0, 0}) == false);
  // D_1 - 2 D_0 + D_2 ... principal divisor of m = (1, 0): 2 D_0 - D_1 - D_2.
  CHECK(A.equal({2, -1, -1}, {0, 0, 0}));
}

TEST_CASE("polynomial arithmetic") {
  auto x = CoxPolynomial::monomial({1, 0});
  auto y = CoxPolynomial::monomial({0, 1});
  auto p = (x + y) * (x - y);
  CHECK(p.size() == 2);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({0, 2}) == -1);
  CHECK(p.euler_derivative(0).coefficient({2, 0}) == 2);
  CHECK(p.derivative(1).coefficient({0, 1}) == -2);
  CHECK(p.truncate({1}).size() == 1);
  CHECK((p - p).is_zero());
}

TEST_CASE("monomials of projective plane degrees") {
  CoxRing R(p2());
  CHECK(R.monomials({1, 0, 0}).size() == 3);
  CHECK(R.monomials({3, 0, 0}).size() == 10);
  CHECK(R.monomials({1, 1, 1}, {0}).size() == 4);
  CHECK(R.monomials({-1, 0, 0}).empty());
  auto m = R.monomials({2, 0, 0});
  CHECK(std::is_sorted(m.begin(), m.end(), std::greater<>()));
}

TEST_CASE("Jacobian ring of the Fermat cubic") {
  auto c = p2_cubic();
  auto f = vertex_polynomial(*c);
  CHECK(f.size() == 3);
  Hypersurface X(c, f);
  const std::vector<std::size_t> expected = {1, 3, 6, 7, 6, 3, 1, 0};
  for (int k = 0; k < 8; ++k) {
    auto s = ideal_slice(X.ring(), X.jacobian(), ZVec{k, 0, 0});
    CHECK(s.dim() == expected[k]);
  }
  CHECK(X.certificate());
  int top = c->zero_cone();
  CHECK(X.r0(top, X.degree(3, top)).dim() == 1);
  // (J : x0 x1 x2) in degree 3 - 3 + 0: only constants survive.
  auto r1 = X.r1(top, X.degree(1, top, 1, 0));
  CHECK(r1.dim() == 1);
}

TEST_CASE("degenerate cubic fails the certificate") {
  auto c = p2_cubic();
  CoxPolynomial f(3);
  f.add_term({3, 0, 0}, 1);
  f.add_term({0, 3, 0}, 1);
  CHECK_FALSE(nondegeneracy_certificate(c, f));
}

TEST_CASE("generic polynomial is seeded and certified") {
  auto c = p2_cubic();
  auto f = generic_polynomial(c, 11);
  auto g = generic_polynomial(c, 11);
  CHECK(f == g);
  CHECK(f.size() == 10);
  CHECK(nondegeneracy_certificate(c, f));
}

TEST_CASE("wrong degree is rejected") {
  auto c = p2_cubic();
  CoxPolynomial f(3);
  f.add_term({2, 0, 0}, 1);
  CHECK_THROWS_AS(Hypersurface(c, f), InvalidInput);
}

TEST_CASE("modular dimensions agree with exact slices") {
  auto c = p2_cubic();
  auto f = generic_polynomial(c, 4);
  Hypersurface X(c, f);
  for (int face = 0; face < c->nfaces(); ++face)
    for (int q = 0; q <= 3; ++q) {
      auto deg = X.degree(q, face);
      CHECK(X.r0_dim(face, deg) == ideal_slice(X.ring(), X.jacobian(), deg, X.killed(face)).dim());
      CHECK(X.r1_dim(face, deg) == X.r1(face, deg).dim());
    }
}

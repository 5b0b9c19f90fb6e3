#include "doctest.h"
#include "torichodge/residue.hpp"

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

CoxPolynomial fermat(int nvars, int deg) {
  CoxPolynomial f(nvars);
  for (int k = 0; k < nvars; ++k) {
    Exponent e(nvars, 0);
    e[k] = deg;
    f.add_term(e, 1);
  }
  return f;
}

}  // namespace

TEST_CASE("c_I on the projective line") {
  Fan p1(1, {{1}, {-1}}, {{0}, {1}});
  CHECK(c_I_beta(p1, ZVec{1, 1}, {0, 1}) == -2);
  CHECK(c_I_beta(p1, ZVec{1, 1}, {1, 0}) == 2);
  CHECK_THROWS_AS(c_I_beta(p1, ZVec{1, 1}, {0}), std::invalid_argument);
}

TEST_CASE("c_p signs and twists") {
  CHECK(c_p_sigma(0, 1) == ResidueScalar(-1, 0));
  CHECK(c_p_sigma(0, 2) == ResidueScalar(-1, 1));
  CHECK(c_p_sigma(1, 2) == ResidueScalar(1, 1));
  // Graded commutativity: c_r / c_{i-1-r} = (-1)^{i-1} up to the factorials.
  for (int i = 1; i <= 5; ++i)
    for (int r = 0; r < i; ++r) {
      Rat ratio = c_p_sigma(r, i).q / c_p_sigma(i - 1 - r, i).q;
      CHECK(ratio == ((i - 1) % 2 ? -1 : 1));
    }
  CHECK_THROWS(c_p_sigma(2, 2));
}

TEST_CASE("residue scalars fold the imaginary unit") {
  ResidueScalar a(2, 1, 1);
  ResidueScalar b = a * a;
  CHECK(b.q == -4);
  CHECK(b.twist == 2);
  CHECK(b.unit == 0);
  CHECK(ResidueScalar(0, 3, 1) == ResidueScalar());
}

TEST_CASE("toric Jacobian of the Fermat cubic") {
  auto c = projective(2, 3);
  Hypersurface X(c, fermat(3, 3));
  SigmaResidueContext ctx(X, c->zero_cone());
  CHECK(ctx.i_sigma() == 2);
  CHECK(abs(ctx.c_I()) == 3);
  // det(x_j d_j x_k d_k f) = 729 (xyz)^3; divide by c^2 = 9 and by xyz.
  CHECK(ctx.jacobian() == CoxPolynomial::monomial({2, 2, 2}, 81));
  CHECK(ctx.top_coefficient(ctx.jacobian()) == 1);
  CHECK(ctx.res(CoxPolynomial::monomial({1, 1, 1})) == Rat(1, 81));
  CHECK(ctx.res(CoxPolynomial::monomial({3, 0, 0})) == 0);
  CHECK(ctx.res(CoxPolynomial::monomial({2, 0, 0})) == 0);
}

TEST_CASE("toric Jacobian does not depend on the index set") {
  Fan f2(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto c = std::make_shared<SemiampleContraction>(f2, ZVec{1, 1, 1, 1});
  auto f = generic_polynomial(c, 5);
  Hypersurface X(c, f);
  SigmaResidueContext ref(X, c->zero_cone());
  auto sets = ref.admissible_index_sets(10);
  REQUIRE(sets.size() >= 2);
  for (const auto& I : sets) {
    SigmaResidueContext other(X, c->zero_cone(), I);
    CHECK(ref.top_coefficient(other.jacobian()) == 1);
  }
}

TEST_CASE("residue pairing on the quartic K3 is perfect") {
  auto c = projective(3, 4);
  Hypersurface X(c, fermat(4, 4));
  const int z = c->zero_cone();
  SigmaResidueContext ctx(X, z);
  const auto& R1 = X.r1(z, ctx.r1_degree(1));
  CHECK(R1.dim() == 19);
  RatMatrix P(R1.dim(), R1.dim());
  for (std::size_t a = 0; a < R1.dim(); ++a)
    for (std::size_t b = 0; b < R1.dim(); ++b) P(a, b) = ctx.res(R1.basis_element(a) * R1.basis_element(b));
  CHECK(rank(P) == 19);
}

TEST_CASE("mu inverse round trip") {
  auto c = projective(2, 3);
  auto f = generic_polynomial(c, 3);
  Hypersurface X(c, f);
  const int z = c->zero_cone();
  const auto& R0 = X.r0(z, X.degree(2, z, 0, 0));
  REQUIRE(R0.dim() == 1);
  auto h = R0.basis_element(0);
  auto g = mu_inverse(X, h);
  auto back = g.times_monomial({1, 1, 1}) - h;
  CHECK(R0.reduce(back).empty());
}

TEST_CASE("p_sigma does not depend on s") {
  auto c = projective(2, 3);
  auto f = generic_polynomial(c, 9);
  Hypersurface X(c, f);
  int edge = -1;
  for (int face = 0; face < c->nfaces(); ++face)
    if (c->i_sigma(face) == 1) {
      edge = face;
      break;
    }
  REQUIRE(edge >= 0);
  SigmaResidueContext ctx(X, edge);
  auto adm = ctx.admissible_s();
  REQUIRE(adm.size() >= 2);
  auto monos = X.ring().monomials(ctx.r1_degree(0), X.killed(edge));
  auto mons2 = X.ring().monomials(ctx.r1_degree(0), X.killed(edge));
  REQUIRE(!monos.empty());
  CoxPolynomial C = CoxPolynomial::monomial(monos.front()) * CoxPolynomial::monomial(mons2.back());
  auto p0 = ctx.p_sigma(C, adm[0]);
  auto p1 = ctx.p_sigma(C, adm[1]);
  const auto& R1 = X.r1(edge, ctx.r1_degree(0));
  CHECK(R1.coords(p0) == R1.coords(p1));
}

TEST_CASE("ray order across a cone with an interior ray") {
  Fan f2(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto c = std::make_shared<SemiampleContraction>(f2, ZVec{1, 1, 1, 1});
  int face = -1;
  for (int g = 0; g < c->nfaces(); ++g)
    if (c->cone_dim(g) == 2 && c->ray_in(3, g)) face = g;
  REQUIRE(face >= 0);
  auto order = ordered_cone_rays(*c, face);
  REQUIRE(order.size() == 3);
  CHECK(order[1] == 3);
  CHECK(std::min(order[0], order[2]) == 0);
  CHECK(std::max(order[0], order[2]) == 2);
}

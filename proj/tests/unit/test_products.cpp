#include <random>

#include "doctest.h"
#include "torichodge/products.hpp"
#include "unit/fixtures.hpp"

using namespace th;
using namespace th::fixtures;

namespace {

HodgeClass random_residue(const CohomologyRing& R, int face, int s, int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  const auto& U = R.a1_sigma(face, s);
  const auto& G = R.r1(face, r);
  HodgeClass x;
  for (std::size_t a = 0; a < U.dim(); ++a)
    for (std::size_t b = 0; b < G.dim(); ++b)
      x = x + R.residue_class(face, U.basis_element(a), s, G.basis_element(b), r) * Rat(dist(rng));
  return x;
}

// Cohomological degree of a homogeneous class: 2k for toric, 2s + i - 1 for residue parts.
int degree(const CohomologyRing& R, const HodgeClass& x) {
  if (!x.toric.empty()) return 2 * std::get<0>(x.toric.begin()->first);
  const auto& k = x.residue.begin()->first;
  return 2 * std::get<1>(k) + R.hypersurface().contraction().i_sigma(std::get<0>(k)) - 1;
}

}  // namespace

TEST_CASE("cup product pairing on the Fermat quartic") {
  auto c = projective(3, 4);
  Hypersurface X(c, fermat(4, 4));
  ToricCohomology H(c->fan());
  CohomologyRing R(X, H);
  const int z = c->zero_cone();
  const auto one = CoxPolynomial::constant(4, 1);
  const auto& G = R.r1(z, 1);
  REQUIRE(G.dim() == 19);
  CHECK(R.bidegree(z, 0, 1) == std::pair{1, 1});
  RatMatrix P(19, 19);
  for (std::size_t a = 0; a < 19; ++a)
    for (std::size_t b = 0; b < 19; ++b) {
      auto x = R.residue_class(z, one, 0, G.basis_element(a), 1);
      auto y = R.residue_class(z, one, 0, G.basis_element(b), 1);
      auto xy = R.multiply(x, y);
      CHECK(xy == R.multiply(y, x));
      auto v = R.integrate(xy);
      REQUIRE(v.size() <= 1);
      if (!v.empty()) {
        CHECK(v.begin()->first == std::pair{2, 0});
        P(a, b) = v.begin()->second;
      }
    }
  CHECK(rank(P) == 19);

  // (2,0) against (0,2) pairs nontrivially; (2,0) against itself vanishes.
  auto w = R.residue_class(z, one, 0, R.r1(z, 0).basis_element(0), 0);
  auto wb = R.residue_class(z, one, 0, R.r1(z, 2).basis_element(0), 2);
  CHECK(!R.multiply(w, wb).is_zero());
  CHECK(R.multiply(w, w).is_zero());
  // Toric classes kill residue classes here: s would leave 0..d-i.
  auto hyp = R.toric_class(H.divisor(ZVec{1, 0, 0, 0}), 1);
  CHECK(R.multiply(hyp, w).is_zero());
  CHECK(R.integrate(R.multiply(hyp, hyp)).at({0, 0}) == 4);
}

TEST_CASE("malformed residue bookkeeping is rejected") {
  auto c = projective(2, 3);
  Hypersurface X(c, fermat(3, 3));
  ToricCohomology H(c->fan());
  CohomologyRing R(X, H);
  const int z = c->zero_cone();
  const auto one = CoxPolynomial::constant(3, 1);
  const auto g = R.r1(z, 0).basis_element(0);
  CHECK_THROWS_AS(R.residue_class(z, one, 0, g, 2), InvalidInput);
  CHECK_THROWS_AS(R.residue_class(z, one, 1, g, 0), InvalidInput);
  CHECK_THROWS_AS(R.residue_class(z, one, 0, g, -1), InvalidInput);
}

TEST_CASE("two fibers: residue classes split H^0") {
  Fan f = p1xp1();
  auto c = std::make_shared<SemiampleContraction>(f, ZVec{2, 0, 0, 0});
  // (x0 - x1)(x0 - 2 x1): two rational fibers.
  CoxPolynomial p(4);
  p.add_term({2, 0, 0, 0}, 1);
  p.add_term({1, 1, 0, 0}, -3);
  p.add_term({0, 2, 0, 0}, 2);
  Hypersurface X(c, p);
  REQUIRE(X.certificate());
  ToricCohomology H(f);
  CohomologyRing R(X, H);
  const int z = c->zero_cone();
  REQUIRE(c->i_sigma(z) == 1);
  REQUIRE(R.a1_sigma(z, 0).dim() == 1);
  REQUIRE(R.r1(z, 0).dim() == 1);
  const auto one = CoxPolynomial::constant(4, 1);
  auto unit = R.toric_class(one, 0);
  auto e = R.residue_class(z, R.a1_sigma(z, 0).basis_element(0), 0, R.r1(z, 0).basis_element(0), 0);
  CHECK(R.multiply(unit, e) == e);
  // e^2 = alpha + beta e, with Q x Q requiring beta^2 + 4 alpha a nonzero rational square.
  auto e2 = R.multiply(e, e);
  Rat alpha = 0, beta = 0;
  for (const auto& [k, v] : e2.toric) {
    REQUIRE(k == HodgeClass::ToricKey{0, 0, 0});
    alpha = v.at(0);
  }
  for (const auto& [k, m] : e2.residue) {
    REQUIRE(std::get<0>(k) == z);
    beta = m(0, 0) / e.residue.begin()->second(0, 0);
  }
  Rat disc = beta * beta + 4 * alpha;
  REQUIRE(disc > 0);
  mpz_class num = disc.get_num(), den = disc.get_den();
  CHECK(mpz_perfect_square_p(num.get_mpz_t()));
  CHECK(mpz_perfect_square_p(den.get_mpz_t()));
  // Degree-one point classes: D_3 restricted to each fiber is a point, twice in total.
  auto pt = R.toric_class(H.divisor(ZVec{0, 0, 1, 0}), 1);
  CHECK(R.integrate(pt).at({0, 0}) == 2);
  auto ept = R.multiply(e, pt);
  std::mt19937 rng(5);
  auto x = random_residue(R, z, 0, 0, rng);
  CHECK(R.multiply(R.multiply(e, x), pt) == R.multiply(e, R.multiply(x, pt)));
  CHECK(R.multiply(ept, e) == R.multiply(e, ept));
}

TEST_CASE("associativity and graded commutativity on a plane cubic") {
  // Plane cubic: residue classes live on the zero cone (i = 2) and on edges (i = 1).
  auto c = projective(2, 3);
  Hypersurface X(c, fermat(3, 3));
  ToricCohomology H(c->fan());
  CohomologyRing R(X, H);
  std::mt19937 rng(11);
  std::vector<HodgeClass> pool;
  pool.push_back(R.toric_class(CoxPolynomial::constant(3, 1), 0));
  pool.push_back(R.toric_class(H.divisor(ZVec{1, 0, 0}), 1));
  const int z = c->zero_cone();
  for (int r = 0; r < 2; ++r) pool.push_back(random_residue(R, z, 0, r, rng));
  for (int face = 0; face < c->nfaces(); ++face) {
    if (c->i_sigma(face) != 1) continue;
    for (int s = 0; s <= 1; ++s)
      if (R.a1_sigma(face, s).dim() > 0 && R.r1(face, 0).dim() > 0)
        pool.push_back(random_residue(R, face, s, 0, rng));
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const int sign = (degree(R, a) * degree(R, b)) % 2 ? -1 : 1;
      CHECK(R.multiply(a, b) == R.multiply(b, a) * Rat(sign));
      for (const auto& d : pool) CHECK(R.multiply(R.multiply(a, b), d) == R.multiply(a, R.multiply(b, d)));
    }
  // Classes on distinct faces multiply to zero.
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (!a.residue.empty() && !b.residue.empty() &&
          std::get<0>(a.residue.begin()->first) != std::get<0>(b.residue.begin()->first))
        CHECK(R.multiply(a, b).is_zero());
}

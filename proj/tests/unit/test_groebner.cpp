#include "doctest.h"
#include "torichodge/groebner.hpp"

using namespace th;

namespace {

Fan p3() {
  return Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

}  // namespace

TEST_CASE("positive gradings") {
  CHECK(positive_grading(p3()) == std::vector<long long>{1, 1, 1, 1});
  Fan w(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(positive_grading(w) == std::vector<long long>{1, 2, 1});
  Fan f2(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto g = positive_grading(f2);
  CHECK(g[0] - g[2] == 0);
  CHECK(g[1] - 2 * g[2] - g[3] == 0);
  CHECK(std::all_of(g.begin(), g.end(), [](long long x) { return x > 0; }));
}

TEST_CASE("Groebner dimensions match Macaulay matrices") {
  auto c = std::make_shared<SemiampleContraction>(p3(), ZVec{4, 0, 0, 0});
  auto f = generic_polynomial(c, 6);
  Hypersurface X(c, f);
  const auto& R = X.ring();
  auto w = positive_grading(R.fan());
  ModularGroebner gb(X.jacobian(), w, 14);
  Exponent h = {1, 1, 1, 1};
  for (long long k = 0; k <= 12; ++k) {
    ZVec deg{k, 0, 0, 0};
    CHECK(gb.quotient_dim(R.monomials(deg)) == ideal_quotient_dim(R, X.jacobian(), deg));
    if (k <= 10)
      CHECK(gb.multiplication_rank(R.monomials(deg), h) ==
            colon_quotient_dim(R, X.jacobian(), CoxPolynomial::monomial(h), deg));
  }
  // Complete intersection of four quartics: top degree 12, dim 1.
  CHECK(gb.quotient_dim(R.monomials({12, 0, 0, 0})) == 1);
  CHECK(gb.quotient_dim(R.monomials({13, 0, 0, 0})) == 0);
  CHECK_THROWS(gb.quotient_dim(R.monomials({15, 0, 0, 0})));
}

TEST_CASE("Groebner basis with killed variables and weights") {
  Fan f2(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto c = std::make_shared<SemiampleContraction>(f2, ZVec{1, 1, 1, 1});
  Hypersurface X(c, generic_polynomial(c, 2));
  auto w = positive_grading(f2);
  for (int face = 0; face < c->nfaces(); ++face) {
    auto k = X.killed(face);
    std::vector<CoxPolynomial> gens;
    for (const auto& g : X.jacobian()) gens.push_back(g.truncate(k));
    for (int q = 0; q <= 3; ++q) {
      ZVec deg = X.degree(q, face);
      long long wd = 0;
      for (std::size_t j = 0; j < deg.size(); ++j) wd += w[j] * deg[j];
      if (wd < 0) continue;
      ModularGroebner gb(gens, w, wd + 8);
      CHECK(gb.quotient_dim(X.ring().monomials(deg, k)) == ideal_quotient_dim(X.ring(), X.jacobian(), deg, k));
    }
  }
}

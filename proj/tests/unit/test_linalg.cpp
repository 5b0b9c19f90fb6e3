#include <random>

#include "doctest.h"
#include "torichodge/echelon.hpp"
#include "torichodge/linalg.hpp"

using namespace th;

TEST_CASE("smith form of a small matrix") {
  IntMatrix A{{2, 4}, {6, 8}};
  SmithForm sf = smith_normal_form(A);
  CHECK(sf.S(0, 0) == 2);
  CHECK(sf.S(1, 1) == 4);
  CHECK(sf.S(0, 1) == 0);
  CHECK(sf.U * A * sf.V == sf.S);
  CHECK(abs(determinant(sf.U)) == 1);
  CHECK(abs(determinant(sf.V)) == 1);
}

TEST_CASE("smith form invariants on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = dist(rng);
    SmithForm sf = smith_normal_form(A);
    REQUIRE(sf.U * A * sf.V == sf.S);
    std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(sf.S(i, j) == 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (sf.S(i + 1, i + 1) == 0) continue;
      CHECK(sf.S(i, i) != 0);
      CHECK(sf.S(i + 1, i + 1) % sf.S(i, i) == 0);
    }
    CHECK(rank(to_rat(A)) == rank(to_rat(sf.S)));
  }
}

TEST_CASE("nullspace and solve") {
  RatMatrix A = to_rat(IntMatrix{{2, 4}});
  RankNullspace rn = rank_and_nullspace(A);
  CHECK(rn.rank == 1);
  REQUIRE(rn.basis.size() == 1);
  CHECK(rn.basis[0] == RatVec{Rat(-2), Rat(1)});

  auto x = solve_linear(to_rat(IntMatrix{{1, 1}}), RatVec{Rat(2)});
  REQUIRE(x);
  CHECK(*x == RatVec{Rat(2), Rat(0)});
  CHECK_FALSE(solve_linear(to_rat(IntMatrix{{1, 1}, {1, 1}}), RatVec{Rat(1), Rat(2)}));
}

TEST_CASE("integral kernel is saturated") {
  IntMatrix K = kernel_saturation(IntMatrix{{2, 4}});
  REQUIRE(K.rows() == 1);
  CHECK(((K(0, 0) == 2 && K(0, 1) == -1) || (K(0, 0) == -2 && K(0, 1) == 1)));
  IntMatrix S = saturate_rows(IntMatrix{{2, 2, 0}, {0, 2, 2}});
  CHECK(S.rows() == 2);
  CHECK(rank(to_rat(S)) == 2);
  // The saturation contains (1,1,0) and (0,1,1), so 2x2 minors have gcd 1.
  Int g = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) g = gcd(g, S(0, a) * S(1, b) - S(0, b) * S(1, a));
  CHECK(g == 1);
}

TEST_CASE("determinants agree over Z and Q") {
  IntMatrix A{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  CHECK(determinant(A) == -90);
  CHECK(determinant(to_rat(A)) == Rat(-90));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == Rat(3, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(to_string(Rat(3, 2)) == "3/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("echelon reduction and span coordinates") {
  Echelon e(3);
  CHECK(e.insert({{0, Rat(1)}, {1, Rat(1)}}));
  CHECK(e.insert({{1, Rat(1)}, {2, Rat(1)}}));
  CHECK_FALSE(e.insert({{0, Rat(1)}, {2, Rat(-1)}}));
  CHECK(e.rank() == 2);
  CHECK(e.non_pivots() == std::vector<std::size_t>{2});

  SpanBasis sb(3);
  CHECK(sb.insert({{0, Rat(1)}, {1, Rat(2)}}) == std::size_t(0));
  CHECK(sb.insert({{1, Rat(1)}}) == std::size_t(1));
  auto c = sb.coords({{0, Rat(2)}, {1, Rat(7)}});
  REQUIRE(c);
  CHECK(*c == RatVec{Rat(2), Rat(3)});
  CHECK_FALSE(sb.coords({{2, Rat(1)}}));
}

TEST_CASE("modular rank matches exact rank") {
  std::vector<SparseVec> rows = {{{0, Rat(1)}, {1, Rat(2)}}, {{0, Rat(2)}, {1, Rat(4)}}, {{2, Rat(1, 3)}}};
  bool bad = false;
  CHECK(modular_rank(rows, 3, 1000003, &bad) == 2);
  CHECK_FALSE(bad);
}

#include "doctest.h"
#include "torichodge/polytope.hpp"

using namespace th;

TEST_CASE("segment volume and interior points") {
  auto P = LatticePolytope::from_points(2, {{0, 0}, {3, 0}});
  CHECK(P.dim() == 1);
  CHECK(P.normalized_volume() == 3);
  CHECK(P.lattice_points().size() == 4);
  auto data = face_data(P);
  CHECK(data.back().interior_points.size() == 2);
}

TEST_CASE("P2 anticanonical triangle is reflexive") {
  auto P = LatticePolytope::from_inequalities(2, {{1, 0}, {0, 1}, {-1, -1}}, std::vector<long long>{1, 1, 1});
  CHECK(P.vertices().size() == 3);
  CHECK(P.lattice_points().size() == 10);
  CHECK(P.normalized_volume() == 9);
  CHECK(is_reflexive(P));
  auto Q = polar_dual(P);
  CHECK(Q.lattice_points().size() == 4);
  CHECK(Q.normalized_volume() == 3);
  // The face lattice is an order-reversing bijection.
  CHECK(dual_face_index(P, Q, static_cast<int>(P.faces().size()) - 1) == -1);
  for (int f = 0; f + 1 < static_cast<int>(P.faces().size()); ++f) {
    int g = dual_face_index(P, Q, f);
    CHECK(P.faces()[f].dim + Q.faces()[g].dim == 1);
  }
}

TEST_CASE("square of side four is not reflexive") {
  auto P = LatticePolytope::from_points(2, {{-2, -2}, {2, -2}, {-2, 2}, {2, 2}});
  CHECK_FALSE(is_reflexive(P));
  CHECK(P.normalized_volume() == 32);
}

TEST_CASE("face counts of the cube") {
  std::vector<ZVec> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) pts.push_back({a, b, c});
  auto P = LatticePolytope::from_points(3, pts);
  int count[4] = {0, 0, 0, 0};
  for (const auto& f : P.faces()) ++count[f.dim];
  CHECK(count[0] == 8);
  CHECK(count[1] == 12);
  CHECK(count[2] == 6);
  CHECK(count[3] == 1);
  CHECK(P.normalized_volume() == 48);
  CHECK(is_reflexive(P));
  auto tri = P.pulling_triangulation(static_cast<int>(P.faces().size()) - 1);
  Int total = 0;
  for (const auto& s : tri) {
    IntMatrix M(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M(i, j) = static_cast<long>(pts[0][j]);
    auto V = P.vertices_int();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M(i, j) = static_cast<long>(V[s[i + 1]][j] - V[s[0]][j]);
    total += abs(determinant(M));
  }
  CHECK(total == 48);
}

TEST_CASE("carrier faces") {
  auto P = LatticePolytope::from_points(2, {{0, 0}, {2, 0}, {0, 2}});
  int c = P.carrier_face(ZVec{1, 0});
  CHECK(P.faces()[c].dim == 1);
  CHECK(P.faces()[P.carrier_face(ZVec{0, 0})].dim == 0);
  // No interior lattice point for this triangle except on the boundary.
  CHECK_FALSE(P.interior_contains(ZVec{1, 1}));
}

TEST_CASE("unbounded input is rejected") {
  CHECK_THROWS(LatticePolytope::from_inequalities(2, {{1, 0}, {0, 1}}, std::vector<long long>{0, 0}));
}

#include "doctest.h"
#include "torichodge/fan.hpp"

using namespace th;

namespace {

Fan hirzebruch2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Fan projective(int d) {
  std::vector<ZVec> rays;
  for (int i = 0; i < d; ++i) {
    ZVec e(d, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(ZVec(d, -1));
  std::vector<Cone> cones;
  for (int skip = 0; skip <= d; ++skip) {
    Cone c;
    for (int i = 0; i <= d; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(d, rays, cones);
}

}  // namespace

TEST_CASE("Hirzebruch surface fan") {
  Fan f = hirzebruch2();
  CHECK(f.complete());
  CHECK(f.simplicial());
  CHECK(f.cones().size() == 9);
  CHECK(f.cones_of_dim(1).size() == 4);
  for (const auto& c : f.max_cones()) CHECK(cone_multiplicity(f, c) == 1);
}

TEST_CASE("non-primitive ray names the ray") {
  try {
    Fan(2, {{1, 0}, {0, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find('1') != std::string::npos);
  }
}

TEST_CASE("incomplete and overlapping fans") {
  Fan half(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}});
  CHECK_FALSE(half.complete());
  Fan overlap(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  auto v = validate_fan(overlap);
  CHECK_FALSE(v.complete);
}

TEST_CASE("cone multiplicity") {
  Fan f(2, {{1, 0}, {1, 2}}, {{0, 1}});
  CHECK(cone_multiplicity(f, {0, 1}) == 2);
}

TEST_CASE("divisor polytopes and semiampleness on F2") {
  Fan f = hirzebruch2();
  // -K = sum D_i is nef but not ample on F2.
  ZVec ak{1, 1, 1, 1};
  CHECK(is_semiample(f, ak));
  CHECK(iitaka_dimension(f, ak) == 2);
  CHECK(polytope_from_divisor(f, ak).lattice_points().size() == 9);
  // D_4 (the fiber class) contracts to P1.
  ZVec fib{1, 0, 0, 0};
  CHECK(is_semiample(f, fib));
  CHECK(iitaka_dimension(f, fib) == 1);
  // The negative section is not nef.
  CHECK_FALSE(is_semiample(f, ZVec{0, 0, 0, 1}));
}

TEST_CASE("semiample contraction of F2 to P1") {
  Fan f = hirzebruch2();
  SemiampleContraction c(f, ZVec{1, 0, 0, 0});
  CHECK(c.kappa() == 1);
  CHECK(c.target_fan().nrays() == 2);
  CHECK(c.nfaces() == 3);
  CHECK(c.cone_dim(c.zero_cone()) == 0);
  CHECK(c.interior_rays(c.zero_cone()) == std::vector<int>{1, 3});
  for (int face = 0; face < c.nfaces(); ++face) {
    ZVec b = c.sigma_representative(face);
    for (int k = 0; k < 4; ++k)
      if (c.ray_in(k, face)) CHECK(b[k] == 0);
  }
}

TEST_CASE("projective space contraction is the identity") {
  Fan f = projective(3);
  CHECK(f.complete());
  SemiampleContraction c(f, ZVec{1, 0, 0, 0});
  CHECK(c.kappa() == 3);
  CHECK(c.target_fan().nrays() == 4);
  CHECK(c.nfaces() == 15);
  CHECK_THROWS_AS(SemiampleContraction(f, ZVec{-1, 0, 0, 0}), InvalidInput);
}

TEST_CASE("regular subdivision refines the normal fan") {
  // Face fan of the square with midpoints: the blow-up of P1 x P1 at four points.
  std::vector<ZVec> pts = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  Fan square(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Fan f = regular_subdivision(square, pts);
  CHECK(f.complete());
  CHECK(f.simplicial());
  CHECK(f.nrays() == 8);
  CHECK(f.max_cones().size() == 8);
  for (const auto& c : f.max_cones()) CHECK(cone_multiplicity(f, c) == 1);
}

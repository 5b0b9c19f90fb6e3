#pragma once

#include <memory>

#include "torichodge/cox.hpp"

namespace th::fixtures {

inline std::shared_ptr<const SemiampleContraction> projective(int d, long long deg) {
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

inline CoxPolynomial fermat(int nvars, int deg) {
  CoxPolynomial f(nvars);
  for (int k = 0; k < nvars; ++k) {
    Exponent e(nvars, 0);
    e[k] = deg;
    f.add_term(e, 1);
  }
  return f;
}

inline Fan p1xp1() { return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}); }

}  // namespace th::fixtures

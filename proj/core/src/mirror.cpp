#include "torichodge/mirror.hpp"

#include <algorithm>
#include <set>

namespace th {

namespace {

long long l_star(const std::vector<FaceDatum>& fd, int f) { return static_cast<long long>(fd[f].interior_points.size()); }

long long hodge_formula(const LatticePolytope& P, const std::vector<FaceDatum>& fp, const std::vector<FaceDatum>& fq) {
  const int d = P.dim();
  long long h = static_cast<long long>(P.lattice_points().size()) - d - 1;
  for (const auto& f : fp) {
    if (f.dim == d - 1) h -= l_star(fp, f.face);
    if (f.dim == d - 2) h += l_star(fp, f.face) * l_star(fq, f.dual_face);
  }
  return h;
}

// Face fan of a polytope with the origin in its interior: rays are the vertices.
Fan face_fan(const LatticePolytope& P) {
  std::vector<Cone> cones;
  for (const auto& f : P.faces())
    if (f.dim == P.dim() - 1) cones.push_back(f.vertices);
  return Fan(P.dim(), P.vertices_int(), cones);
}

std::vector<ZVec> nonzero_points(const LatticePolytope& P) {
  std::vector<ZVec> out;
  for (const auto& m : P.lattice_points())
    if (std::any_of(m.begin(), m.end(), [](long long x) { return x != 0; })) out.push_back(m);
  return out;
}

struct Edge {
  ZVec m0, m1;
  long long vol = 0;
};

Edge edge_of(const SemiampleContraction& c, int face) {
  const auto& P = c.polytope();
  const auto verts = P.vertices_int();
  const auto& F = P.faces()[face];
  Edge e;
  e.m0 = verts[F.vertices[0]];
  e.vol = P.normalized_volume(face).get_si();
  e.m1.resize(e.m0.size());
  for (std::size_t j = 0; j < e.m0.size(); ++j) e.m1[j] = (verts[F.vertices[1]][j] - e.m0[j]) / e.vol;
  return e;
}

bool anticanonical(const Hypersurface& X) { return X.ring().chow().equal(X.beta(), X.beta0()); }

ZVec scaled(const ZVec& v, long long k) {
  ZVec out = v;
  for (auto& x : out) x *= k;
  return out;
}

}  // namespace

BatyrevNumbers batyrev_hodge(const LatticePolytope& nabla) {
  if (!is_reflexive(nabla)) throw InvalidInput("polytope is not reflexive");
  LatticePolytope delta = polar_dual(nabla);
  auto fn = face_data(nabla, &delta);
  auto fd = face_data(delta, &nabla);
  return {hodge_formula(nabla, fn, fd), hodge_formula(delta, fd, fn)};
}

std::vector<ZVec> simplified_points(const LatticePolytope& P) {
  std::vector<ZVec> out;
  for (const auto& m : P.lattice_points())
    if (P.faces()[P.carrier_face(m)].dim != P.dim() - 1) out.push_back(m);
  return out;
}

CoxPolynomial with_rational_edges(const SemiampleContraction& c, const CoxPolynomial& f) {
  CoxPolynomial g = f;
  for (int face = 0; face < c.nfaces(); ++face) {
    if (c.i_sigma(face) != 1 || c.cone_dim(face) != c.kappa() - 1 || c.interior_rays(face).empty()) continue;
    Edge e = edge_of(c, face);
    // prod_{s=1}^{vol} (T - s), lowest degree first.
    std::vector<Int> p{1};
    for (long long s = 1; s <= e.vol; ++s) {
      std::vector<Int> next(p.size() + 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= Int(static_cast<long>(s)) * p[j];
      }
      p = std::move(next);
    }
    for (long long j = 0; j <= e.vol; ++j) {
      ZVec m = e.m0;
      for (std::size_t t = 0; t < m.size(); ++t) m[t] += j * e.m1[t];
      Exponent mono = monomial_of_point(c.fan(), c.divisor(), m);
      g.add_term(mono, Rat(p[j]) - g.coefficient(mono));
    }
  }
  return g;
}

MirrorPair build_mirror_pair(const LatticePolytope& delta, std::uint64_t seed, const MirrorOptions& opt) {
  if (!is_reflexive(delta)) throw InvalidInput("polytope is not reflexive");
  MirrorPair pair;
  pair.delta = delta;
  pair.nabla = polar_dual(delta);
  pair.simplified = opt.simplified;
  const int d = delta.dim();

  Fan sigma = regular_subdivision(face_fan(pair.nabla), nonzero_points(pair.nabla));
  Fan sigma_dual = regular_subdivision(face_fan(delta), nonzero_points(delta));
  pair.x = std::make_shared<SemiampleContraction>(sigma, ZVec(sigma.nrays(), 1));
  pair.x_dual = std::make_shared<SemiampleContraction>(sigma_dual, ZVec(sigma_dual.nrays(), 1));
  if (pair.x->kappa() != d || pair.x_dual->kappa() != d) throw std::logic_error("mirror contraction is not big");

  const int attempts = 20;
  bool ok = false;
  const auto all_x = pair.x->polytope().lattice_points();
  for (int t = 0; t < attempts && !ok; ++t) {
    pair.f = support_polynomial(*pair.x, all_x, seed + static_cast<std::uint64_t>(t));
    if (opt.rational_edges) pair.f = with_rational_edges(*pair.x, pair.f);
    ok = nondegeneracy_certificate(pair.x, pair.f);
  }
  if (!ok) throw std::runtime_error("no certificate-passing polynomial for X");

  pair.f_dual = CoxPolynomial(pair.x_dual->fan().nrays());
  if (!opt.dual_polynomial) return pair;
  const auto pts = opt.simplified ? simplified_points(pair.x_dual->polytope()) : pair.x_dual->polytope().lattice_points();
  ok = false;
  for (int t = 0; t < attempts && !ok; ++t) {
    pair.f_dual = support_polynomial(*pair.x_dual, pts, seed + 1000 + static_cast<std::uint64_t>(t));
    ok = nondegeneracy_certificate(pair.x_dual, pair.f_dual);
  }
  if (!ok) throw std::runtime_error("no certificate-passing polynomial for the mirror");
  return pair;
}

long long alpha_product(int n, const std::vector<int>& ks) {
  for (int k : ks)
    if (k < 1 || k > n) throw InvalidInput("root index out of range");
  long long total = 0;
  for (int p = 1; p <= n + 1; ++p) {
    long long prod = 1;
    for (int k : ks) {
      if (p == k) prod *= -1;
      else if (p == k + 1) prod *= 1;
      else prod = 0;
    }
    total += prod;
  }
  return total;
}

MonomialDivisorMap monomial_divisor_map(const MirrorPair& pair) {
  if (!pair.simplified) throw InvalidInput("the monomial-divisor map needs a simplified mirror polynomial");
  if (pair.f_dual.is_zero()) throw InvalidInput("mirror pair was built without a mirror polynomial");
  const auto& c = *pair.x;
  const auto& cd = *pair.x_dual;
  const int d = c.fan().dim();
  Hypersurface Xd(pair.x_dual, pair.f_dual);
  const auto& slice = Xd.r1(cd.zero_cone(), Xd.beta());

  const std::size_t n = c.fan().nrays();
  std::vector<CoxPolynomial> image(n);
  std::vector<Exponent> mono(n);
  for (std::size_t k = 0; k < n; ++k) {
    mono[k] = monomial_of_point(cd.fan(), cd.divisor(), c.fan().ray(static_cast<int>(k)));
    image[k] = CoxPolynomial::monomial(mono[k], pair.f_dual.coefficient(mono[k]));
  }

  MonomialDivisorMap out;
  auto Q = toric_divisor_quotient(c);
  out.divisor_basis = Q.basis;
  out.toric_dim = Q.basis.size();
  out.polynomial_dim = slice.dim();
  out.relations_vanish = true;
  for (int j = 0; j < d; ++j) {
    CoxPolynomial rel(cd.fan().nrays());
    for (std::size_t k = 0; k < n; ++k) rel += image[k] * Rat(static_cast<long>(c.fan().ray(static_cast<int>(k))[j]));
    auto co = slice.coords(rel);
    if (std::any_of(co.begin(), co.end(), [](const Rat& x) { return x != 0; })) out.relations_vanish = false;
  }
  for (int l : Q.killed)
    if (!image[l].is_zero()) out.relations_vanish = false;

  out.matrix = RatMatrix(slice.dim(), Q.basis.size());
  for (std::size_t j = 0; j < Q.basis.size(); ++j) {
    out.monomials.push_back(mono[Q.basis[j]]);
    auto co = slice.coords(image[Q.basis[j]]);
    for (std::size_t i = 0; i < co.size(); ++i) out.matrix(i, j) = co[i];
  }
  out.isomorphism = out.toric_dim == out.polynomial_dim && rank(out.matrix) == out.toric_dim;
  return out;
}

GeneralizedMdmm generalized_mdmm(const MirrorPair& pair, RootMode mode, double tolerance) {
  if (pair.f_dual.is_zero()) throw InvalidInput("mirror pair was built without a mirror polynomial");
  const auto& c = *pair.x;
  const auto& cd = *pair.x_dual;
  const int d = c.fan().dim();
  Hypersurface X(pair.x, pair.f);
  Hypersurface Xd(pair.x_dual, pair.f_dual);
  GeneralizedMdmm out;
  for (int face = 0; face < c.nfaces(); ++face) {
    if (c.cone_dim(face) != d - 1) continue;
    auto rays = c.interior_rays(face);
    if (rays.empty()) continue;
    GeneralizedBlock b;
    b.face = face;
    b.interior_rays = rays;
    b.volume = c.polytope().normalized_volume(face).get_si();
    for (int k : rays) {
      auto cc = component_classes(X, k, mode, tolerance);
      b.classes.push_back(mode == RootMode::exact ? cc.exact.size() : cc.numeric.size());
    }
    b.dual_face = dual_face_index(c.polytope(), cd.polytope(), face);
    if (cd.cone_dim(b.dual_face) != 2) throw std::logic_error("dual of an edge is not a two-cone");
    b.n_dual = cd.interior_rays(b.dual_face).size();
    const auto& slice = Xd.r1(b.dual_face, Xd.beta1(b.dual_face));
    b.dual_slice_dim = slice.dim();
    const Exponent h = Xd.h_sigma(b.dual_face);
    RatMatrix M(rays.size(), slice.dim());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      Exponent e = monomial_of_point(cd.fan(), cd.divisor(), c.fan().ray(rays[r]));
      for (std::size_t t = 0; t < e.size(); ++t) {
        e[t] -= h[t];
        if (e[t] < 0) throw std::logic_error("mirror monomial not divisible by h_sigma");
      }
      b.A.push_back(CoxPolynomial::monomial(e));
      auto co = slice.coords(b.A.back());
      for (std::size_t j = 0; j < co.size(); ++j) M(r, j) = co[j];
    }
    b.A_rank = rank(M);
    b.holds = b.dual_slice_dim == rays.size() && b.A_rank == rays.size();
    for (std::size_t cnt : b.classes)
      if (cnt != static_cast<std::size_t>(b.volume - 1) || cnt != b.n_dual) b.holds = false;
    out.holds = out.holds && b.holds;
    out.blocks.push_back(std::move(b));
  }
  return out;
}

ChiralValue chiral_product(const Hypersurface& X, const std::vector<ChiralElement>& elems) {
  if (!anticanonical(X)) throw InvalidInput("chiral products need the anticanonical degree");
  const int d = X.d();
  const auto& c = X.contraction();
  ChiralValue out;
  CoxPolynomial P = CoxPolynomial::constant(X.n(), 1);
  int q = 0;
  std::set<int> faces;
  std::vector<int> ks;
  for (const auto& e : elems) {
    P = P * e.A;
    q += e.q;
    if (e.sigma) {
      if (c.cone_dim(e.face) != 2) throw InvalidInput("sigma part needs a two-dimensional cone");
      faces.insert(e.face);
      ks.push_back(e.k);
    }
  }
  out.q = q;
  if (faces.size() > 1) return out;  // distinct cones
  const int t = static_cast<int>(ks.size());
  if (t > 3) throw UnsupportedProduct("more than three sigma factors");
  if (q > d - 1) return out;

  ZVec top_degree = scaled(X.beta(), d);
  auto top_coordinate = [&](const CoxPolynomial& h) {
    const auto& R0 = X.r0(c.zero_cone(), top_degree);
    if (R0.dim() != 1) throw std::logic_error("top slice of R_0 is not one-dimensional");
    return R0.coords(h)[0];
  };

  if (t == 0) {
    out.kind = ChiralValue::Kind::polynomial;
    out.value = P;
    if (q == d - 1) {
      out.top = top_coordinate(P.times_monomial(X.h_sigma(c.zero_cone())));
      if (out.top == 0) out.kind = ChiralValue::Kind::zero;
    }
    return out;
  }

  const int face = *faces.begin();
  const int n = static_cast<int>(ordered_cone_rays(c, face).size()) - 2;
  out.face = face;
  out.alpha = alpha_product(n, ks);
  if (t == 1 && q < d - 1) {
    out.kind = ChiralValue::Kind::sigma;
    out.k = ks[0];
    out.alpha = 1;
    out.value = P;
    return out;
  }
  if (q != d - 1) throw UnsupportedProduct("two or three sigma factors are covered only in the top degree");
  if (out.alpha == 0) return out;

  auto corr = correction_polynomials(X, face);
  CoxPolynomial h = P * corr.G;
  if (t == 3) {
    h = h * corr.H;
    out.unit = corr.H_unit;
  }
  out.top = top_coordinate(h);
  if (out.top == 0) return out;
  out.kind = ChiralValue::Kind::polynomial;
  out.value = mu_inverse(X, h);
  return out;
}

QuantumSideResult quantum_side_product(const CohomologyRing& R, const std::vector<CoxPolynomial>& toric,
                                       const std::vector<ComponentFactor>& factors) {
  const auto& X = R.hypersurface();
  const auto& c = X.contraction();
  const auto& H = R.cohomology();
  const int top = R.dim();
  if (static_cast<int>(toric.size() + factors.size()) != top)
    throw InvalidInput("quantum-side products need s + t = d - 1 factors");
  int face = -1;
  for (const auto& fct : factors) {
    const int f = c.ray_face(fct.ray);
    if (c.cone_dim(f) != c.kappa() - 1) throw InvalidInput("component factor ray is not interior to a cone of Sigma_X(i-1)");
    if (face >= 0 && f != face) throw InvalidInput("component factors must share one cone");
    face = f;
  }
  std::map<int, ComponentClasses> classes;
  QuantumSideResult out;
  HodgeClass cup = R.toric_class(CoxPolynomial::constant(X.n(), 1), 0);
  CoxPolynomial closed = CoxPolynomial::constant(X.n(), 1);
  for (const auto& a : toric) {
    cup = R.multiply(cup, R.toric_class(a, 1));
    closed = closed * a;
  }
  std::vector<int> ks;
  for (const auto& fct : factors) {
    auto it = classes.find(fct.ray);
    if (it == classes.end()) it = classes.emplace(fct.ray, component_classes(X, fct.ray, RootMode::exact)).first;
    const auto& g = it->second.exact;
    if (fct.k < 1 || fct.k > static_cast<int>(g.size())) throw InvalidInput("component index out of range");
    ZVec unit(X.n(), 0);
    unit[fct.ray] = 1;
    const CoxPolynomial D = H.divisor(unit);
    cup = R.multiply(cup, R.residue_class(face, D, 1, g[fct.k - 1], 0));
    closed = closed * D;
    ks.push_back(fct.k);
  }
  const int n = face < 0 ? 0 : static_cast<int>(c.polytope().normalized_volume(face).get_si()) - 1;
  out.alpha = ks.empty() ? 1 : alpha_product(n, ks);
  out.cup = cup;
  out.closed_form = R.toric_class(closed, top) * Rat(static_cast<long>(out.alpha));
  auto value = [&](const HodgeClass& x) {
    auto v = R.integrate(x);
    auto it = v.find({0, 0});
    return it == v.end() ? Rat(0) : it->second;
  };
  out.cup_integral = value(out.cup);
  out.closed_integral = value(out.closed_form);
  out.agree = out.cup == out.closed_form;
  return out;
}

}  // namespace th

#include "torichodge/picard.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace th {

std::size_t PicardReport::rank() const {
  std::size_t r = toric_rank;
  for (const auto& b : residue) r += b.slice_dim;
  return r;
}

ToricDivisorQuotient toric_divisor_quotient(const SemiampleContraction& c) {
  const auto& fan = c.fan();
  const std::size_t n = fan.nrays();
  ToricDivisorQuotient Q;
  Q.relations = Echelon(n);
  for (int j = 0; j < fan.dim(); ++j) {
    RatVec row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = Rat(static_cast<long>(fan.ray(static_cast<int>(k))[j]));
    Q.relations.insert(sparse_from_dense(row));
  }
  for (int face = 0; face < c.nfaces(); ++face) {
    if (c.cone_dim(face) != c.kappa()) continue;
    for (int l : c.interior_rays(face)) {
      Q.killed.push_back(l);
      Q.relations.insert({{static_cast<std::uint32_t>(l), Rat(1)}});
    }
  }
  std::sort(Q.killed.begin(), Q.killed.end());
  for (std::size_t k : Q.relations.non_pivots()) Q.basis.push_back(static_cast<int>(k));
  return Q;
}

PicardReport picard_group(const Hypersurface& X) {
  if (!X.certificate()) throw InvalidInput("nondegeneracy certificate failed");
  const auto& c = X.contraction();
  const auto& fan = c.fan();
  const int d = fan.dim();
  const std::size_t n = fan.nrays();
  const int i = c.kappa();

  PicardReport rep;
  rep.iitaka = i;
  rep.identified_with_h2 = i > 3;

  auto Q = toric_divisor_quotient(c);
  rep.killed_rays = Q.killed;
  rep.toric_basis = Q.basis;
  rep.toric_rank = rep.toric_basis.size();
  const long long a1_top = static_cast<long long>(Q.killed.size());

  long long res_sum = 0;
  for (int face = 0; face < c.nfaces(); ++face) {
    if (c.cone_dim(face) != i - 1 || i < 1) continue;
    const auto rays = c.interior_rays(face);
    if (rays.empty()) continue;
    const std::size_t dim = X.r1_dim(face, X.degree(1, face));
    for (int k : rays) {
      PicardResidueBlock b;
      b.face = face;
      b.ray = k;
      b.components = c.polytope().normalized_volume(face).get_si();
      b.slice_dim = dim;
      rep.residue.push_back(b);
      res_sum += static_cast<long long>(dim);
    }
  }
  rep.formula = static_cast<long long>(n) - d - a1_top + res_sum;
  return rep;
}

namespace {

Rat eval(const RatVec& p, const Rat& x) {
  Rat v = 0;
  for (std::size_t j = p.size(); j-- > 0;) v = v * x + p[j];
  return v;
}

std::vector<std::complex<double>> companion_roots(const RatVec& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg == 0) return {};
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = p.back().get_d();
  for (int j = 0; j < deg; ++j) M(0, j) = -p[deg - 1 - j].get_d() / lead;
  for (int j = 1; j < deg; ++j) M(j, j - 1) = 1;
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<long long> divisors(long long v) {
  v = std::llabs(v);
  std::vector<long long> out;
  for (long long q = 1; q * q <= v; ++q)
    if (v % q == 0) {
      out.push_back(q);
      if (q != v / q) out.push_back(v / q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Rational roots located from numeric approximations and confirmed exactly: a root p/q of
// an integer polynomial has q dividing the leading coefficient.
std::vector<Rat> rational_roots(const RatVec& p) {
  Int den = 1;
  for (const auto& a : p) den = lcm(den, Int(a.get_den()));
  Int lead = Int(p.back() * den);
  if (!lead.fits_slong_p() || std::llabs(lead.get_si()) > 1000000000000LL)
    throw InvalidInput("edge polynomial leading coefficient too large for exact root search");
  const auto qs = divisors(lead.get_si());
  std::vector<Rat> roots;
  for (const auto& z : companion_roots(p)) {
    if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z))) continue;
    for (long long q : qs) {
      const double pq = std::round(z.real() * static_cast<double>(q));
      Rat cand(Int(static_cast<long>(pq)), Int(static_cast<long>(q)));
      cand.canonicalize();
      if (eval(p, cand) == 0) {
        roots.push_back(cand);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

EdgeFactorization factor_edge(const Hypersurface& X, int face) {
  const auto& c = X.contraction();
  const auto& P = c.polytope();
  const auto& F = P.faces()[face];
  if (F.dim != 1) throw InvalidInput("component classes need an edge face");
  const auto verts = P.vertices_int();
  EdgeFactorization e;
  e.face = face;
  e.m0 = verts[F.vertices[0]];
  const ZVec& m_end = verts[F.vertices[1]];
  const long long vol = P.normalized_volume(face).get_si();
  e.m1.resize(e.m0.size());
  for (std::size_t j = 0; j < e.m0.size(); ++j) e.m1[j] = (m_end[j] - e.m0[j]) / vol;
  const ZVec& a = c.divisor();
  e.coefficients.resize(vol + 1);
  for (long long s = 0; s <= vol; ++s) {
    ZVec m = e.m0;
    for (std::size_t j = 0; j < m.size(); ++j) m[j] += s * e.m1[j];
    e.coefficients[s] = X.f().coefficient(monomial_of_point(c.fan(), a, m));
  }
  if (e.coefficients.front() == 0 || e.coefficients.back() == 0)
    throw InvalidInput("edge polynomial vanishes at a vertex; f is degenerate");
  return e;
}

// Coefficients of a * T * prod_{s != l, l+1} (T - lambda_s) * (lambda_{l+1} - lambda_l).
template <class S>
std::vector<S> class_coefficients(const std::vector<S>& roots, std::size_t l, const S& lead) {
  std::vector<S> q{S(0), S(1)};
  for (std::size_t s = 0; s < roots.size(); ++s) {
    if (s == l || s == l + 1) continue;
    std::vector<S> next(q.size() + 1, S(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j + 1] += q[j];
      next[j] -= roots[s] * q[j];
    }
    q = std::move(next);
  }
  const S scale = lead * (roots[l + 1] - roots[l]);
  for (auto& x : q) x = x * scale;
  return q;
}

}  // namespace

ComponentClasses component_classes(const Hypersurface& X, int ray, RootMode mode, double tolerance) {
  const auto& c = X.contraction();
  const int face = c.ray_face(ray);
  if (c.cone_dim(face) != c.kappa() - 1) throw InvalidInput("ray is not interior to a cone of Sigma_X(i-1)");
  ComponentClasses out;
  out.edge = factor_edge(X, face);
  auto& e = out.edge;
  const std::size_t vol = e.coefficients.size() - 1;
  const auto& slice = X.r1(face, X.degree(1, face));
  const auto h = X.h_sigma(face);
  const ZVec& a = c.divisor();

  auto monomial_at = [&](std::size_t j) {
    ZVec m = e.m0;
    for (std::size_t t = 0; t < m.size(); ++t) m[t] += static_cast<long long>(j) * e.m1[t];
    Exponent ex = monomial_of_point(c.fan(), a, m);
    for (std::size_t k = 0; k < ex.size(); ++k) {
      ex[k] -= h[k];
      if (ex[k] < 0) throw std::logic_error("edge monomial not divisible by h_sigma");
    }
    return ex;
  };

  if (mode == RootMode::exact) {
    e.exact_roots = rational_roots(e.coefficients);
    for (std::size_t s = 1; s < e.exact_roots.size(); ++s)
      if (e.exact_roots[s] == e.exact_roots[s - 1]) throw InvalidInput("edge polynomial has a repeated root");
    if (e.exact_roots.size() != vol) throw InvalidInput("edge polynomial does not split over Q");
    for (std::size_t l = 0; l + 1 < vol; ++l) {
      auto q = class_coefficients<Rat>(e.exact_roots, l, e.coefficients.back());
      CoxPolynomial g(X.n());
      for (std::size_t j = 1; j < vol; ++j)
        if (q[j] != 0) g.add_term(monomial_at(j), q[j]);
      out.exact.push_back(g);
      auto co = slice.coords(g);
      std::vector<std::complex<double>> v;
      for (const auto& x : co) v.emplace_back(x.get_d(), 0.0);
      out.numeric.push_back(std::move(v));
    }
    return out;
  }

  e.numeric_roots = companion_roots(e.coefficients);
  for (std::size_t s = 1; s < e.numeric_roots.size(); ++s)
    for (std::size_t t = 0; t < s; ++t)
      if (std::abs(e.numeric_roots[s] - e.numeric_roots[t]) < tolerance)
        throw InvalidInput("edge polynomial has a repeated root");
  std::vector<RatVec> mono_coords(vol + 1);
  for (std::size_t j = 1; j < vol; ++j) mono_coords[j] = slice.coords(CoxPolynomial::monomial(monomial_at(j)));
  const std::complex<double> lead(e.coefficients.back().get_d(), 0.0);
  for (std::size_t l = 0; l + 1 < vol; ++l) {
    auto q = class_coefficients<std::complex<double>>(e.numeric_roots, l, lead);
    std::vector<std::complex<double>> v(slice.dim());
    for (std::size_t j = 1; j < vol; ++j)
      for (std::size_t b = 0; b < v.size(); ++b) v[b] += q[j] * mono_coords[j][b].get_d();
    out.numeric.push_back(std::move(v));
  }
  return out;
}

}  // namespace th

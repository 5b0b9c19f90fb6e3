#include "torichodge/products.hpp"

#include <stdexcept>

namespace th {

namespace {

bool zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool zero_mat(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Tag product; returns the sign picked up from sqrt(-1)^2.
int combine(int t1, int u1, int t2, int u2, int& twist, int& unit) {
  twist = t1 + t2;
  unit = u1 + u2;
  if (unit >= 2) {
    unit -= 2;
    return -1;
  }
  return 1;
}

void axpy(RatVec& y, const Rat& a, const RatVec& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace

void HodgeClass::normalize() {
  for (auto it = toric.begin(); it != toric.end();) it = zero_vec(it->second) ? toric.erase(it) : std::next(it);
  for (auto it = residue.begin(); it != residue.end();)
    it = zero_mat(it->second) ? residue.erase(it) : std::next(it);
}

bool HodgeClass::operator==(const HodgeClass& o) const {
  HodgeClass a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.toric == b.toric && a.residue == b.residue;
}

HodgeClass HodgeClass::operator+(const HodgeClass& o) const {
  HodgeClass r = *this;
  for (const auto& [k, v] : o.toric) axpy(r.toric[k], 1, v);
  for (const auto& [k, m] : o.residue) {
    auto it = r.residue.find(k);
    if (it == r.residue.end()) {
      r.residue[k] = m;
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) it->second(i, j) += m(i, j);
  }
  r.normalize();
  return r;
}

HodgeClass HodgeClass::operator*(const Rat& c) const {
  HodgeClass r = *this;
  for (auto& [k, v] : r.toric)
    for (auto& x : v) x *= c;
  for (auto& [k, m] : r.residue)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
  r.normalize();
  return r;
}

CohomologyRing::CohomologyRing(const Hypersurface& X, const ToricCohomology& H)
    : X_(X), H_(H), x_(H.divisor(X.contraction().divisor())) {}

const PairedQuotient& CohomologyRing::a1(int k) const {
  auto& slot = a1_[k];
  if (!slot) slot = std::make_unique<PairedQuotient>(a1_slice(H_, X_.contraction().divisor(), k));
  return *slot;
}

const PairedQuotient& CohomologyRing::a1_sigma(int face, int s) const {
  auto& slot = a1s_[{face, s}];
  if (!slot) slot = std::make_unique<PairedQuotient>(a1_sigma_slice(H_, X_.contraction(), face, s));
  return *slot;
}

const SigmaResidueContext& CohomologyRing::context(int face) const {
  auto& slot = ctx_[face];
  if (!slot) slot = std::make_unique<SigmaResidueContext>(X_, face);
  return *slot;
}

const GradedSlice& CohomologyRing::r1(int face, int r) const { return X_.r1(face, context(face).r1_degree(r)); }

std::pair<int, int> CohomologyRing::bidegree(int face, int s, int r) const {
  const int i = X_.contraction().i_sigma(face);
  return {i - 1 - r + s, r + s};
}

RatVec CohomologyRing::toric_coords(const CoxPolynomial& a, int k) const {
  if (k < 0 || k > dim()) return {};
  auto c = a1(k).coords(a);
  if (!c) throw std::logic_error("class outside A_1(X)");
  return *c;
}

RatVec CohomologyRing::sigma_coords(int face, const CoxPolynomial& u, int s) const {
  auto c = a1_sigma(face, s).coords(u);
  if (!c) throw InvalidInput("class is not in U^sigma");
  return *c;
}

const RatMatrix& CohomologyRing::res_matrix(int face, int r, int r2) const {
  auto key = std::make_tuple(face, r, r2);
  auto it = res_.find(key);
  if (it != res_.end()) return it->second;
  const auto& A = r1(face, r);
  const auto& B = r1(face, r2);
  const auto& ctx = context(face);
  RatMatrix M(A.dim(), B.dim());
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < B.dim(); ++b) M(a, b) = ctx.res(A.basis_element(a) * B.basis_element(b));
  return res_.emplace(key, std::move(M)).first->second;
}

HodgeClass CohomologyRing::toric_class(const CoxPolynomial& a, int k) const {
  HodgeClass x;
  if (k < 0 || k > dim()) throw InvalidInput("toric degree out of range");
  x.toric[{k, 0, 0}] = toric_coords(a, k);
  x.normalize();
  return x;
}

HodgeClass CohomologyRing::residue_class(int face, const CoxPolynomial& u, int s, const CoxPolynomial& g,
                                         int r) const {
  const auto& c = X_.contraction();
  if (face < 0 || face >= c.nfaces()) throw InvalidInput("face index out of range");
  const int i = c.i_sigma(face);
  if (r < 0 || r >= i) throw InvalidInput("residue index r must satisfy 0 <= r < i(sigma)");
  if (s < 0 || s > X_.d() - i) throw InvalidInput("s out of range for A_1^sigma");
  RatVec a = sigma_coords(face, u, s);
  RatVec b = r1(face, r).coords(g);
  RatMatrix C(a.size(), b.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) C(p, q) = a[p] * b[q];
  HodgeClass x;
  x.residue[{face, s, r, 0, 0}] = C;
  x.normalize();
  return x;
}

HodgeClass CohomologyRing::multiply(const HodgeClass& x, const HodgeClass& y) const {
  const auto& c = X_.contraction();
  const int d = X_.d();
  HodgeClass out;
  auto lift = [](const PairedQuotient& Q, const RatVec& v) {
    CoxPolynomial p;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) p += Q.basis_element(i) * v[i];
    return p;
  };
  auto add_residue = [&](const HodgeClass::ResidueKey& key, const RatMatrix& m) {
    HodgeClass t;
    t.residue[key] = m;
    out = out + t;
  };

  // (a) toric . toric
  for (const auto& [kx, vx] : x.toric)
    for (const auto& [ky, vy] : y.toric) {
      const int k = std::get<0>(kx) + std::get<0>(ky);
      if (k > dim()) continue;
      int tw, un;
      int sign = combine(std::get<1>(kx), std::get<2>(kx), std::get<1>(ky), std::get<2>(ky), tw, un);
      CoxPolynomial p = lift(a1(std::get<0>(kx)), vx) * lift(a1(std::get<0>(ky)), vy);
      axpy(out.toric[{k, tw, un}], Rat(sign), toric_coords(p, k));
    }

  // (b) toric . residue, in either order
  auto rule_b = [&](const HodgeClass::ToricKey& kt, const RatVec& vt, const HodgeClass::ResidueKey& kr,
                    const RatMatrix& C) {
    const auto [face, s, r, twr, unr] = kr;
    const int k = std::get<0>(kt);
    const int s2 = s + k;
    if (s2 > d - c.i_sigma(face)) return;
    int tw, un;
    int sign = combine(std::get<1>(kt), std::get<2>(kt), twr, unr, tw, un);
    CoxPolynomial a = lift(a1(k), vt);
    const auto& src = a1_sigma(face, s);
    const auto& dst = a1_sigma(face, s2);
    RatMatrix C2(dst.dim(), C.cols());
    for (std::size_t al = 0; al < C.rows(); ++al) {
      RatVec w = sigma_coords(face, H_.normal_form(a * src.basis_element(al), s2), s2);
      for (std::size_t be = 0; be < w.size(); ++be)
        for (std::size_t b = 0; b < C.cols(); ++b) C2(be, b) += Rat(sign) * w[be] * C(al, b);
    }
    add_residue({face, s2, r, tw, un}, C2);
  };
  for (const auto& [kt, vt] : x.toric)
    for (const auto& [kr, C] : y.residue) rule_b(kt, vt, kr, C);
  for (const auto& [kr, C] : x.residue)
    for (const auto& [kt, vt] : y.toric) rule_b(kt, vt, kr, C);

  // (c), (d), (e) residue . residue
  for (const auto& [k1, C1] : x.residue)
    for (const auto& [k2, C2] : y.residue) {
      const auto [f1, s1, r1i, tw1, un1] = k1;
      const auto [f2, s2, r2i, tw2, un2] = k2;
      if (f1 != f2) continue;  // (e)
      const int face = f1;
      const int i = c.i_sigma(face);
      int tw, un;
      int sign = combine(tw1, un1, tw2, un2, tw, un);
      const RatMatrix& Rm = res_matrix(face, r1i, r2i);
      // RR = C1 Rm C2^T
      RatMatrix RR = C1 * Rm * C2.transpose();
      const auto& U1 = a1_sigma(face, s1);
      const auto& U2 = a1_sigma(face, s2);
      if (i >= 2) {
        if (r1i + r2i + 1 != i) continue;
        const int k = s1 + s2 + i - 1;
        if (k > dim()) continue;
        ResidueScalar cr = c_p_sigma(r1i, i);
        int tw3, un3;
        int sign2 = combine(tw, un, cr.twist, cr.unit, tw3, un3);
        CoxPolynomial W = CoxPolynomial::constant(H_.nvars(), 1);
        for (int t = 0; t < i - 1; ++t) W = W * x_;
        RatVec acc;
        for (std::size_t a = 0; a < RR.rows(); ++a)
          for (std::size_t b = 0; b < RR.cols(); ++b) {
            if (RR(a, b) == 0) continue;
            CoxPolynomial uv = H_.normal_form(W * U1.basis_element(a) * U2.basis_element(b), k);
            axpy(acc, RR(a, b), toric_coords(uv, k));
          }
        axpy(out.toric[{k, tw3, un3}], Rat(sign * sign2) * cr.q, acc);
      } else if (i == 1) {
        const int s3 = s1 + s2;
        if (s3 > dim()) continue;
        RatVec acc;
        for (std::size_t a = 0; a < RR.rows(); ++a)
          for (std::size_t b = 0; b < RR.cols(); ++b) {
            if (RR(a, b) == 0) continue;
            CoxPolynomial uv = H_.normal_form(U1.basis_element(a) * U2.basis_element(b), s3);
            axpy(acc, -RR(a, b), toric_coords(uv, s3));
          }
        axpy(out.toric[{s3, tw, un}], Rat(sign), acc);
        if (s3 > d - i) continue;
        const auto& U3 = a1_sigma(face, s3);
        const auto& G1 = r1(face, r1i);
        const auto& G2 = r1(face, r2i);
        const auto& R0 = r1(face, 0);
        const auto& ctx = context(face);
        RatMatrix N(U3.dim(), R0.dim());
        for (std::size_t a1i = 0; a1i < C1.rows(); ++a1i)
          for (std::size_t a2i = 0; a2i < C2.rows(); ++a2i) {
            RatVec uv = sigma_coords(face, H_.normal_form(U1.basis_element(a1i) * U2.basis_element(a2i), s3), s3);
            if (zero_vec(uv)) continue;
            for (std::size_t b1 = 0; b1 < C1.cols(); ++b1) {
              if (C1(a1i, b1) == 0) continue;
              for (std::size_t b2 = 0; b2 < C2.cols(); ++b2) {
                const Rat coef = C1(a1i, b1) * C2(a2i, b2);
                if (coef == 0) continue;
                RatVec pg = R0.coords(ctx.p_sigma(G1.basis_element(b1) * G2.basis_element(b2)));
                for (std::size_t u = 0; u < uv.size(); ++u)
                  for (std::size_t g = 0; g < pg.size(); ++g) N(u, g) += Rat(sign) * coef * uv[u] * pg[g];
              }
            }
          }
        add_residue({face, s3, 0, tw, un}, N);
      }
    }
  out.normalize();
  return out;
}

std::map<std::pair<int, int>, Rat> CohomologyRing::integrate(const HodgeClass& x) const {
  std::map<std::pair<int, int>, Rat> out;
  for (const auto& [k, v] : x.toric) {
    if (std::get<0>(k) != dim()) continue;
    const auto& Q = a1(dim());
    CoxPolynomial p;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) p += Q.basis_element(i) * v[i];
    Rat val = H_.integrate(p * x_);
    if (val != 0) out[{std::get<1>(k), std::get<2>(k)}] += val;
  }
  return out;
}

}  // namespace th

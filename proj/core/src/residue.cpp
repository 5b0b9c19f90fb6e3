#include "torichodge/residue.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace th {

ResidueScalar::ResidueScalar(Rat q_, int twist_, int unit_) : q(std::move(q_)), twist(twist_), unit(unit_) {
  unit = ((unit % 4) + 4) % 4;
  if (unit >= 2) {
    q = -q;
    unit -= 2;
  }
  if (q == 0) twist = unit = 0;
}

ResidueScalar ResidueScalar::operator*(const ResidueScalar& o) const {
  return ResidueScalar(q * o.q, twist + o.twist, unit + o.unit);
}

std::string ResidueScalar::str() const {
  std::string s = to_string(q);
  if (twist) s += "*(-2*pi*i)^" + std::to_string(twist);
  if (unit) s += "*i";
  return s;
}

Int c_I_beta(const Fan& fan, const IntMatrix& m, const ZVec& b, const std::vector<int>& I) {
  const std::size_t k = m.rows() + 1;
  if (I.size() != k) throw std::invalid_argument("index set must have " + std::to_string(k) + " elements");
  IntMatrix A(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    A(0, c) = static_cast<long>(b[I[c]]);
    const ZVec& e = fan.ray(I[c]);
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Int s = 0;
      for (int t = 0; t < fan.dim(); ++t) s += m(j, t) * static_cast<long>(e[t]);
      A(j + 1, c) = s;
    }
  }
  return determinant(A);
}

Int c_I_beta(const Fan& fan, const ZVec& b, const std::vector<int>& I) {
  return c_I_beta(fan, IntMatrix::identity(fan.dim()), b, I);
}

CoxPolynomial polynomial_determinant(const std::vector<std::vector<CoxPolynomial>>& M,
                                     const std::vector<int>& killed) {
  const std::size_t k = M.size();
  if (k == 0) return CoxPolynomial();
  const std::size_t nv = M[0][0].nvars();
  // Expansion along rows; minors indexed by the set of columns already used.
  std::map<unsigned, CoxPolynomial> cur;
  cur[0] = CoxPolynomial::constant(nv, 1);
  for (std::size_t r = 0; r < k; ++r) {
    std::map<unsigned, CoxPolynomial> next;
    for (const auto& [mask, minor] : cur) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask & (1u << c)) continue;
        int above = __builtin_popcount(mask >> c);
        CoxPolynomial term = (minor * M[r][c]).truncate(killed);
        if (above % 2) term = term * Rat(-1);
        next[mask | (1u << c)] += term;
      }
    }
    cur = std::move(next);
  }
  CoxPolynomial out = cur[(1u << k) - 1];
  if (out.nvars() == 0) out = CoxPolynomial(nv);
  return out;
}

namespace {

long long pairing(const IntMatrix& m, std::size_t j, const ZVec& e) {
  Int s = 0;
  for (std::size_t t = 0; t < e.size(); ++t) s += m(j, t) * static_cast<long>(e[t]);
  return s.get_si();
}

CoxPolynomial divide_by_monomial(const CoxPolynomial& p, const Exponent& h, const char* what) {
  CoxPolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent q = e;
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] -= h[k];
      if (q[k] < 0) throw std::runtime_error(std::string(what) + ": division is not exact");
    }
    out.add_term(q, c);
  }
  return out;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SigmaResidueContext::SigmaResidueContext(const Hypersurface& X, int face, std::optional<std::vector<int>> I)
    : X_(&X), face_(face) {
  const auto& c = X.contraction();
  i_ = c.i_sigma(face);
  m_ = c.face_lattice(face);
  b_ = c.sigma_representative(face);
  vol_ = c.polytope().normalized_volume(face);
  const auto killed = X.killed(face);

  if (I) {
    I_ = *I;
    c_ = c_I_beta(c.fan(), m_, b_, I_);
    if (c_ == 0) throw std::invalid_argument("index set has c_I = 0");
  } else {
    auto sets = admissible_index_sets(1);
    if (sets.empty()) throw std::runtime_error("no admissible index set");
    I_ = sets[0];
    c_ = c_I_beta(c.fan(), m_, b_, I_);
  }

  const auto& F = X.jacobian();
  std::vector<std::vector<CoxPolynomial>> M(I_.size(), std::vector<CoxPolynomial>(I_.size()));
  for (std::size_t r = 0; r < I_.size(); ++r)
    for (std::size_t col = 0; col < I_.size(); ++col)
      M[r][col] = F[I_[col]].euler_derivative(I_[r]).truncate(killed);
  CoxPolynomial det = polynomial_determinant(M, killed);
  Rat scale = Rat(1) / (Rat(c_) * Rat(c_));
  J_ = divide_by_monomial(det, X.h_sigma(face), "toric Jacobian") * scale;

  top_ = &X.r0(face, top_degree());
  if (top_->dim() != 1)
    throw std::runtime_error("top slice of R_0^sigma is not one-dimensional (degenerate polynomial)");
  RatVec jc = top_->coords(J_);
  jcoord_ = jc[0];
  if (jcoord_ == 0) throw std::runtime_error("toric Jacobian vanishes in the top slice");
}

std::vector<std::vector<int>> SigmaResidueContext::admissible_index_sets(std::size_t limit) const {
  const auto& c = X_->contraction();
  std::vector<int> cand;
  for (std::size_t k = 0; k < X_->n(); ++k)
    if (!c.ray_in(static_cast<int>(k), face_)) cand.push_back(static_cast<int>(k));
  std::vector<std::vector<int>> out;
  const int k = i_ + 1;
  if (static_cast<int>(cand.size()) < k) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> I;
    for (int t : idx) I.push_back(cand[t]);
    if (c_I_beta(c.fan(), m_, b_, I) != 0) {
      out.push_back(I);
      if (out.size() >= limit) break;
    }
  } while (next_combination(idx, static_cast<int>(cand.size())));
  return out;
}

ZVec SigmaResidueContext::top_degree() const { return X_->degree(i_ + 1, face_); }
ZVec SigmaResidueContext::residue_degree() const { return X_->degree(i_ + 1, face_, 2, 2); }
ZVec SigmaResidueContext::r1_degree(int r) const { return X_->degree(r + 1, face_); }

Rat SigmaResidueContext::top_coefficient(const CoxPolynomial& P) const {
  CoxPolynomial t = P.truncate(X_->killed(face_));
  if (t.is_zero()) return 0;
  return top_->coords(t)[0] / jcoord_;
}

Rat SigmaResidueContext::res(const CoxPolynomial& g) const {
  CoxPolynomial t = g.truncate(X_->killed(face_));
  if (t.is_zero()) return 0;
  if (!X_->ring().chow().equal(t.degree_rep(), residue_degree())) return 0;
  return top_coefficient(t.times_monomial(X_->h_sigma(face_)));
}

std::vector<int> SigmaResidueContext::admissible_s() const {
  std::vector<int> out;
  if (m_.rows() == 0) return out;
  const auto& c = X_->contraction();
  for (std::size_t k = 0; k < X_->n(); ++k)
    if (!c.ray_in(static_cast<int>(k), face_) && pairing(m_, 0, c.fan().ray(k)) != 0)
      out.push_back(static_cast<int>(k));
  return out;
}

CoxPolynomial SigmaResidueContext::p_sigma(const CoxPolynomial& C, std::optional<int> s) const {
  if (i_ != 1) throw std::invalid_argument("p_sigma needs dim sigma = i - 1");
  const auto killed = X_->killed(face_);
  const auto adm = admissible_s();
  int sv = s ? *s : (adm.empty() ? -1 : adm[0]);
  if (std::find(adm.begin(), adm.end(), sv) == adm.end()) throw std::invalid_argument("index s is not admissible");

  CoxPolynomial Ct = C.truncate(killed);
  const std::size_t nv = X_->n();
  CoxPolynomial P = Ct.is_zero() ? CoxPolynomial(nv) : Ct.times_monomial(X_->h_sigma(face_)) - J_ * res(Ct);
  P = P.truncate(killed);
  if (P.is_zero()) return CoxPolynomial(nv);

  const auto& c = X_->contraction();
  CoxPolynomial fbar = X_->f().truncate(killed);
  CoxPolynomial gs = X_->jacobian()[sv].truncate(killed) * (Rat(1) / Rat(static_cast<long>(pairing(m_, 0, c.fan().ray(sv)))));
  ZVec delta = X_->degree(1, face_);
  GradedSlice target = monomial_slice(X_->ring(), top_degree(), killed);
  auto monos = X_->ring().monomials(delta, killed);
  SpanBasis span(target.monomials.size());
  std::vector<std::pair<int, std::size_t>> cols;  // (0 = f, 1 = g_s), monomial index
  for (int kind = 0; kind < 2; ++kind)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const CoxPolynomial& base = kind == 0 ? fbar : gs;
      if (span.insert(target.vectorize(base.times_monomial(monos[j])))) cols.emplace_back(kind, j);
    }
  auto x = span.coords(target.vectorize(P));
  if (!x) throw std::runtime_error("p_sigma: linear system is inconsistent");
  CoxPolynomial out(nv);
  for (std::size_t t = 0; t < cols.size(); ++t)
    if (cols[t].first == 1 && (*x)[t] != 0) out.add_term(monos[cols[t].second], (*x)[t]);
  return out;
}

CoxPolynomial mu_inverse(const Hypersurface& X, const CoxPolynomial& h) {
  if (!X.ring().chow().equal(X.beta(), X.beta0())) throw std::invalid_argument("mu needs the anticanonical degree");
  const int d = X.d();
  const auto& c = X.contraction();
  const int zero = c.zero_cone();
  ZVec top(X.n()), below(X.n());
  for (std::size_t k = 0; k < X.n(); ++k) {
    top[k] = d * X.beta()[k];
    below[k] = (d - 1) * X.beta()[k];
  }
  const GradedSlice& R0 = X.r0(zero, top);
  if (h.is_zero()) return CoxPolynomial(X.n());
  auto monos = X.ring().monomials(below, X.killed(zero));
  Exponent px = X.h_sigma(zero);
  SpanBasis span(R0.monomials.size());
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    if (span.insert(R0.reduce(CoxPolynomial::monomial(monos[j]).times_monomial(px)))) used.push_back(j);
    if (span.size() == R0.dim()) break;
  }
  auto x = span.coords(R0.reduce(h));
  if (!x) throw std::runtime_error("mu_inverse: no preimage (degenerate polynomial)");
  CoxPolynomial g(X.n());
  for (std::size_t t = 0; t < used.size(); ++t) g.add_term(monos[used[t]], (*x)[t]);
  return g;
}

std::vector<int> ordered_cone_rays(const SemiampleContraction& c, int face) {
  if (c.cone_dim(face) != 2) throw InvalidInput("ray order needs a two-dimensional cone");
  const Cone& gens = c.target_cone(face);
  const auto& tf = c.target_fan();
  const std::size_t kap = static_cast<std::size_t>(c.kappa());
  RatMatrix B(kap, 2);
  for (std::size_t j = 0; j < kap; ++j) {
    B(j, 0) = Rat(static_cast<long>(tf.ray(gens[0])[j]));
    B(j, 1) = Rat(static_cast<long>(tf.ray(gens[1])[j]));
  }
  std::vector<std::pair<Rat, int>> keyed;
  for (std::size_t k = 0; k < c.fan().nrays(); ++k) {
    if (!c.ray_in(static_cast<int>(k), face)) continue;
    ZVec v = c.project(c.fan().ray(k));
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
    RatVec rv(kap);
    for (std::size_t j = 0; j < kap; ++j) rv[j] = Rat(static_cast<long>(v[j]));
    auto ab = solve_linear(B, rv);
    if (!ab) throw std::logic_error("ray outside its target cone");
    keyed.emplace_back((*ab)[1] / ((*ab)[0] + (*ab)[1]), static_cast<int>(k));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& [t, k] : keyed) out.push_back(k);
  return out;
}

CorrectionPolynomials correction_polynomials(const Hypersurface& X, int face) {
  const auto& c = X.contraction();
  if (c.cone_dim(face) != 2) throw InvalidInput("correction polynomials need a two-dimensional cone");
  CorrectionPolynomials out;
  out.ray_order = ordered_cone_rays(c, face);
  if (out.ray_order.size() < 2) throw InvalidInput("cone has fewer than two rays");

  const auto killed = X.killed(face);
  const auto& fan = c.fan();
  for (int idx : fan.cones_of_dim(2)) {
    const Cone& cone = fan.cones()[idx];
    if (std::all_of(cone.begin(), cone.end(), [&](int k) { return c.ray_in(k, face); }) &&
        cone_multiplicity(fan, cone) != 1)
      throw InvalidInput("a two-cone inside sigma has multiplicity > 1");
  }

  const int l0 = out.ray_order.front(), l1 = out.ray_order.back();
  CoxPolynomial num = X.jacobian()[l0] * X.jacobian()[l1];
  num = num.times_monomial(X.h_sigma(face));
  Exponent den(X.n(), 0);
  for (int k : killed) den[k] = 1;
  Int mult = cone_multiplicity(c.target_fan(), c.target_cone(face));
  out.G = divide_by_monomial(num, den, "G^sigma") * (Rat(1) / Rat(mult));

  CoxPolynomial H(X.n());
  for (const auto& [e, a] : X.f().terms())
    if (std::all_of(killed.begin(), killed.end(), [&](int k) { return e[k] == 1; })) H.add_term(e, a);
  out.H = divide_by_monomial(H, den, "H^sigma");
  return out;
}

ResidueScalar c_p_sigma(int p, int i_sigma) {
  if (p < 0 || p > i_sigma - 1) throw std::invalid_argument("c_p needs 0 <= p <= i(sigma) - 1");
  auto fact = [](int n) {
    Int r = 1;
    for (int t = 2; t <= n; ++t) r *= t;
    return r;
  };
  int e = (i_sigma - 1) * (i_sigma + 2 * p + 2) / 2;
  Rat q = Rat(e % 2 ? 1 : -1) / Rat(fact(p) * fact(i_sigma - p - 1));
  return ResidueScalar(q, i_sigma - 1);
}

}  // namespace th

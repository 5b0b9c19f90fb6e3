#include "torichodge/toric_cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace th {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// All ways of writing k as an ordered sum of `parts` positive integers.
void compositions(int k, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (k == 0) out.push_back(cur);
    return;
  }
  for (int x = 1; x <= k - (parts - 1); ++x) {
    cur.push_back(x);
    compositions(k - x, parts - 1, cur, out);
    cur.pop_back();
  }
}

CoxPolynomial power(const ToricCohomology& H, const CoxPolynomial& x, int deg_x, int e) {
  CoxPolynomial out = CoxPolynomial::constant(H.nvars(), 1);
  for (int t = 0; t < e; ++t) out = H.normal_form(out * x, (t + 1) * deg_x);
  return out;
}

}  // namespace

SparseVec ToricCohomologySlice::vectorize(const CoxPolynomial& p) const {
  SparseVec v;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != k) throw std::invalid_argument("class has the wrong cohomological degree");
    auto it = index.find(e);
    if (it != index.end()) v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

RatVec ToricCohomologySlice::coords(const CoxPolynomial& p) const {
  SparseVec r = relations.reduce(vectorize(p));
  RatVec out(basis.size());
  std::size_t j = 0;
  for (const auto& [c, x] : r) {
    while (j < basis.size() && basis[j] < c) ++j;
    out[j] = x;
  }
  return out;
}

CoxPolynomial ToricCohomologySlice::lift(const RatVec& c) const {
  CoxPolynomial out(monomials.empty() ? 0 : monomials[0].size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.add_term(monomials[basis[i]], c[i]);
  return out;
}

ToricCohomology::ToricCohomology(const Fan& fan) : fan_(fan) {
  if (!fan_.simplicial() || !fan_.complete()) throw InvalidInput("toric cohomology needs a complete simplicial fan");
}

std::unique_ptr<ToricCohomologySlice> ToricCohomology::build(int k) const {
  auto s = std::make_unique<ToricCohomologySlice>();
  s->k = k;
  const std::size_t n = nvars();
  if (k == 0) {
    s->monomials.push_back(Exponent(n, 0));
  } else {
    for (const Cone& c : fan_.cones()) {
      if (c.empty() || static_cast<int>(c.size()) > k) continue;
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(k, static_cast<int>(c.size()), cur, comps);
      for (const auto& parts : comps) {
        Exponent e(n, 0);
        for (std::size_t t = 0; t < c.size(); ++t) e[c[t]] = parts[t];
        s->monomials.push_back(e);
      }
    }
  }
  std::sort(s->monomials.begin(), s->monomials.end(), std::greater<>());
  for (std::size_t i = 0; i < s->monomials.size(); ++i) s->index[s->monomials[i]] = static_cast<std::uint32_t>(i);
  s->relations = Echelon(s->monomials.size());
  if (k > 0) {
    const auto& prev = slice(k - 1);
    for (int j = 0; j < dim(); ++j) {
      CoxPolynomial L(n);
      for (std::size_t r = 0; r < n; ++r) {
        long long x = fan_.ray(static_cast<int>(r))[j];
        if (!x) continue;
        Exponent e(n, 0);
        e[r] = 1;
        L.add_term(e, Rat(static_cast<long>(x)));
      }
      for (const auto& mu : prev.monomials) {
        if (s->relations.rank() == s->monomials.size()) break;
        s->relations.insert(s->vectorize(L.times_monomial(mu)));
      }
    }
  }
  s->basis = s->relations.non_pivots();
  return s;
}

const ToricCohomologySlice& ToricCohomology::slice(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = slices_.find(k);
    if (it != slices_.end()) return *it->second;
  }
  if (k < 0) throw std::invalid_argument("negative cohomological degree");
  auto s = build(k);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = slices_.emplace(k, std::move(s));
  return *it->second;
}

std::size_t ToricCohomology::total_dim() const {
  std::size_t t = 0;
  for (int k = 0; k <= dim(); ++k) t += slice(k).dim();
  return t;
}

CoxPolynomial ToricCohomology::divisor(const ZVec& a) const {
  CoxPolynomial out(nvars());
  for (std::size_t r = 0; r < nvars(); ++r) {
    if (!a[r]) continue;
    Exponent e(nvars(), 0);
    e[r] = 1;
    out.add_term(e, Rat(static_cast<long>(a[r])));
  }
  return out;
}

CoxPolynomial ToricCohomology::cone_class(const Cone& c) const {
  Exponent e(nvars(), 0);
  for (int r : c) e[r] = 1;
  return CoxPolynomial::monomial(e);
}

CoxPolynomial ToricCohomology::normal_form(const CoxPolynomial& p, int k) const {
  if (k < 0 || k > dim()) return CoxPolynomial(nvars());
  const auto& s = slice(k);
  return s.lift(s.coords(p));
}

Rat ToricCohomology::integrate(const CoxPolynomial& p) const {
  const int d = dim();
  const auto& top = slice(d);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!calibrated_) {
      const Cone& sigma = fan_.max_cones().front();
      Exponent e(nvars(), 0);
      for (int r : sigma) e[r] = 1;
      RatVec c = top.coords(CoxPolynomial::monomial(e));
      if (top.dim() != 1 || c[0] == 0) throw std::logic_error("top cohomology is not one-dimensional");
      top_scale_ = Rat(1) / (Rat(cone_multiplicity(fan_, sigma)) * c[0]);
      calibrated_ = true;
    }
  }
  CoxPolynomial t(nvars());
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) == d) t.add_term(e, c);
  if (t.is_zero()) return 0;
  return top.coords(t)[0] * top_scale_;
}

PairedQuotient::PairedQuotient(const ToricCohomology& H, std::vector<CoxPolynomial> span,
                               std::vector<CoxPolynomial> partners, const CoxPolynomial& weight)
    : H_(&H), partners_(std::move(partners)), weight_(weight), span_(partners_.size()) {
  for (auto& u : span)
    if (span_.insert(sparse_from_dense(pairing(u)))) basis_.push_back(std::move(u));
}

RatVec PairedQuotient::pairing(const CoxPolynomial& u) const {
  RatVec out(partners_.size());
  if (u.is_zero()) return out;
  CoxPolynomial uw = u * weight_;
  for (std::size_t j = 0; j < partners_.size(); ++j) out[j] = H_->integrate(uw * partners_[j]);
  return out;
}

std::optional<RatVec> PairedQuotient::coords(const CoxPolynomial& u) const {
  if (basis_.empty()) {
    auto v = pairing(u);
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return RatVec{};
    return std::nullopt;
  }
  return span_.coords(sparse_from_dense(pairing(u)));
}

std::vector<CoxPolynomial> u_sigma_span(const ToricCohomology& H, const SemiampleContraction& c, int face, int s) {
  std::vector<CoxPolynomial> out;
  if (s < 0 || s > H.dim()) return out;
  const auto& target = H.slice(s);
  SpanBasis seen(target.monomials.size());
  for (const Cone& gamma : H.fan().cones()) {
    const int g = static_cast<int>(gamma.size());
    if (g > s || c.smallest_face(gamma) != face) continue;
    CoxPolynomial dg = H.cone_class(gamma);
    const auto& rest = H.slice(s - g);
    for (std::size_t b = 0; b < rest.dim(); ++b) {
      CoxPolynomial u = H.normal_form(dg * rest.basis_element(b), s);
      if (u.is_zero()) continue;
      if (seen.insert(sparse_from_dense(target.coords(u)))) out.push_back(std::move(u));
    }
  }
  return out;
}

PairedQuotient a1_slice(const ToricCohomology& H, const ZVec& divisor, int k) {
  const int d = H.dim();
  CoxPolynomial X = H.divisor(divisor);
  if (k < 0 || k > d - 1) return PairedQuotient(H, {}, {}, X);
  std::vector<CoxPolynomial> span, partners;
  const auto& sk = H.slice(k);
  for (std::size_t b = 0; b < sk.dim(); ++b) span.push_back(sk.basis_element(b));
  const auto& sp = H.slice(d - 1 - k);
  for (std::size_t b = 0; b < sp.dim(); ++b) partners.push_back(sp.basis_element(b));
  return PairedQuotient(H, std::move(span), std::move(partners), X);
}

PairedQuotient a1_sigma_slice(const ToricCohomology& H, const SemiampleContraction& c, int face, int s) {
  const int d = H.dim();
  const int i = c.i_sigma(face);
  CoxPolynomial W = power(H, H.divisor(c.divisor()), 1, i);
  if (s < 0 || s > d - i) return PairedQuotient(H, {}, {}, W);
  return PairedQuotient(H, u_sigma_span(H, c, face, s), u_sigma_span(H, c, face, d - i - s), W);
}

Rat intersection_number(const ToricCohomology& H, const ZVec& divisor, int k, const Cone& tau) {
  if (static_cast<int>(tau.size()) != H.dim() - k) throw std::invalid_argument("cone has the wrong dimension");
  CoxPolynomial Dk = power(H, H.divisor(divisor), 1, k);
  return H.integrate(Dk * H.cone_class(tau)) * Rat(cone_multiplicity(H.fan(), tau));
}

bool intersection_expected_positive(const SemiampleContraction& c, int k, const Cone& tau) {
  return c.cone_dim(c.smallest_face(tau)) <= c.kappa() - k;
}

}  // namespace th

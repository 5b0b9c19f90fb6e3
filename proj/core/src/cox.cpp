#include "torichodge/cox.hpp"

#include "torichodge/groebner.hpp"

#include <algorithm>
#include <random>

namespace th {

ChowGroup::ChowGroup(const Fan& fan) : n_(fan.nrays()) {
  IntMatrix R(n_, fan.dim());
  for (std::size_t i = 0; i < n_; ++i)
    for (int j = 0; j < fan.dim(); ++j) R(i, j) = static_cast<long>(fan.ray(i)[j]);
  SmithForm sf = smith_normal_form(R);
  U_ = sf.U;
  r_ = 0;
  while (r_ < std::min<std::size_t>(n_, fan.dim()) && sf.S(r_, r_) != 0) {
    diag_.push_back(sf.S(r_, r_));
    ++r_;
  }
}

IntVec ChowGroup::canonical(const ZVec& rep) const {
  IntVec out;
  for (std::size_t i = 0; i < n_; ++i) {
    Int y = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (rep[j]) y += U_(i, j) * Int(static_cast<long>(rep[j]));
    if (i < r_) {
      if (diag_[i] == 1) continue;
      Int m;
      mpz_fdiv_r(m.get_mpz_t(), y.get_mpz_t(), diag_[i].get_mpz_t());
      out.push_back(m);
    } else {
      out.push_back(y);
    }
  }
  return out;
}

std::vector<Int> ChowGroup::torsion() const {
  std::vector<Int> t;
  for (const auto& s : diag_)
    if (s > 1) t.push_back(s);
  return t;
}

CoxPolynomial CoxPolynomial::monomial(const Exponent& e, const Rat& c) {
  CoxPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

CoxPolynomial CoxPolynomial::constant(std::size_t nvars, const Rat& c) {
  return monomial(Exponent(nvars, 0), c);
}

void CoxPolynomial::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  if (n_ == 0) n_ = e.size();
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat CoxPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

CoxPolynomial CoxPolynomial::operator+(const CoxPolynomial& o) const {
  CoxPolynomial r = *this;
  r += o;
  return r;
}

CoxPolynomial& CoxPolynomial::operator+=(const CoxPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoxPolynomial CoxPolynomial::operator-(const CoxPolynomial& o) const { return *this + o * Rat(-1); }

CoxPolynomial CoxPolynomial::operator*(const Rat& c) const {
  CoxPolynomial r(n_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

CoxPolynomial CoxPolynomial::operator*(const CoxPolynomial& o) const {
  CoxPolynomial r(std::max(n_, o.n_));
  Exponent e;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      e.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, x * y);
    }
  return r;
}

CoxPolynomial CoxPolynomial::euler_derivative(int k) const {
  CoxPolynomial r(n_);
  for (const auto& [e, c] : terms_)
    if (e[k]) r.terms_.emplace(e, c * e[k]);
  return r;
}

CoxPolynomial CoxPolynomial::derivative(int k) const {
  CoxPolynomial r(n_);
  for (const auto& [e, c] : terms_)
    if (e[k]) {
      Exponent f = e;
      --f[k];
      r.terms_.emplace(f, c * e[k]);
    }
  return r;
}

CoxPolynomial CoxPolynomial::truncate(const std::vector<int>& killed) const {
  if (killed.empty()) return *this;
  CoxPolynomial r(n_);
  for (const auto& [e, c] : terms_)
    if (std::none_of(killed.begin(), killed.end(), [&](int k) { return e[k] > 0; })) r.terms_.emplace(e, c);
  return r;
}

CoxPolynomial CoxPolynomial::times_monomial(const Exponent& m) const {
  CoxPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

ZVec CoxPolynomial::degree_rep() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
  const Exponent& e = terms_.begin()->first;
  return ZVec(e.begin(), e.end());
}

CoxRing::CoxRing(const Fan& fan) : fan_(fan), chow_(fan) {}

std::vector<Exponent> CoxRing::monomials(const ZVec& degree) const {
  IntVec key = chow_.canonical(degree);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  std::vector<Exponent> out;
  LatticePolytope P = LatticePolytope::from_inequalities(fan_.dim(), fan_.rays(), degree);
  for (const auto& m : P.lattice_points()) out.push_back(monomial_of_point(fan_, degree, m));
  std::sort(out.begin(), out.end(), std::greater<>());
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(key, out);
  return out;
}

std::vector<Exponent> CoxRing::monomials(const ZVec& degree, const std::vector<int>& killed) const {
  std::vector<Exponent> all = monomials(degree);
  if (killed.empty()) return all;
  std::vector<Exponent> out;
  for (auto& e : all)
    if (std::none_of(killed.begin(), killed.end(), [&](int k) { return e[k] > 0; })) out.push_back(std::move(e));
  return out;
}

Exponent monomial_of_point(const Fan& fan, const ZVec& a, const ZVec& m) {
  Exponent e(fan.nrays());
  for (std::size_t k = 0; k < fan.nrays(); ++k) e[k] = static_cast<int>(a[k] + dot(m, fan.ray(k)));
  return e;
}

SparseVec GradedSlice::vectorize(const CoxPolynomial& p) const {
  SparseVec v;
  for (const auto& [e, c] : p.terms()) {
    if (std::any_of(killed.begin(), killed.end(), [&](int k) { return e[k] > 0; })) continue;
    auto it = index.find(e);
    if (it == index.end()) throw std::invalid_argument("polynomial has a term outside the slice degree");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

RatVec GradedSlice::coords_of_vector(const SparseVec& v) const {
  SparseVec r = subspace.reduce(v);
  RatVec out(quotient_basis.size());
  std::size_t j = 0;
  for (const auto& [c, x] : r) {
    while (j < quotient_basis.size() && quotient_basis[j] < c) ++j;
    out[j] = x;
  }
  return out;
}

RatVec GradedSlice::coords(const CoxPolynomial& p) const { return coords_of_vector(vectorize(p)); }

CoxPolynomial GradedSlice::basis_element(std::size_t i) const {
  return CoxPolynomial::monomial(monomials[quotient_basis[i]]);
}

CoxPolynomial GradedSlice::lift(const RatVec& c) const {
  CoxPolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.add_term(monomials[quotient_basis[i]], c[i]);
  return p;
}

CoxPolynomial GradedSlice::polynomial(const SparseVec& v) const {
  CoxPolynomial p;
  for (const auto& [c, x] : v) p.add_term(monomials[c], x);
  return p;
}

GradedSlice monomial_slice(const CoxRing& ring, const ZVec& degree, const std::vector<int>& killed) {
  GradedSlice s;
  s.degree = degree;
  s.killed = killed;
  s.monomials = ring.monomials(degree, killed);
  for (std::size_t i = 0; i < s.monomials.size(); ++i) s.index.emplace(s.monomials[i], static_cast<std::uint32_t>(i));
  s.subspace = Echelon(s.monomials.size());
  return s;
}

namespace {

ZVec sub(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ZVec add(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

GradedSlice ideal_slice(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const ZVec& degree,
                        const std::vector<int>& killed) {
  GradedSlice s = monomial_slice(ring, degree, killed);
  if (s.monomials.empty()) return s;
  for (const auto& g : gens) {
    CoxPolynomial gt = g.truncate(killed);
    if (gt.is_zero()) continue;
    ZVec rest = sub(degree, g.degree_rep());
    for (const auto& m : ring.monomials(rest, killed)) {
      if (s.subspace.rank() == s.monomials.size()) break;
      s.subspace.insert(s.vectorize(gt.times_monomial(m)));
    }
  }
  s.quotient_basis = s.subspace.non_pivots();
  return s;
}

GradedSlice colon_slice(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const CoxPolynomial& h,
                        const ZVec& degree, const std::vector<int>& killed) {
  GradedSlice s = monomial_slice(ring, degree, killed);
  if (s.monomials.empty()) return s;
  CoxPolynomial ht = h.truncate(killed);
  if (ht.is_zero()) {
    for (std::size_t i = 0; i < s.monomials.size(); ++i) s.subspace.insert({{static_cast<std::uint32_t>(i), Rat(1)}});
    return s;
  }
  GradedSlice target = ideal_slice(ring, gens, add(degree, h.degree_rep()), killed);
  SpanBasis images(target.monomials.size());
  std::vector<std::size_t> source;  // basis index -> monomial index
  for (std::size_t j = 0; j < s.monomials.size(); ++j) {
    SparseVec img = target.reduce(ht.times_monomial(s.monomials[j]));
    if (images.insert(img)) {
      source.push_back(j);
      continue;
    }
    RatVec c = *images.coords(img);
    SparseVec k;
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c[b] != 0) k.emplace_back(static_cast<std::uint32_t>(source[b]), -c[b]);
    k.emplace_back(static_cast<std::uint32_t>(j), Rat(1));
    std::sort(k.begin(), k.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    s.subspace.insert(k);
  }
  s.quotient_basis = s.subspace.non_pivots();
  return s;
}

namespace {

constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 1000000007ULL};

void append_ideal_rows(const CoxRing& ring, const GradedSlice& s, const std::vector<CoxPolynomial>& gens,
                       std::vector<SparseVec>& rows) {
  for (const auto& g : gens) {
    CoxPolynomial gt = g.truncate(s.killed);
    if (gt.is_zero()) continue;
    for (const auto& m : ring.monomials(sub(s.degree, g.degree_rep()), s.killed))
      rows.push_back(s.vectorize(gt.times_monomial(m)));
  }
}

std::size_t max_rank(const std::vector<SparseVec>& rows, std::size_t ncols) {
  std::size_t best = 0;
  for (auto p : kPrimes) {
    bool bad = false;
    std::size_t r = modular_rank(rows, ncols, p, &bad);
    if (!bad) best = std::max(best, r);
  }
  return best;
}

}  // namespace

std::size_t ideal_quotient_dim(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const ZVec& degree,
                               const std::vector<int>& killed) {
  GradedSlice s = monomial_slice(ring, degree, killed);
  if (s.monomials.empty()) return 0;
  std::vector<SparseVec> rows;
  append_ideal_rows(ring, s, gens, rows);
  return s.monomials.size() - max_rank(rows, s.monomials.size());
}

std::size_t colon_quotient_dim(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const CoxPolynomial& h,
                               const ZVec& degree, const std::vector<int>& killed) {
  auto source = ring.monomials(degree, killed);
  CoxPolynomial ht = h.truncate(killed);
  if (source.empty() || ht.is_zero()) return 0;
  GradedSlice t = monomial_slice(ring, add(degree, h.degree_rep()), killed);
  std::vector<SparseVec> rows;
  append_ideal_rows(ring, t, gens, rows);
  std::size_t base = max_rank(rows, t.monomials.size());
  for (const auto& m : source) rows.push_back(t.vectorize(ht.times_monomial(m)));
  return max_rank(rows, t.monomials.size()) - base;
}

std::vector<CoxPolynomial> interreduce(const std::vector<CoxPolynomial>& gens) {
  std::map<Exponent, std::uint32_t> idx;
  std::vector<Exponent> monos;
  for (const auto& g : gens)
    for (const auto& [e, c] : g.terms())
      if (idx.emplace(e, 0).second) monos.push_back(e);
  std::sort(monos.begin(), monos.end(), std::greater<>());
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = static_cast<std::uint32_t>(i);
  Echelon ech(monos.size());
  for (const auto& g : gens) {
    SparseVec v;
    for (const auto& [e, c] : g.terms()) v.emplace_back(idx[e], c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ech.insert(v);
  }
  std::vector<CoxPolynomial> out;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    CoxPolynomial p;
    for (const auto& [c, x] : ech.row(r)) p.add_term(monos[c], x);
    out.push_back(std::move(p));
  }
  return out;
}

Hypersurface::Hypersurface(std::shared_ptr<const SemiampleContraction> c, CoxPolynomial f)
    : contraction_(std::move(c)), ring_(contraction_->fan()), f_(std::move(f)) {
  if (f_.is_zero()) throw InvalidInput("hypersurface polynomial is zero");
  for (const auto& [e, x] : f_.terms()) {
    if (e.size() != n()) throw InvalidInput("polynomial exponent has wrong length");
    if (!ring_.chow().equal(ZVec(e.begin(), e.end()), beta()))
      throw InvalidInput("polynomial term is not of the divisor degree");
  }
  for (std::size_t k = 0; k < n(); ++k) jac_.push_back(f_.euler_derivative(static_cast<int>(k)));
  jac_reduced_ = interreduce(jac_);
  weights_ = positive_grading(ring_.fan());
}

namespace {

// Slices larger than this go through a Groebner basis instead of a Macaulay matrix.
constexpr std::size_t kGroebnerThreshold = 1500;

}  // namespace

long long Hypersurface::weight(const ZVec& degree) const {
  long long w = 0;
  for (std::size_t k = 0; k < n(); ++k) w += weights_[k] * degree[k];
  return w;
}

std::shared_ptr<const ModularGroebner> Hypersurface::groebner(int face, long long max_weight) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gb_cache_.find(face);
    if (it != gb_cache_.end() && it->second->max_degree() >= max_weight) return it->second;
  }
  const int is = contraction_->i_sigma(face);
  long long bound = std::max({max_weight, weight(degree(is + 1, face)), weight(degree(is, face, 0, 0))});
  std::vector<CoxPolynomial> gens;
  const auto k = killed(face);
  for (const auto& g : jac_reduced_) {
    CoxPolynomial t = g.truncate(k);
    if (!t.is_zero()) gens.push_back(std::move(t));
  }
  auto gb = std::make_shared<const ModularGroebner>(gens, weights_, bound);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = gb_cache_[face];
  if (!slot || slot->max_degree() < gb->max_degree()) slot = gb;
  return slot;
}

ZVec Hypersurface::beta1(int face) const {
  ZVec b(n(), 0);
  for (std::size_t k = 0; k < n(); ++k)
    if (contraction_->ray_in(static_cast<int>(k), face)) b[k] = 1;
  return b;
}

ZVec Hypersurface::degree(int q, int face, int twist0, int twist1) const {
  ZVec b = beta(), b1 = beta1(face);
  ZVec out(n());
  for (std::size_t k = 0; k < n(); ++k) out[k] = q * b[k] - twist0 + twist1 * b1[k];
  return out;
}

std::vector<int> Hypersurface::killed(int face) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < n(); ++k)
    if (contraction_->ray_in(static_cast<int>(k), face)) out.push_back(static_cast<int>(k));
  return out;
}

Exponent Hypersurface::h_sigma(int face) const {
  Exponent e(n(), 0);
  for (std::size_t k = 0; k < n(); ++k)
    if (!contraction_->ray_in(static_cast<int>(k), face)) e[k] = 1;
  return e;
}

std::vector<CoxPolynomial> Hypersurface::jacobian_generators(int face) const {
  std::vector<CoxPolynomial> out = jac_;
  for (int k : killed(face)) {
    Exponent e(n(), 0);
    e[k] = 1;
    out.push_back(CoxPolynomial::monomial(e));
  }
  return out;
}

const GradedSlice& Hypersurface::r0(int face, const ZVec& deg) const {
  auto key = std::make_pair(face, ring_.chow().canonical(deg));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = r0_cache_.find(key);
    if (it != r0_cache_.end()) return *it->second;
  }
  auto s = std::make_unique<GradedSlice>(ideal_slice(ring_, jac_reduced_, deg, killed(face)));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = r0_cache_.emplace(key, std::move(s));
  return *it->second;
}

const GradedSlice& Hypersurface::r1(int face, const ZVec& deg) const {
  auto key = std::make_pair(face, ring_.chow().canonical(deg));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = r1_cache_.find(key);
    if (it != r1_cache_.end()) return *it->second;
  }
  CoxPolynomial h = CoxPolynomial::monomial(h_sigma(face));
  auto s = std::make_unique<GradedSlice>(colon_slice(ring_, jac_reduced_, h, deg, killed(face)));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = r1_cache_.emplace(key, std::move(s));
  return *it->second;
}

std::size_t Hypersurface::r0_dim(int face, const ZVec& deg) const {
  auto key = std::make_pair(face, ring_.chow().canonical(deg));
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = r0_cache_.find(key); it != r0_cache_.end()) return it->second->dim();
    if (auto it = r0_dim_cache_.find(key); it != r0_dim_cache_.end()) return it->second;
  }
  const auto k = killed(face);
  const auto monos = ring_.monomials(deg, k);
  std::size_t dim;
  if (monos.size() > kGroebnerThreshold && ModularGroebner::supported(n(), weight(deg), weights_))
    dim = groebner(face, weight(deg))->quotient_dim(monos);
  else
    dim = ideal_quotient_dim(ring_, jac_reduced_, deg, k);
  std::lock_guard<std::mutex> lock(mu_);
  r0_dim_cache_[key] = dim;
  return dim;
}

std::size_t Hypersurface::r1_dim(int face, const ZVec& deg) const {
  auto key = std::make_pair(face, ring_.chow().canonical(deg));
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = r1_cache_.find(key); it != r1_cache_.end()) return it->second->dim();
    if (auto it = r1_dim_cache_.find(key); it != r1_dim_cache_.end()) return it->second;
  }
  const Exponent he = h_sigma(face);
  CoxPolynomial h = CoxPolynomial::monomial(he);
  const auto k = killed(face);
  ZVec up = deg;
  for (std::size_t j = 0; j < n(); ++j) up[j] += he[j];
  std::size_t dim;
  if (ring_.monomials(up, k).size() > kGroebnerThreshold && ModularGroebner::supported(n(), weight(up), weights_))
    dim = groebner(face, weight(up))->multiplication_rank(ring_.monomials(deg, k), he);
  else
    dim = colon_quotient_dim(ring_, jac_reduced_, h, deg, k);
  std::lock_guard<std::mutex> lock(mu_);
  r1_dim_cache_[key] = dim;
  return dim;
}

bool Hypersurface::certificate() const {
  const auto& c = *contraction_;
  for (int face = 0; face < c.nfaces(); ++face) {
    int i_sigma = c.i_sigma(face);
    if (r0_dim(face, degree(i_sigma + 1, face)) != 1) return false;
  }
  return true;
}

CoxPolynomial generic_polynomial(std::shared_ptr<const SemiampleContraction> c, std::uint64_t seed, int attempts) {
  CoxRing ring(c->fan());
  auto monos = ring.monomials(c->divisor());
  if (monos.size() == 1 && std::all_of(monos[0].begin(), monos[0].end(), [](int x) { return x == 0; }))
    return CoxPolynomial::constant(ring.nvars(), 1);
  for (int t = 0; t < attempts; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    std::uniform_int_distribution<long> coef(1, 30);
    CoxPolynomial f(ring.nvars());
    for (const auto& e : monos) {
      long x = coef(rng);
      if (rng() & 1) x = -x;
      f.add_term(e, Rat(x));
    }
    if (nondegeneracy_certificate(c, f)) return f;
  }
  throw std::runtime_error("no certificate-passing polynomial found for the given seed");
}

CoxPolynomial support_polynomial(const SemiampleContraction& c, const std::vector<ZVec>& points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(1, 30);
  CoxPolynomial f(c.fan().nrays());
  for (const auto& m : points) {
    long x = coef(rng);
    if (rng() & 1) x = -x;
    f.add_term(monomial_of_point(c.fan(), c.divisor(), m), Rat(x));
  }
  return f;
}

CoxPolynomial vertex_polynomial(const SemiampleContraction& c) {
  CoxPolynomial f(c.fan().nrays());
  for (const auto& v : c.polytope().vertices_int()) f.add_term(monomial_of_point(c.fan(), c.divisor(), v), Rat(1));
  return f;
}

bool nondegeneracy_certificate(std::shared_ptr<const SemiampleContraction> c, const CoxPolynomial& f) {
  Hypersurface X(std::move(c), f);
  return X.certificate();
}

}  // namespace th

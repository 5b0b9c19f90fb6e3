#include "torichodge/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace th {

namespace {

using u64 = std::uint64_t;
constexpr u64 P = ModularGroebner::kPrime;

u64 mulmod(u64 a, u64 b) { return a * b % P; }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (a %= P; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

u64 inverse(u64 a) { return powmod(a, P - 2); }

u64 to_mod(const Rat& q) {
  Int num = q.get_num() % Int(static_cast<unsigned long>(P));
  if (num < 0) num += static_cast<unsigned long>(P);
  Int den = q.get_den() % Int(static_cast<unsigned long>(P));
  if (den == 0) throw std::runtime_error("coefficient denominator divisible by the working prime");
  return mulmod(num.get_ui(), inverse(den.get_ui()));
}

struct MonoHash {
  std::size_t operator()(const ModularGroebner::Mono& m) const {
    u64 h = 1469598103934665603ULL;
    for (auto b : m.e) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};

u64 mask_of(const ModularGroebner::Mono& m, std::size_t n) {
  u64 mask = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned e = m.e[k];
    if (e >= 1) mask |= 1ULL << (4 * k);
    if (e >= 2) mask |= 1ULL << (4 * k + 1);
    if (e >= 4) mask |= 1ULL << (4 * k + 2);
    if (e >= 8) mask |= 1ULL << (4 * k + 3);
  }
  return mask;
}

bool divides(const ModularGroebner::Mono& a, const ModularGroebner::Mono& b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a.e[k] > b.e[k]) return false;
  return true;
}

ModularGroebner::Mono lcm(const ModularGroebner::Mono& a, const ModularGroebner::Mono& b, std::size_t n,
                          const std::vector<long long>& w) {
  ModularGroebner::Mono m;
  long long deg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    m.e[k] = std::max(a.e[k], b.e[k]);
    deg += w[k] * m.e[k];
  }
  m.deg = static_cast<std::int32_t>(deg);
  return m;
}

ModularGroebner::Mono quotient(const ModularGroebner::Mono& a, const ModularGroebner::Mono& b, std::size_t n) {
  ModularGroebner::Mono m;
  for (std::size_t k = 0; k < n; ++k) m.e[k] = static_cast<std::uint8_t>(a.e[k] - b.e[k]);
  m.deg = a.deg - b.deg;
  return m;
}

ModularGroebner::Mono product(const ModularGroebner::Mono& a, const ModularGroebner::Mono& b, std::size_t n) {
  ModularGroebner::Mono m;
  for (std::size_t k = 0; k < n; ++k) m.e[k] = static_cast<std::uint8_t>(a.e[k] + b.e[k]);
  m.deg = a.deg + b.deg;
  return m;
}

bool disjoint(const ModularGroebner::Mono& a, const ModularGroebner::Mono& b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a.e[k] && b.e[k]) return false;
  return true;
}

std::size_t rank_mod(std::vector<std::vector<std::pair<std::size_t, u64>>> rows, std::size_t ncols) {
  std::vector<std::vector<u64>> dense;
  for (auto& r : rows) {
    std::vector<u64> v(ncols, 0);
    for (auto [c, x] : r) v[c] = x;
    dense.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < dense.size(); ++col) {
    std::size_t piv = rank;
    while (piv < dense.size() && dense[piv][col] == 0) ++piv;
    if (piv == dense.size()) continue;
    std::swap(dense[piv], dense[rank]);
    const u64 inv = inverse(dense[rank][col]);
    for (auto& x : dense[rank]) x = mulmod(x, inv);
    for (std::size_t r = rank + 1; r < dense.size(); ++r) {
      const u64 f = dense[r][col];
      if (!f) continue;
      for (std::size_t c = col; c < ncols; ++c)
        if (dense[rank][c]) dense[r][c] = (dense[r][c] + P - mulmod(f, dense[rank][c])) % P;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool ModularGroebner::supported(std::size_t nvars, long long max_degree, const std::vector<long long>& weights) {
  if (nvars > kMaxVars || weights.size() != nvars) return false;
  for (long long w : weights)
    if (w <= 0 || max_degree / w >= 255) return false;
  return true;
}

ModularGroebner::Mono ModularGroebner::make(const Exponent& e) const {
  Mono m;
  long long deg = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    if (e[k] < 0 || e[k] > 255) throw std::invalid_argument("exponent out of range for the modular Groebner basis");
    m.e[k] = static_cast<std::uint8_t>(e[k]);
    deg += w_[k] * e[k];
  }
  m.deg = static_cast<std::int32_t>(deg);
  return m;
}

bool ModularGroebner::greater(const Mono& a, const Mono& b) const {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (std::size_t k = n_; k-- > 0;)
    if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
  return false;
}

ModularGroebner::ModularGroebner(const std::vector<CoxPolynomial>& gens, std::vector<long long> weights,
                                 long long max_degree)
    : n_(weights.size()), w_(std::move(weights)), max_degree_(max_degree) {
  if (!supported(n_, max_degree, w_)) throw std::invalid_argument("modular Groebner basis: unsupported size");

  std::vector<Poly> input;
  for (const auto& g : gens) {
    Poly p;
    for (const auto& [e, c] : g.terms()) {
      u64 x = to_mod(c);
      if (x) p.push_back({make(e), static_cast<std::uint32_t>(x)});
    }
    if (p.empty()) continue;
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return greater(a.m, b.m); });
    if (p.front().m.deg > max_degree_) continue;
    input.push_back(std::move(p));
  }
  std::sort(input.begin(), input.end(), [](const Poly& a, const Poly& b) { return a.front().m.deg < b.front().m.deg; });

  struct Pair {
    Mono lcm;
    int i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (greater(b.lcm, a.lcm)) return true;
    if (greater(a.lcm, b.lcm)) return false;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto update = [&](int h) {
    const Mono& lh = leads_[h];
    std::vector<Pair> C, D;
    for (int g = 0; g < h; ++g) {
      Mono l = lcm(lh, leads_[g], n_, w_);
      if (l.deg <= max_degree_) C.push_back({l, g, h});
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = disjoint(lh, leads_[C[a].i], n_);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides(C[b].lcm, C[a].lcm, n_)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (divides(D[b].lcm, C[a].lcm, n_)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (divides(lh, p.lcm, n_) && !(lcm(leads_[p.i], lh, n_, w_) == p.lcm) &&
          !(lcm(lh, leads_[p.j], n_, w_) == p.lcm))
        it = pairs.erase(it);
      else
        ++it;
    }
    for (const auto& p : D)
      if (!disjoint(lh, leads_[p.i], n_)) pairs.insert(p);
  };

  auto insert = [&](Poly r) {
    if (r.empty()) return;
    add(std::move(r));
    update(static_cast<int>(basis_.size()) - 1);
  };

  std::size_t next_input = 0;
  while (true) {
    long long gdeg = next_input < input.size() ? input[next_input].front().m.deg : max_degree_ + 1;
    long long pdeg = pairs.empty() ? max_degree_ + 1 : pairs.begin()->lcm.deg;
    long long deg = std::min(gdeg, pdeg);
    if (deg > max_degree_) break;
    if (gdeg == deg) {
      insert(normal_form(input[next_input++]));
      continue;
    }
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    Poly s;
    const Mono qi = quotient(p.lcm, leads_[p.i], n_), qj = quotient(p.lcm, leads_[p.j], n_);
    std::unordered_map<Mono, u64, MonoHash> acc;
    for (std::size_t t = 1; t < basis_[p.i].size(); ++t) {
      auto& x = acc[product(basis_[p.i][t].m, qi, n_)];
      x = (x + basis_[p.i][t].c) % P;
    }
    for (std::size_t t = 1; t < basis_[p.j].size(); ++t) {
      auto& x = acc[product(basis_[p.j][t].m, qj, n_)];
      x = (x + P - basis_[p.j][t].c) % P;
    }
    for (const auto& [m, c] : acc)
      if (c) s.push_back({m, static_cast<std::uint32_t>(c)});
    std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return greater(a.m, b.m); });
    insert(normal_form(std::move(s)));
  }
}

void ModularGroebner::add(Poly g) {
  const u64 inv = inverse(g.front().c);
  for (auto& t : g) t.c = static_cast<std::uint32_t>(mulmod(t.c, inv));
  leads_.push_back(g.front().m);
  masks_.push_back(mask_of(g.front().m, n_));
  basis_.push_back(std::move(g));
}

ModularGroebner::Poly ModularGroebner::normal_form(Poly p) const {
  if (p.empty()) return p;
  auto cmp = [&](const Mono& a, const Mono& b) { return greater(b, a); };
  std::priority_queue<Mono, std::vector<Mono>, decltype(cmp)> heap(cmp);
  std::unordered_map<Mono, u64, MonoHash> acc;
  for (const auto& t : p) {
    auto [it, fresh] = acc.emplace(t.m, t.c);
    if (fresh)
      heap.push(t.m);
    else
      it->second = (it->second + t.c) % P;
  }
  Poly out;
  while (!heap.empty()) {
    Mono m = heap.top();
    heap.pop();
    auto it = acc.find(m);
    const u64 c = it->second;
    acc.erase(it);
    if (!c) continue;
    const u64 mk = mask_of(m, n_);
    int red = -1;
    for (std::size_t k = 0; k < leads_.size(); ++k)
      if (!(masks_[k] & ~mk) && divides(leads_[k], m, n_)) {
        if (red < 0 || basis_[k].size() < basis_[red].size()) red = static_cast<int>(k);
      }
    if (red < 0) {
      out.push_back({m, static_cast<std::uint32_t>(c)});
      continue;
    }
    const Mono q = quotient(m, leads_[red], n_);
    for (std::size_t t = 1; t < basis_[red].size(); ++t) {
      const Mono mm = product(basis_[red][t].m, q, n_);
      const u64 sub = mulmod(c, basis_[red][t].c);
      auto [jt, fresh] = acc.emplace(mm, (P - sub) % P);
      if (fresh)
        heap.push(mm);
      else
        jt->second = (jt->second + P - sub) % P;
    }
  }
  return out;
}

bool ModularGroebner::is_standard(const Exponent& e) const {
  const Mono m = make(e);
  const u64 mk = mask_of(m, n_);
  for (std::size_t k = 0; k < leads_.size(); ++k)
    if (!(masks_[k] & ~mk) && divides(leads_[k], m, n_)) return false;
  return true;
}

std::size_t ModularGroebner::quotient_dim(const std::vector<Exponent>& monomials) const {
  std::size_t n = 0;
  for (const auto& e : monomials) {
    if (make(e).deg > max_degree_) throw std::invalid_argument("degree above the Groebner truncation");
    if (is_standard(e)) ++n;
  }
  return n;
}

std::size_t ModularGroebner::multiplication_rank(const std::vector<Exponent>& source, const Exponent& h) const {
  const Mono hm = make(h);
  std::unordered_map<Mono, std::size_t, MonoHash> col;
  std::vector<std::vector<std::pair<std::size_t, u64>>> rows;
  for (const auto& e : source) {
    if (!is_standard(e)) continue;
    Mono m = product(make(e), hm, n_);
    if (m.deg > max_degree_) throw std::invalid_argument("degree above the Groebner truncation");
    Poly r = normal_form({{m, 1u}});
    std::vector<std::pair<std::size_t, u64>> row;
    for (const auto& t : r) {
      auto [it, fresh] = col.emplace(t.m, col.size());
      row.emplace_back(it->second, t.c);
    }
    rows.push_back(std::move(row));
  }
  return rank_mod(std::move(rows), col.size());
}

std::vector<long long> positive_grading(const Fan& fan) {
  const int d = fan.dim();
  const std::size_t n = fan.nrays();
  RatVec w(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k) {
    RatVec x(d);
    for (int j = 0; j < d; ++j) x[j] = Rat(static_cast<long>(-fan.ray(static_cast<int>(k))[j]));
    int cone = fan.locate(x);
    if (cone < 0) throw InvalidInput("positive grading needs a complete fan");
    const Cone& c = fan.max_cones()[cone];
    RatMatrix A(d, c.size());
    for (std::size_t t = 0; t < c.size(); ++t)
      for (int j = 0; j < d; ++j) A(j, t) = Rat(static_cast<long>(fan.ray(c[t])[j]));
    auto coef = solve_linear(A, x);
    if (!coef) throw std::logic_error("located cone does not contain the point");
    w[k] += 1;
    for (std::size_t t = 0; t < c.size(); ++t) w[c[t]] += (*coef)[t];
  }
  Int den = 1;
  for (const auto& q : w) den = lcm(den, Int(q.get_den()));
  std::vector<long long> out(n);
  Int g = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Int v = Int(w[k] * Rat(den));
    g = gcd(g, v);
  }
  for (std::size_t k = 0; k < n; ++k) out[k] = Int(Int(w[k] * Rat(den)) / g).get_si();
  return out;
}

}  // namespace th

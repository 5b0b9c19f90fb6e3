#include "acceptance.hpp"

#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "torichodge/mirror.hpp"
#include "torichodge/products.hpp"

namespace th::acceptance {

namespace {

using json = nlohmann::json;

std::string str(const Rat& x) { return x.get_str(); }

std::shared_ptr<const SemiampleContraction> projective(int d, long long deg) {
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

CoxPolynomial fermat(int nvars, int deg) {
  CoxPolynomial f(nvars);
  for (int k = 0; k < nvars; ++k) {
    Exponent e(nvars, 0);
    e[k] = deg;
    f.add_term(e, 1);
  }
  return f;
}

Fan f2_fan() { return Fan(2, {{1, 0}, {0, 1}, {-1, -2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// conv(e_1, ..., e_d, -(w_1, ..., w_d)): the polar dual of the Newton polytope of a
// degree-(1 + sum w) hypersurface in P(1, w_1, ..., w_d).
LatticePolytope weighted_nabla(const std::vector<long long>& w) {
  const int d = static_cast<int>(w.size());
  std::vector<ZVec> pts;
  for (int k = 0; k < d; ++k) {
    ZVec e(d, 0);
    e[k] = 1;
    pts.push_back(e);
  }
  ZVec last;
  for (long long x : w) last.push_back(-x);
  pts.push_back(last);
  return LatticePolytope::from_points(d, pts);
}

const std::map<std::string, std::vector<long long>>& mirror_weights() {
  static const std::map<std::string, std::vector<long long>> w{
      {"mirror_quintic", {1, 1, 1, 1}}, {"mirror_p11114", {1, 1, 1, 4}}, {"mirror_p11133", {1, 1, 3, 3}}};
  return w;
}

MirrorPair p11133_pair(std::uint64_t seed) {
  MirrorOptions opt;
  opt.rational_edges = true;
  return build_mirror_pair(polar_dual(weighted_nabla({1, 1, 3, 3})), seed, opt);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Fans for the random jobs.
std::vector<std::pair<std::string, Fan>> fan_pool() {
  std::vector<std::pair<std::string, Fan>> pool;
  pool.emplace_back("P2", Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}));
  pool.emplace_back("P1xP1", Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}));
  for (long long a = 1; a <= 3; ++a)
    pool.emplace_back("F" + std::to_string(a), Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  pool.emplace_back("dP6", Fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
  pool.emplace_back("P3", projective(3, 1)->fan());
  pool.emplace_back("P1xP2", Fan(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}},
                                 {{0, 2, 3}, {0, 3, 4}, {0, 2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 4}}));
  {
    std::vector<ZVec> rays{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<Cone> cones;
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b)
        for (int c = 4; c < 6; ++c) cones.push_back({a, b, c});
    pool.emplace_back("P1xP1xP1", Fan(3, rays, cones));
  }
  return pool;
}

}  // namespace

std::shared_ptr<const SemiampleContraction> random_job(std::uint64_t seed, std::string* label) {
  std::mt19937_64 rng(seed);
  auto pool = fan_pool();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto& [name, fan] = pool[rng() % pool.size()];
    const int d = fan.dim();
    const long long hi = d == 2 ? 2 : 1;
    ZVec a(fan.nrays());
    long long total = 0;
    for (auto& x : a) {
      x = static_cast<long long>(rng() % static_cast<std::uint64_t>(hi + 1));
      total += x;
    }
    if (d == 3 && total > 3) continue;
    if (polytope_from_divisor(fan, a).empty() || !is_semiample(fan, a)) continue;
    auto c = std::make_shared<SemiampleContraction>(fan, a);
    if (c->kappa() < 1) continue;
    if (label) {
      *label = name + " a=(";
      for (std::size_t k = 0; k < a.size(); ++k) *label += (k ? "," : "") + std::to_string(a[k]);
      *label += ")";
    }
    return c;
  }
  throw std::runtime_error("no semiample random job found");
}

Session::Session(Options opt) : opt_(opt) {}

std::vector<std::string> Session::diamond_examples() const {
  return {"fermat_quartic", "generic_quintic", "f2_elliptic",  "mirror_quintic", "mirror_p11114",
          "mirror_p11133",  "random_0",        "random_1",     "random_2",       "random_3",
          "random_4"};
}

std::vector<std::string> Session::exact_examples() const {
  return {"fermat_quartic", "fermat_quintic", "f2_elliptic", "vertex_p11114", "vertex_p11133", "k3_p1122",
          "random_0",       "random_1",       "random_2",    "random_3",      "random_4"};
}

const Example& Session::example(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return *it->second;
  auto ex = std::make_unique<Example>();
  ex->name = name;
  const std::uint64_t seed = opt_.seed;
  if (name == "fermat_quartic") {
    ex->c = projective(3, 4);
    ex->f = fermat(4, 4);
  } else if (name == "fermat_quintic") {
    ex->c = projective(4, 5);
    ex->f = fermat(5, 5);
  } else if (name == "generic_quintic") {
    ex->c = projective(4, 5);
    ex->f = generic_polynomial(ex->c, seed);
  } else if (name == "f2_elliptic") {
    ex->c = std::make_shared<SemiampleContraction>(f2_fan(), ZVec{1, 1, 1, 1});
    ex->f = generic_polynomial(ex->c, seed);
  } else if (mirror_weights().count(name)) {
    MirrorOptions opt;
    opt.dual_polynomial = false;
    auto pair = build_mirror_pair(polar_dual(weighted_nabla(mirror_weights().at(name))), seed, opt);
    ex->c = pair.x;
    ex->f = pair.f;
  } else if (name == "vertex_p11114" || name == "vertex_p11133") {
    MirrorOptions opt;
    opt.dual_polynomial = false;
    const std::vector<long long> w = name == "vertex_p11114" ? std::vector<long long>{1, 1, 1, 4}
                                                               : std::vector<long long>{1, 1, 3, 3};
    ex->c = build_mirror_pair(polar_dual(weighted_nabla(w)), seed, opt).x;
    ex->f = vertex_polynomial(*ex->c);
    if (!nondegeneracy_certificate(ex->c, ex->f)) throw std::runtime_error(name + ": vertex polynomial fails the certificate");
  } else if (name == "k3_p1122") {
    MirrorOptions opt;
    opt.rational_edges = true;
    opt.dual_polynomial = false;
    auto pair = build_mirror_pair(polar_dual(weighted_nabla({1, 2, 2})), seed, opt);
    ex->c = pair.x;
    ex->f = pair.f;
  } else if (name.rfind("random_", 0) == 0) {
    const std::uint64_t j = std::stoull(name.substr(7));
    ex->c = random_job(seed * 1000 + j);
    ex->f = generic_polynomial(ex->c, seed * 1000 + j);
  } else {
    throw std::out_of_range("unknown example " + name);
  }
  ex->X = std::make_unique<Hypersurface>(ex->c, ex->f);
  ex->H = std::make_unique<ToricCohomology>(ex->c->fan());
  HodgeOptions hopt;
  hopt.jobs = opt_.jobs;
  ex->diamond = hodge_diamond(*ex->X, *ex->H, hopt);
  return *cache_.emplace(name, std::move(ex)).first->second;
}

std::string criterion_title(int id) {
  static const std::vector<std::string> titles{
      "quartic K3: h11 = 1 toric + 19 residue",
      "quintic: h11 = 1, h21 = 101, Batyrev agrees",
      "elliptic curve in F_2: h10 = 1, intersection signs",
      "mirror topological test on three reflexive 4-polytopes",
      "Poincare and Hodge symmetry, structure sheaf vanishing",
      "residue pairing rank, p_sigma and J_sigma independence",
      "cup product ring laws and cross-sigma vanishing",
      "vanishing-pattern compatibility of chiral and cup products",
      "generalized monomial-divisor dimension identity"};
  if (id < 1 || id > 9) throw std::out_of_range("criterion id must be 1..9");
  return titles[id - 1];
}

namespace {

std::size_t residue_total(const HodgeCell& cell, int face) {
  std::size_t n = 0;
  for (const auto& r : cell.residue)
    if (r.face == face) n += r.a_dim * r.r_dim;
  return n;
}

// Monomials of degree 4 in 4 variables with all exponents at most 2.
std::size_t quartic_oracle() {
  std::size_t n = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const int e = 4 - a - b - c;
        if (e >= 0 && e <= 2) ++n;
      }
  return n;
}

// Monomials of degree `deg` in `nvars` variables with every exponent at least `lo`.
std::size_t monomial_count(int nvars, int deg, int lo) {
  if (nvars == 0) return deg == 0 ? 1 : 0;
  std::size_t n = 0;
  for (int e = lo; e <= deg; ++e) n += monomial_count(nvars - 1, deg - e, lo);
  return n;
}

CriterionResult criterion1(Session& s) {
  CriterionResult out;
  const auto& ex = s.example("fermat_quartic");
  const auto& cell = ex.diamond.cells[1][1];
  const std::size_t res = residue_total(cell, ex.c->zero_cone());
  const std::size_t oracle = quartic_oracle();
  out.detail = {{"h11", cell.value}, {"toric", cell.toric}, {"residue_sigma0", res}, {"oracle", oracle}};
  out.pass = cell.value == 20 && cell.toric == 1 && res == 19 && oracle == 19;
  out.summary = "h11 = " + std::to_string(cell.value) + " = " + std::to_string(cell.toric) + " + " +
                std::to_string(res) + ", oracle " + std::to_string(oracle);
  return out;
}

CriterionResult criterion2(Session& s) {
  CriterionResult out;
  const auto& ex = s.example("generic_quintic");
  const auto b = batyrev_hodge(weighted_nabla({1, 1, 1, 1}));
  // Oracle: points of the simplex dual (5 vertices and 0), degree-5 monomials, and
  // facet-interior monomials (one variable absent, the others positive).
  const long long l_nabla = 6;
  const long long l_delta = static_cast<long long>(monomial_count(5, 5, 0));
  const long long facet_int = 5 * static_cast<long long>(monomial_count(4, 5, 1));
  const long long o11 = l_nabla - 5 - 0 + 0;
  const long long o21 = l_delta - 5 - facet_int + 0;
  const auto h11 = ex.diamond.h(1, 1), h21 = ex.diamond.h(2, 1);
  out.detail = {{"pipeline", {{"h11", h11}, {"h21", h21}}},
                {"batyrev", {{"h11", b.h11}, {"h21", b.h_d2_1}}},
                {"oracle", {{"h11", o11}, {"h21", o21}}}};
  out.pass = h11 == 1 && h21 == 101 && b.h11 == 1 && b.h_d2_1 == 101 && o11 == 1 && o21 == 101;
  out.summary = "pipeline (" + std::to_string(h11) + "," + std::to_string(h21) + "), Batyrev (" +
                std::to_string(b.h11) + "," + std::to_string(b.h_d2_1) + "), oracle (" + std::to_string(o11) + "," +
                std::to_string(o21) + ")";
  return out;
}

CriterionResult criterion3(Session& s) {
  CriterionResult out;
  const auto& ex = s.example("f2_elliptic");
  const auto& fan = ex.c->fan();
  const ZVec a = ex.c->divisor();
  const Rat d4 = intersection_number(*ex.H, a, 1, {3});
  std::size_t checked = 0, bad = 0;
  for (int k = 0; k <= fan.dim(); ++k)
    for (int idx : fan.cones_of_dim(fan.dim() - k)) {
      const Cone& tau = fan.cones()[idx];
      const Rat v = intersection_number(*ex.H, a, k, tau);
      ++checked;
      if (v < 0 || (v > 0) != intersection_expected_positive(*ex.c, k, tau)) ++bad;
    }
  const auto h10 = ex.diamond.h(1, 0);
  out.detail = {{"h10", h10}, {"kappa", ex.c->kappa()}, {"D4.X", str(d4)}, {"cones_checked", checked}, {"sign_mismatches", bad}};
  out.pass = h10 == 1 && ex.c->kappa() == 2 && d4 == 0 && bad == 0;
  out.summary = "h10 = " + std::to_string(h10) + ", D4.X = " + str(d4) + ", " + std::to_string(checked - bad) + "/" +
                std::to_string(checked) + " intersection signs";
  return out;
}

CriterionResult criterion4(Session& s) {
  CriterionResult out;
  out.pass = true;
  out.detail = json::array();
  std::string summary;
  for (const auto& [name, w] : mirror_weights()) {
    const auto& ex = s.example(name);
    const auto nabla = weighted_nabla(w);
    const auto mirror = batyrev_hodge(polar_dual(nabla));
    const bool facet_interior = simplified_points(nabla).size() < nabla.lattice_points().size();
    const auto h11 = ex.diamond.h(1, 1), h21 = ex.diamond.h(2, 1);
    const bool ok = static_cast<long long>(h11) == mirror.h_d2_1 && static_cast<long long>(h21) == mirror.h11;
    out.pass = out.pass && ok;
    out.detail.push_back({{"example", name},
                          {"h11_X", h11},
                          {"h21_X", h21},
                          {"batyrev_h11_Xdual", mirror.h11},
                          {"batyrev_h21_Xdual", mirror.h_d2_1},
                          {"dual_has_facet_interior_points", facet_interior},
                          {"agree", ok}});
    summary += (summary.empty() ? "" : ", ") + name.substr(7) + " (" + std::to_string(h11) + "," + std::to_string(h21) + ")";
  }
  out.summary = summary;
  return out;
}

CriterionResult criterion5(Session& s) {
  CriterionResult out;
  out.pass = true;
  out.detail = json::array();
  std::size_t good = 0;
  const auto names = s.diamond_examples();
  for (const auto& name : names) {
    const auto& ex = s.example(name);
    const auto& D = ex.diamond;
    const bool p = D.poincare_symmetric(), h = D.hodge_symmetric(), o = D.structure_sheaf_vanishing(ex.c->kappa());
    json row = {{"example", name}, {"dim", D.dim}, {"kappa", ex.c->kappa()}, {"poincare", p}, {"hodge", h}, {"h0k", o}};
    if (name.rfind("random_", 0) == 0) {
      std::string label;
      random_job(s.options().seed * 1000 + std::stoull(name.substr(7)), &label);
      row["job"] = label;
    }
    out.detail.push_back(row);
    if (p && h && o) ++good;
    else out.pass = false;
  }
  out.summary = std::to_string(good) + "/" + std::to_string(names.size()) + " diamonds symmetric";
  return out;
}

// Faces carrying a nonzero residue term of the diamond.
std::set<int> residue_faces(const Example& ex) {
  std::set<int> faces;
  for (const auto& row : ex.diamond.cells)
    for (const auto& cell : row)
      for (const auto& r : cell.residue)
        if (r.r_dim > 0 && r.a_dim > 0) faces.insert(r.face);
  return faces;
}

CriterionResult criterion6(Session& s) {
  CriterionResult out;
  out.pass = true;
  out.detail = json::array();
  std::size_t contexts = 0, pairings = 0, p_checks = 0, j_checks = 0;
  for (const auto& name : s.exact_examples()) {
    const auto& ex = s.example(name);
    const auto& X = *ex.X;
    for (int face : residue_faces(ex)) {
      ++contexts;
      SigmaResidueContext ctx(X, face);
      const int i = ex.c->i_sigma(face);
      json row = {{"example", name}, {"face", face}, {"i_sigma", i}};
      bool ok = true;
      json ranks = json::array();
      for (int r = 0; r < i; ++r) {
        const auto& A = X.r1(face, ctx.r1_degree(r));
        const auto& B = X.r1(face, ctx.r1_degree(i - 1 - r));
        RatMatrix P(A.dim(), B.dim());
        for (std::size_t a = 0; a < A.dim(); ++a)
          for (std::size_t b = 0; b < B.dim(); ++b) P(a, b) = ctx.res(A.basis_element(a) * B.basis_element(b));
        const std::size_t rk = rank(P);
        ranks.push_back({{"r", r}, {"dim", A.dim()}, {"rank", rk}});
        if (A.dim() != B.dim() || rk != A.dim()) ok = false;
        ++pairings;
      }
      row["pairing"] = ranks;
      if (i == 1) {
        const auto adm = ctx.admissible_s();
        if (adm.size() >= 2) {
          ZVec deg = ctx.top_degree();
          const auto h = X.h_sigma(face);
          for (std::size_t k = 0; k < deg.size(); ++k) deg[k] -= h[k];
          auto monos = X.ring().monomials(deg, X.killed(face));
          const auto& R1 = X.r1(face, ctx.r1_degree(0));
          for (std::size_t m = 0; m < monos.size() && m < 3; ++m) {
            const auto C = CoxPolynomial::monomial(monos[m * (monos.size() - 1) / 2]);
            const auto ref = R1.coords(ctx.p_sigma(C, adm[0]));
            for (std::size_t t = 1; t < adm.size(); ++t) {
              ++p_checks;
              if (R1.coords(ctx.p_sigma(C, adm[t])) != ref) ok = false;
            }
          }
        }
      }
      for (const auto& I : ctx.admissible_index_sets(4)) {
        SigmaResidueContext other(X, face, I);
        ++j_checks;
        if (ctx.top_coefficient(other.jacobian()) != 1) ok = false;
      }
      row["ok"] = ok;
      out.pass = out.pass && ok;
      out.detail.push_back(row);
    }
  }
  out.summary = std::to_string(contexts) + " contexts, " + std::to_string(pairings) + " pairings, " +
                std::to_string(p_checks) + " p_sigma and " + std::to_string(j_checks) + " J_sigma comparisons";
  return out;
}

struct Slot {
  bool toric = true;
  int k = 0;                 // toric degree
  int face = 0, s = 0, r = 0;
  int degree = 0;            // cohomological degree
};

std::vector<Slot> class_slots(const CohomologyRing& R) {
  std::vector<Slot> out;
  const auto& c = R.hypersurface().contraction();
  const int d = R.hypersurface().d();
  for (int k = 0; k <= R.dim(); ++k)
    if (R.a1(k).dim() > 0) out.push_back({true, k, 0, 0, 0, 2 * k});
  for (int face = 0; face < c.nfaces(); ++face) {
    const int i = c.i_sigma(face);
    if (i < 1) continue;
    for (int r = 0; r < i; ++r) {
      if (R.r1(face, r).dim() == 0) continue;
      for (int s = 0; s <= d - i; ++s)
        if (R.a1_sigma(face, s).dim() > 0) out.push_back({false, 0, face, s, r, 2 * s + i - 1});
    }
  }
  return out;
}

HodgeClass random_class(const CohomologyRing& R, const Slot& slot, std::mt19937_64& rng) {
  auto coef = [&] { return Rat(static_cast<long>(rng() % 7) - 3); };
  HodgeClass x;
  if (slot.toric) {
    const auto& Q = R.a1(slot.k);
    for (std::size_t a = 0; a < Q.dim(); ++a) x = x + R.toric_class(Q.basis_element(a), slot.k) * coef();
    return x;
  }
  const auto& U = R.a1_sigma(slot.face, slot.s);
  const auto& G = R.r1(slot.face, slot.r);
  for (std::size_t a = 0; a < U.dim(); ++a)
    for (std::size_t b = 0; b < G.dim(); ++b)
      x = x + R.residue_class(slot.face, U.basis_element(a), slot.s, G.basis_element(b), slot.r) * coef();
  return x;
}

CriterionResult criterion7(Session& s) {
  CriterionResult out;
  out.pass = true;
  out.detail = json::array();
  const std::size_t triples = 100;
  std::size_t total = 0, cross = 0;
  const auto names = s.exact_examples();
  for (std::size_t e = 0; e < names.size(); ++e) {
    const auto& name = names[e];
    const auto& ex = s.example(name);
    CohomologyRing R(*ex.X, *ex.H);
    const auto slots = class_slots(R);
    std::mt19937_64 rng(s.options().seed * 1000 + e);
    std::size_t comm_fail = 0, assoc_fail = 0, nonzero = 0;
    for (std::size_t t = 0; t < triples; ++t) {
      const Slot& a = slots[rng() % slots.size()];
      const Slot& b = slots[rng() % slots.size()];
      const Slot& c = slots[rng() % slots.size()];
      const auto x = random_class(R, a, rng), y = random_class(R, b, rng), z = random_class(R, c, rng);
      const auto xy = R.multiply(x, y);
      const Rat sign = (a.degree * b.degree) % 2 ? Rat(-1) : Rat(1);
      if (!(xy == R.multiply(y, x) * sign)) ++comm_fail;
      const auto left = R.multiply(xy, z);
      if (!(left == R.multiply(x, R.multiply(y, z)))) ++assoc_fail;
      if (!left.is_zero()) ++nonzero;
    }
    // Rule (e): residue classes on distinct sigma multiply to zero.
    std::size_t cross_fail = 0, pairs = 0;
    for (const auto& a : slots)
      for (const auto& b : slots) {
        if (a.toric || b.toric || a.face == b.face) continue;
        ++pairs;
        if (!R.multiply(random_class(R, a, rng), random_class(R, b, rng)).is_zero()) ++cross_fail;
      }
    total += triples;
    cross += pairs;
    const bool ok = comm_fail == 0 && assoc_fail == 0 && cross_fail == 0;
    out.pass = out.pass && ok;
    out.detail.push_back({{"example", name},
                          {"triples", triples},
                          {"slots", slots.size()},
                          {"commutativity_failures", comm_fail},
                          {"associativity_failures", assoc_fail},
                          {"nonzero_triple_products", nonzero},
                          {"cross_sigma_pairs", pairs},
                          {"cross_sigma_failures", cross_fail}});
  }
  out.summary = std::to_string(total) + " triples, " + std::to_string(cross) + " cross-sigma slot pairs";
  return out;
}

bool in_pattern(const std::vector<int>& ks) {
  for (int a : ks)
    for (int b : ks)
      if (std::abs(a - b) > 1) return true;
  bool equal = true;
  for (int k : ks) equal = equal && k == ks[0];
  return equal && ks.size() % 2 == 1;
}

std::vector<std::vector<int>> tuples(int n, int t) {
  std::vector<std::vector<int>> out{{}};
  for (int j = 0; j < t; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int k = 1; k <= n; ++k) {
        auto w = v;
        w.push_back(k);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::string tuple_str(const std::vector<int>& ks) {
  std::string s;
  for (int k : ks) s += std::to_string(k);
  return s;
}

CriterionResult criterion8(Session& s) {
  CriterionResult out;
  const auto pair = p11133_pair(s.options().seed);
  const int d = pair.x->fan().dim();
  const auto g = generalized_mdmm(pair, RootMode::exact);
  if (g.blocks.empty()) throw std::logic_error("mirror pair has no A_n edge");
  const auto& blk = g.blocks[0];
  const int face_dual = blk.dual_face;
  const int n = static_cast<int>(blk.n_dual);
  const int ray = blk.interior_rays[0];

  Hypersurface Xd(pair.x_dual, pair.f_dual);
  Hypersurface X(pair.x, pair.f);
  ToricCohomology H(pair.x->fan());
  CohomologyRing R(X, H);

  // Fillers of degree q beta for the chiral side: monomials of f_dual and their products.
  std::vector<CoxPolynomial> deg1;
  for (const auto& [e, co] : pair.f_dual.terms()) {
    deg1.push_back(CoxPolynomial::monomial(e));
    if (deg1.size() == 6) break;
  }
  std::vector<CoxPolynomial> deg2;
  for (std::size_t a = 0; a < deg1.size(); ++a)
    for (std::size_t b = a; b < deg1.size() && deg2.size() < 8; ++b) deg2.push_back(deg1[a] * deg1[b]);
  // Toric fillers on X: products of the D_j.
  std::vector<CoxPolynomial> divisors;
  for (std::size_t j = 0; j < X.n(); ++j) {
    ZVec u(X.n(), 0);
    u[j] = 1;
    divisors.push_back(H.divisor(u));
  }

  const CoxPolynomial& A = blk.A[0];
  bool chiral_ok = true, quantum_ok = true, closed_ok = true;
  std::set<std::string> ratios;
  json rows = json::array();
  for (int t = 1; t <= 3; ++t)
    for (const auto& ks : tuples(n, t)) {
      const bool expect_zero = in_pattern(ks);
      // Chiral side on X_dual, in the top degree.
      std::vector<std::vector<CoxPolynomial>> fillers;
      if (t == 1)
        for (const auto& b : deg2) fillers.push_back({b});
      if (t == 2)
        for (const auto& b : deg1) fillers.push_back({b});
      if (t == 3) fillers.push_back({});
      bool chiral_zero = true;
      for (const auto& fill : fillers) {
        std::vector<ChiralElement> el;
        for (int k : ks) el.push_back({true, face_dual, k, 1, A});
        for (const auto& b : fill) el.push_back({false, -1, 0, static_cast<int>(d - 1 - t), b});
        if (!chiral_product(Xd, el).is_zero()) chiral_zero = false;
      }
      // Quantum side on X: s = d - 1 - t toric factors.
      std::vector<std::vector<CoxPolynomial>> toric;
      if (t == 3) toric.push_back({});
      if (t == 2)
        for (const auto& a : divisors) toric.push_back({a});
      if (t == 1)
        for (std::size_t a = 0; a < divisors.size(); ++a)
          for (std::size_t b = a; b < divisors.size(); ++b) toric.push_back({divisors[a], divisors[b]});
      bool quantum_zero = true, agree = true;
      for (const auto& ts : toric) {
        std::vector<ComponentFactor> fs;
        for (int k : ks) fs.push_back({ray, k});
        const auto q = quantum_side_product(R, ts, fs);
        if (!q.cup.is_zero()) quantum_zero = false;
        if (!q.agree) {
          agree = false;
          if (q.closed_integral != 0) ratios.insert(str(q.cup_integral / q.closed_integral));
        }
      }
      chiral_ok = chiral_ok && chiral_zero == expect_zero;
      quantum_ok = quantum_ok && quantum_zero == expect_zero;
      closed_ok = closed_ok && agree;
      rows.push_back({{"k", tuple_str(ks)},
                      {"pattern", expect_zero},
                      {"chiral_zero", chiral_zero},
                      {"quantum_zero", quantum_zero},
                      {"closed_form_agrees", agree}});
    }
  out.pass = chiral_ok && quantum_ok && closed_ok;
  out.detail = {{"n", n},
                {"tuples", rows},
                {"chiral_pattern", chiral_ok},
                {"quantum_pattern", quantum_ok},
                {"closed_form", closed_ok},
                {"cup_over_closed_ratios", json(std::vector<std::string>(ratios.begin(), ratios.end()))}};
  out.summary = std::string("n = ") + std::to_string(n) + ", chiral pattern " + (chiral_ok ? "ok" : "BAD") +
                ", quantum pattern " + (quantum_ok ? "ok" : "BAD") + ", closed form " + (closed_ok ? "ok" : "differs");
  if (!ratios.empty()) {
    out.summary += " (cup/closed =";
    for (const auto& r : ratios) out.summary += " " + r;
    out.summary += ")";
  }
  return out;
}

CriterionResult criterion9(Session& s) {
  CriterionResult out;
  const auto pair = p11133_pair(s.options().seed);
  const auto numeric = generalized_mdmm(pair, RootMode::numeric, s.options().tolerance);
  const auto exact = generalized_mdmm(pair, RootMode::exact);
  json blocks = json::array();
  for (const auto& b : numeric.blocks)
    blocks.push_back({{"face", b.face},
                      {"dual_face", b.dual_face},
                      {"volume", b.volume},
                      {"interior_rays", b.interior_rays.size()},
                      {"classes_per_ray", b.classes},
                      {"n_dual", b.n_dual},
                      {"dual_slice_dim", b.dual_slice_dim},
                      {"A_rank", b.A_rank},
                      {"holds", b.holds}});
  out.pass = !numeric.blocks.empty() && numeric.holds && exact.holds;
  out.detail = {{"blocks", blocks}, {"numeric", numeric.holds}, {"exact", exact.holds}};
  out.summary = std::to_string(numeric.blocks.size()) + " edge cones";
  for (const auto& b : numeric.blocks)
    out.summary += ", vol " + std::to_string(b.volume) + " -> " + std::to_string(b.volume - 1) + " classes, n(sigma_dual) = " +
                   std::to_string(b.n_dual);
  return out;
}

}  // namespace

CriterionResult run_criterion(int id, Session& session) {
  using Fn = CriterionResult (*)(Session&);
  static const Fn fns[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9};
  if (id < 1 || id > 9) throw std::out_of_range("criterion id must be 1..9");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = fns[id - 1](session);
  r.id = id;
  r.seconds = elapsed(t0);
  return r;
}

}  // namespace th::acceptance

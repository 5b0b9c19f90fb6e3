#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <set>

#include "acceptance/acceptance.hpp"
#include "job.hpp"
#include "torichodge/mirror.hpp"

#ifndef TORICHODGE_VERSION
#define TORICHODGE_VERSION "unknown"
#endif

namespace th::cli {

using json = nlohmann::json;

namespace {

// A mathematical identity the command checks did not hold; the report is still emitted.
struct Falsified {
  json result;
  std::string message;
};

std::string str(const Rat& x) { return x.get_str(); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json poly_json(const CoxPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", e}, {"coefficient", str(c)}});
  return out;
}

json vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

json matrix_json(const RatMatrix& M) {
  json out = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(str(M(i, j)));
    out.push_back(row);
  }
  return out;
}

json zvecs_json(const std::vector<ZVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

json class_json(const HodgeClass& x) {
  json toric = json::array(), residue = json::array();
  for (const auto& [key, v] : x.toric)
    toric.push_back({{"k", std::get<0>(key)}, {"twist", std::get<1>(key)}, {"unit", std::get<2>(key)}, {"coords", vec_json(v)}});
  for (const auto& [key, M] : x.residue)
    residue.push_back({{"face", std::get<0>(key)},
                       {"s", std::get<1>(key)},
                       {"r", std::get<2>(key)},
                       {"twist", std::get<3>(key)},
                       {"unit", std::get<4>(key)},
                       {"coefficients", matrix_json(M)}});
  return {{"toric", toric}, {"residue", residue}};
}

json diamond_json(const HodgeDiamond& D) {
  json cells = json::array();
  for (int p = 0; p <= D.dim; ++p)
    for (int q = 0; q <= D.dim; ++q) {
      const auto& cell = D.cells[p][q];
      json res = json::array();
      for (const auto& r : cell.residue)
        res.push_back({{"face", r.face}, {"cone_dim", r.cone_dim}, {"s", r.s}, {"r", r.r}, {"a_dim", r.a_dim}, {"r_dim", r.r_dim}});
      cells.push_back({{"p", p}, {"q", q}, {"value", cell.value}, {"provenance", {{"toric", cell.toric}, {"residue", res}}}});
    }
  json table = json::array();
  for (int p = 0; p <= D.dim; ++p) {
    json row = json::array();
    for (int q = 0; q <= D.dim; ++q) row.push_back(D.h(p, q));
    table.push_back(row);
  }
  return {{"dim", D.dim},
          {"table", table},
          {"cells", cells},
          {"nonvanishing_vertex_faces", D.nonvanishing_vertex_faces},
          {"poincare_symmetric", D.poincare_symmetric()},
          {"hodge_symmetric", D.hodge_symmetric()}};
}

struct Loaded {
  std::shared_ptr<const SemiampleContraction> c;
  CoxPolynomial f;
  std::unique_ptr<Hypersurface> X;
  std::unique_ptr<ToricCohomology> H;
};

Loaded load(const JobSpec& job) {
  Loaded L;
  L.c = contraction(job);
  L.f = polynomial(job, L.c);
  L.X = std::make_unique<Hypersurface>(L.c, L.f);
  L.H = std::make_unique<ToricCohomology>(L.c->fan());
  return L;
}

json cmd_check(const JobSpec& job) {
  if (job.polytope) {
    auto c = contraction(job);
    return {{"source", "polytope"},
            {"dim", job.dim},
            {"nrays", c->fan().nrays()},
            {"complete", c->fan().complete()},
            {"simplicial", c->fan().simplicial()},
            {"semiample", true},
            {"kappa", c->kappa()}};
  }
  const Fan& fan = *job.fan;
  auto v = validate_fan(fan);
  json out = {{"source", "fan"},
              {"dim", job.dim},
              {"nrays", fan.nrays()},
              {"complete", v.complete},
              {"simplicial", v.simplicial},
              {"problems", v.problems}};
  if (!v.complete || !v.simplicial) throw InvalidInput(std::string("fan is not ") + (v.complete ? "simplicial" : "complete"));
  auto bad = failing_cartier_cone(fan, *job.divisor);
  if (bad) {
    std::string cone = "{";
    for (std::size_t j = 0; j < bad->size(); ++j) cone += (j ? "," : "") + std::to_string((*bad)[j]);
    cone += "}";
    throw InvalidInput("divisor is not semiample: the Cartier datum on cone " + cone + " lies outside Delta_D");
  }
  const int kappa = iitaka_dimension(fan, *job.divisor);
  out["semiample"] = true;
  out["kappa"] = kappa;
  out["big"] = kappa == job.dim;
  return out;
}

json cmd_contraction(const JobSpec& job) {
  auto c = contraction(job);
  const auto& P = c->polytope();
  json faces = json::array();
  for (int f = 0; f < c->nfaces(); ++f)
    faces.push_back({{"face", f},
                     {"i_sigma", c->i_sigma(f)},
                     {"cone_dim", c->cone_dim(f)},
                     {"target_cone", c->target_cone(f)},
                     {"interior_rays", c->interior_rays(f)},
                     {"volume", P.normalized_volume(f).get_str()}});
  json rays = json::array();
  for (int k = 0; k < static_cast<int>(c->fan().nrays()); ++k)
    rays.push_back({{"ray", k}, {"vector", c->fan().ray(k)}, {"face", c->ray_face(k)}});
  return {{"kappa", c->kappa()},
          {"divisor", c->divisor()},
          {"polytope", {{"vertices", zvecs_json(P.vertices_int())}, {"lattice_points", P.lattice_points().size()}}},
          {"target_rays", zvecs_json(c->target_fan().rays())},
          {"faces", faces},
          {"rays", rays}};
}

json cmd_hodge(const JobSpec& job) {
  auto L = load(job);
  HodgeOptions opt;
  opt.jobs = job.options.jobs;
  auto D = hodge_diamond(*L.X, *L.H, opt);
  return {{"kappa", L.c->kappa()}, {"nrays", L.c->fan().nrays()}, {"polynomial_terms", L.f.size()}, {"diamond", diamond_json(D)}};
}

json classes_json(const ComponentClasses& cc, RootMode mode) {
  json out = {{"m0", cc.edge.m0}, {"m1", cc.edge.m1}, {"edge_coefficients", vec_json(cc.edge.coefficients)}};
  if (mode == RootMode::exact) {
    out["roots"] = vec_json(cc.edge.exact_roots);
    json g = json::array();
    for (const auto& p : cc.exact) g.push_back(poly_json(p));
    out["classes"] = g;
  } else {
    json roots = json::array();
    for (const auto& z : cc.edge.numeric_roots) roots.push_back({num(z.real()), num(z.imag())});
    out["roots"] = roots;
    json g = json::array();
    for (const auto& v : cc.numeric) {
      json row = json::array();
      for (const auto& z : v) row.push_back({num(z.real()), num(z.imag())});
      g.push_back(row);
    }
    out["class_coords"] = g;
  }
  return out;
}

json cmd_picard(const JobSpec& job) {
  auto L = load(job);
  auto rep = picard_group(*L.X);
  json blocks = json::array();
  for (const auto& b : rep.residue) {
    json row = {{"face", b.face}, {"ray", b.ray}, {"components", b.components}, {"slice_dim", b.slice_dim}};
    row["component_classes"] = classes_json(component_classes(*L.X, b.ray, job.options.root_mode, job.options.numeric_tolerance),
                                            job.options.root_mode);
    blocks.push_back(row);
  }
  return {{"iitaka", rep.iitaka},
          {"identified_with_h2", rep.identified_with_h2},
          {"toric_basis", rep.toric_basis},
          {"killed_rays", rep.killed_rays},
          {"toric_rank", rep.toric_rank},
          {"residue", blocks},
          {"formula", rep.formula},
          {"rank", rep.rank()},
          {"root_mode", job.options.root_mode == RootMode::exact ? "exact" : "numeric"}};
}

// Class argument: {"divisors": [[...], ...]} (a product of divisors), {"basis": j}, or {"terms": [...]}.
CoxPolynomial class_poly(const json& arg, const std::string& p, const ToricCohomology& H, std::size_t n,
                         const PairedQuotient* U, const GradedSlice* G) {
  if (!arg.is_object()) throw JobError(p, "expected an object");
  if (arg.contains("divisors")) {
    CoxPolynomial out = CoxPolynomial::constant(n, 1);
    const auto& ds = arg["divisors"];
    if (!ds.is_array()) throw JobError(p + "/divisors", "expected an array");
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const std::string pj = p + "/divisors/" + std::to_string(j);
      if (!ds[j].is_array() || ds[j].size() != n) throw JobError(pj, "expected " + std::to_string(n) + " coefficients");
      ZVec a;
      for (std::size_t k = 0; k < n; ++k) {
        Int x = parse_int(ds[j][k], pj + "/" + std::to_string(k));
        a.push_back(x.get_si());
      }
      out = out * H.divisor(a);
    }
    return out;
  }
  if (arg.contains("basis")) {
    Int j = parse_int(arg["basis"], p + "/basis");
    const std::size_t dim = U ? U->dim() : G ? G->dim() : 0;
    if (j < 0 || j >= static_cast<long>(dim)) throw JobError(p + "/basis", "basis index out of range (dimension " + std::to_string(dim) + ")");
    return U ? U->basis_element(j.get_ui()) : G->basis_element(j.get_ui());
  }
  if (arg.contains("terms")) {
    CoxPolynomial out(n);
    const auto& ts = arg["terms"];
    for (std::size_t t = 0; t < ts.size(); ++t) {
      const std::string pt = p + "/terms/" + std::to_string(t);
      if (!ts[t].contains("exponent") || !ts[t]["exponent"].is_array() || ts[t]["exponent"].size() != n)
        throw JobError(pt + "/exponent", "expected " + std::to_string(n) + " exponents");
      Exponent e;
      for (const auto& x : ts[t]["exponent"]) e.push_back(static_cast<int>(parse_int(x, pt + "/exponent").get_si()));
      out.add_term(e, parse_rat(ts[t].value("coefficient", json(1)), pt + "/coefficient"));
    }
    return out;
  }
  throw JobError(p, "expected \"divisors\", \"basis\" or \"terms\"");
}

int int_field(const json& o, const std::string& key, const std::string& p) {
  if (!o.contains(key)) throw JobError(p, "missing \"" + key + "\"");
  return static_cast<int>(parse_int(o[key], p + "/" + key).get_si());
}

json cmd_products(const JobSpec& job) {
  auto L = load(job);
  CohomologyRing R(*L.X, *L.H);
  const std::size_t n = L.X->n();
  std::map<int, ComponentClasses> comp;
  json out = json::array();
  for (std::size_t i = 0; i < job.products.size(); ++i) {
    const std::string pi = "/products/" + std::to_string(i);
    const auto& prod = job.products[i];
    if (!prod.is_object() || !prod.contains("factors") || !prod["factors"].is_array())
      throw JobError(pi, "expected {\"factors\": [...]}");
    HodgeClass acc = R.toric_class(CoxPolynomial::constant(n, 1), 0);
    const auto& fs = prod["factors"];
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const std::string pj = pi + "/factors/" + std::to_string(j);
      const auto& f = fs[j];
      HodgeClass x;
      if (f.contains("toric")) {
        const auto& t = f["toric"];
        const int k = t.contains("divisors") ? static_cast<int>(t["divisors"].size()) : int_field(t, "k", pj + "/toric");
        const PairedQuotient* U = t.contains("basis") ? &R.a1(k) : nullptr;
        x = R.toric_class(class_poly(t, pj + "/toric", *L.H, n, U, nullptr), k);
      } else if (f.contains("residue")) {
        const auto& r = f["residue"];
        const std::string pr = pj + "/residue";
        const int face = int_field(r, "face", pr), s = int_field(r, "s", pr), rr = int_field(r, "r", pr);
        if (face < 0 || face >= L.c->nfaces()) throw JobError(pr + "/face", "face index out of range");
        const int i_sigma = L.c->i_sigma(face);
        if (rr < 0 || rr >= i_sigma) throw JobError(pr + "/r", "r must satisfy 0 <= r < i(sigma)");
        if (s < 0 || s > L.X->d() - i_sigma) throw JobError(pr + "/s", "s out of range");
        if (!r.contains("u") || !r.contains("g")) throw JobError(pr, "missing \"u\" or \"g\"");
        const auto u = class_poly(r["u"], pr + "/u", *L.H, n, &R.a1_sigma(face, s), nullptr);
        const auto g = class_poly(r["g"], pr + "/g", *L.H, n, nullptr, &R.r1(face, rr));
        x = R.residue_class(face, u, s, g, rr);
      } else if (f.contains("component")) {
        const auto& cpt = f["component"];
        const std::string pc = pj + "/component";
        const int ray = int_field(cpt, "ray", pc), l = int_field(cpt, "index", pc);
        if (ray < 0 || ray >= static_cast<int>(n)) throw JobError(pc + "/ray", "ray index out of range");
        auto it = comp.find(ray);
        if (it == comp.end()) it = comp.emplace(ray, component_classes(*L.X, ray, RootMode::exact)).first;
        if (l < 1 || l > static_cast<int>(it->second.exact.size())) throw JobError(pc + "/index", "component index out of range");
        ZVec unit(n, 0);
        unit[ray] = 1;
        x = R.residue_class(L.c->ray_face(ray), L.H->divisor(unit), 1, it->second.exact[l - 1], 0);
      } else {
        throw JobError(pj, "expected \"toric\", \"residue\" or \"component\"");
      }
      acc = R.multiply(acc, x);
    }
    json integral = json::array();
    for (const auto& [tag, v] : R.integrate(acc)) integral.push_back({{"twist", tag.first}, {"unit", tag.second}, {"value", str(v)}});
    out.push_back({{"class", class_json(acc)}, {"zero", acc.is_zero()}, {"integral", integral}});
  }
  return {{"products", out}};
}

json batyrev_json(const BatyrevNumbers& b) { return {{"h11", b.h11}, {"h_d2_1", b.h_d2_1}, {"provenance", "lattice_count"}}; }

json cmd_mirror(const JobSpec& job) {
  const LatticePolytope delta = newton_polytope(job);
  const int d = delta.dim();
  json out = {{"delta_vertices", zvecs_json(delta.vertices_int())}, {"reflexive", is_reflexive(delta)}};
  if (!is_reflexive(delta)) throw InvalidInput("Newton polytope is not reflexive");
  if (d < 4) throw InvalidInput("the mirror test needs a Calabi-Yau threefold or higher (dimension at least 4)");
  const LatticePolytope nabla = polar_dual(delta);
  out["nabla_vertices"] = zvecs_json(nabla.vertices_int());
  const auto bx = batyrev_hodge(nabla), bd = batyrev_hodge(delta);
  out["batyrev_X"] = batyrev_json(bx);
  out["batyrev_X_dual"] = batyrev_json(bd);
  MirrorOptions mo;
  mo.dual_polynomial = false;
  mo.rational_edges = job.options.rational_edges;
  auto pair = build_mirror_pair(delta, job.generic_seed.value_or(job.options.seed), mo);
  Hypersurface X(pair.x, pair.f);
  ToricCohomology H(pair.x->fan());
  HodgeOptions ho;
  ho.jobs = job.options.jobs;
  auto D = hodge_diamond(X, H, ho);
  const long long h11 = static_cast<long long>(D.h(1, 1)), hd21 = static_cast<long long>(D.h(d - 2, 1));
  out["pipeline_X"] = {{"h11", h11}, {"h_d2_1", hd21}, {"nrays", pair.x->fan().nrays()}, {"provenance", "pipeline"}};
  const bool a = h11 == bd.h_d2_1, b = hd21 == bd.h11;
  out["topological_test"] = {{"h11_X_equals_h_d2_1_X_dual", a}, {"h_d2_1_X_equals_h11_X_dual", b}, {"holds", a && b}};
  if (!(a && b)) throw Falsified{out, "mirror topological test failed"};
  return out;
}

json cmd_mddm(const JobSpec& job) {
  const LatticePolytope delta = newton_polytope(job);
  if (!is_reflexive(delta)) throw InvalidInput("Newton polytope is not reflexive");
  MirrorOptions mo;
  mo.simplified = job.options.simplified;
  mo.rational_edges = job.options.rational_edges;
  auto pair = build_mirror_pair(delta, job.generic_seed.value_or(job.options.seed), mo);
  auto m = monomial_divisor_map(pair);
  json monos = json::array();
  for (const auto& e : m.monomials) monos.push_back(e);
  json mdmm = {{"divisor_basis", m.divisor_basis},
               {"monomials", monos},
               {"matrix", matrix_json(m.matrix)},
               {"toric_dim", m.toric_dim},
               {"polynomial_dim", m.polynomial_dim},
               {"relations_vanish", m.relations_vanish},
               {"isomorphism", m.isomorphism}};
  auto g = generalized_mdmm(pair, job.options.root_mode, job.options.numeric_tolerance);
  json blocks = json::array();
  for (const auto& b : g.blocks) {
    json A = json::array();
    for (const auto& p : b.A) A.push_back(poly_json(p));
    blocks.push_back({{"face", b.face},
                      {"dual_face", b.dual_face},
                      {"interior_rays", b.interior_rays},
                      {"volume", b.volume},
                      {"classes_per_ray", b.classes},
                      {"n_dual", b.n_dual},
                      {"dual_slice_dim", b.dual_slice_dim},
                      {"A", A},
                      {"A_rank", b.A_rank},
                      {"holds", b.holds}});
  }
  json out = {{"nrays", pair.x->fan().nrays()},
              {"nrays_dual", pair.x_dual->fan().nrays()},
              {"monomial_divisor_map", mdmm},
              {"generalized", {{"blocks", blocks}, {"holds", g.holds}}}};
  if (!m.isomorphism || !m.relations_vanish || !g.holds) throw Falsified{out, "monomial-divisor dimension identity failed"};
  return out;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"check", "contraction", "hodge", "picard", "products", "mirror", "mddm", "selftest"};
  return c;
}

Report run_command(const std::string& command, const std::string& input, const CommandOptions& opt) {
  Report rep;
  rep.document = {{"command", command}, {"version", TORICHODGE_VERSION}, {"input_hash", hex64(fnv1a(input))}};
  auto fail = [&](int code, const std::string& kind, const std::string& message, const std::string& pointer = "") {
    rep.exit_code = code;
    rep.document["status"] = "error";
    rep.document["error"] = {{"kind", kind}, {"message", message}};
    if (!pointer.empty()) rep.document["error"]["pointer"] = pointer;
  };
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      throw InvalidInput("unknown command \"" + command + "\"");
    if (command == "selftest") {
      acceptance::Options ao;
      if (opt.jobs) ao.jobs = *opt.jobs;
      if (opt.seed) ao.seed = *opt.seed;
      if (opt.numeric_tolerance) ao.tolerance = *opt.numeric_tolerance;
      acceptance::Session session(ao);
      std::vector<int> ids = opt.criteria;
      if (ids.empty())
        for (int i = 1; i <= 9; ++i) ids.push_back(i);
      json results = json::array();
      bool all = true;
      for (int id : ids) {
        acceptance::CriterionResult r;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          r = acceptance::run_criterion(id, session);
        } catch (const std::out_of_range& e) {
          throw InvalidInput(e.what());
        } catch (const std::exception& e) {
          r.id = id;
          r.pass = false;
          r.summary = std::string("error: ") + e.what();
          r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        all = all && r.pass;
        char buf[64];
        std::snprintf(buf, sizeof buf, " [%.1f s]", r.seconds);
        rep.lines.push_back("criterion " + std::to_string(id) + (r.pass ? " PASS " : " FAIL ") +
                            acceptance::criterion_title(id) + ": " + r.summary + buf);
        results.push_back({{"id", id}, {"title", acceptance::criterion_title(id)}, {"pass", r.pass}, {"summary", r.summary}, {"detail", r.detail}});
      }
      rep.document["result"] = {{"criteria", results}, {"all_pass", all}};
      rep.document["status"] = all ? "ok" : "falsified";
      rep.exit_code = all ? ok : falsified;
      return rep;
    }
    JobSpec job = parse_job(input);
    if (opt.jobs) job.options.jobs = *opt.jobs;
    if (opt.seed) job.options.seed = *opt.seed;
    if (opt.numeric_tolerance) job.options.numeric_tolerance = *opt.numeric_tolerance;
    json result;
    if (command == "check") result = cmd_check(job);
    else if (command == "contraction") result = cmd_contraction(job);
    else if (command == "hodge") result = cmd_hodge(job);
    else if (command == "picard") result = cmd_picard(job);
    else if (command == "products") result = cmd_products(job);
    else if (command == "mirror") result = cmd_mirror(job);
    else result = cmd_mddm(job);
    rep.document["result"] = result;
    rep.document["status"] = "ok";
  } catch (const Falsified& f) {
    rep.document["result"] = f.result;
    rep.document["status"] = "falsified";
    rep.document["error"] = {{"kind", "falsified"}, {"message", f.message}};
    rep.exit_code = falsified;
  } catch (const JobError& e) {
    fail(invalid_input, "invalid_input", e.what(), e.pointer().empty() ? "/" : e.pointer());
  } catch (const InvalidInput& e) {
    fail(invalid_input, "invalid_input", e.what());
  } catch (const std::invalid_argument& e) {
    fail(invalid_input, "invalid_input", e.what());
  } catch (const std::exception& e) {
    fail(internal_error, "internal_error", e.what());
  }
  return rep;
}

}  // namespace th::cli

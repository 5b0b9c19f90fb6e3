#include "job.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>
#include <set>

#include "torichodge/mirror.hpp"

namespace th::cli {

using json = nlohmann::json;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Int parse_int(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Int(std::to_string(v.get<std::uint64_t>())) : Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    static const std::regex re("[+-]?[0-9]+");
    const auto s = v.get<std::string>();
    if (!std::regex_match(s, re)) throw JobError(pointer, "expected an integer, got \"" + s + "\"");
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw JobError(pointer, "expected an integer");
}

Rat parse_rat(const json& v, const std::string& pointer) {
  if (v.is_string()) {
    static const std::regex re("([+-]?[0-9]+)(/([0-9]+))?");
    std::smatch m;
    const auto s = v.get<std::string>();
    if (!std::regex_match(s, m, re)) throw JobError(pointer, "expected a rational \"p/q\", got \"" + s + "\"");
    Int num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    Int den = m[3].matched ? Int(m[3].str(), 10) : Int(1);
    if (den == 0) throw JobError(pointer, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  if (v.is_number_integer()) return Rat(parse_int(v, pointer));
  throw JobError(pointer, "expected an integer or a rational string");
}

namespace {

long long small(const json& v, const std::string& pointer) {
  Int x = parse_int(v, pointer);
  if (!x.fits_slong_p()) throw JobError(pointer, "integer does not fit in 64 bits");
  return x.get_si();
}

const json& array_at(const json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.contains(key)) throw JobError(pointer, "missing \"" + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_array()) throw JobError(pointer + "/" + key, "expected an array");
  return v;
}

ZVec int_vector(const json& v, const std::string& pointer, int expect = -1) {
  if (!v.is_array()) throw JobError(pointer, "expected an array of integers");
  if (expect >= 0 && static_cast<int>(v.size()) != expect)
    throw JobError(pointer, "expected " + std::to_string(expect) + " entries, got " + std::to_string(v.size()));
  ZVec out;
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(small(v[j], pointer + "/" + std::to_string(j)));
  return out;
}

void parse_options(const json& o, JobOptions& opt) {
  if (!o.is_object()) throw JobError("/options", "expected an object");
  for (const auto& [key, v] : o.items()) {
    const std::string p = "/options/" + key;
    if (key == "root_mode") {
      if (v == "exact") opt.root_mode = RootMode::exact;
      else if (v == "numeric") opt.root_mode = RootMode::numeric;
      else throw JobError(p, "expected \"exact\" or \"numeric\"");
    } else if (key == "numeric_tolerance") {
      if (!v.is_number() || v.get<double>() <= 0) throw JobError(p, "expected a positive number");
      opt.numeric_tolerance = v.get<double>();
    } else if (key == "jobs") {
      opt.jobs = static_cast<int>(small(v, p));
      if (opt.jobs < 1) throw JobError(p, "expected a positive integer");
    } else if (key == "seed") {
      opt.seed = static_cast<std::uint64_t>(small(v, p));
    } else if (key == "rational_edges" || key == "simplified") {
      if (!v.is_boolean()) throw JobError(p, "expected a boolean");
      (key == "rational_edges" ? opt.rational_edges : opt.simplified) = v.get<bool>();
    } else {
      throw JobError(p, "unknown option");
    }
  }
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JobError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw JobError("", "job must be a JSON object");
  static const std::set<std::string> known{"fan", "polytope", "divisor", "polynomial", "options", "products"};
  for (const auto& [key, v] : doc.items())
    if (!known.count(key)) throw JobError("/" + key, "unknown field");

  JobSpec job;
  const bool has_fan = doc.contains("fan"), has_poly = doc.contains("polytope");
  if (has_fan == has_poly) throw JobError("", "exactly one of \"fan\" and \"polytope\" is required");
  if (doc.contains("options")) parse_options(doc["options"], job.options);

  if (has_fan) {
    const auto& f = doc["fan"];
    if (!f.is_object()) throw JobError("/fan", "expected an object");
    const auto& rays = array_at(f, "rays", "/fan");
    if (rays.empty()) throw JobError("/fan/rays", "no rays");
    std::vector<ZVec> rv;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const std::string p = "/fan/rays/" + std::to_string(k);
      rv.push_back(int_vector(rays[k], p, k ? static_cast<int>(rv[0].size()) : -1));
      if (!is_primitive(rv.back())) throw JobError(p, "ray " + std::to_string(k) + " is not primitive");
    }
    job.dim = static_cast<int>(rv[0].size());
    const auto& cones = array_at(f, "max_cones", "/fan");
    std::vector<Cone> cv;
    for (std::size_t c = 0; c < cones.size(); ++c) {
      const std::string p = "/fan/max_cones/" + std::to_string(c);
      ZVec idx = int_vector(cones[c], p);
      Cone cone;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= static_cast<long long>(rv.size()))
          throw JobError(p + "/" + std::to_string(j), "ray index out of range");
        cone.push_back(static_cast<int>(idx[j]));
      }
      std::sort(cone.begin(), cone.end());
      if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) throw JobError(p, "repeated ray index");
      cv.push_back(cone);
    }
    job.fan = Fan(job.dim, rv, cv);
    if (!doc.contains("divisor")) throw JobError("", "a fan job needs \"divisor\"");
    job.divisor = int_vector(doc["divisor"], "/divisor", static_cast<int>(rv.size()));
  } else {
    const auto& P = doc["polytope"];
    if (!P.is_object()) throw JobError("/polytope", "expected an object");
    const auto& verts = array_at(P, "vertices", "/polytope");
    if (verts.empty()) throw JobError("/polytope/vertices", "no vertices");
    std::vector<ZVec> pts;
    for (std::size_t k = 0; k < verts.size(); ++k)
      pts.push_back(int_vector(verts[k], "/polytope/vertices/" + std::to_string(k), k ? static_cast<int>(pts[0].size()) : -1));
    job.dim = static_cast<int>(pts[0].size());
    job.polytope = LatticePolytope::from_points(job.dim, pts);
    if (job.polytope->dim() != job.dim) throw JobError("/polytope/vertices", "polytope is not full-dimensional");
    if (doc.contains("divisor")) throw JobError("/divisor", "a polytope job takes its divisor from the polytope");
  }

  if (doc.contains("polynomial")) {
    const auto& p = doc["polynomial"];
    if (!p.is_object()) throw JobError("/polynomial", "expected an object");
    if (p.contains("terms") == p.contains("generic_seed"))
      throw JobError("/polynomial", "exactly one of \"terms\" and \"generic_seed\" is required");
    if (p.contains("generic_seed")) {
      job.generic_seed = static_cast<std::uint64_t>(small(p["generic_seed"], "/polynomial/generic_seed"));
    } else {
      const auto& terms = array_at(p, "terms", "/polynomial");
      std::vector<std::pair<Exponent, Rat>> tv;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string pt = "/polynomial/terms/" + std::to_string(t);
        if (!terms[t].is_object() || !terms[t].contains("exponent") || !terms[t].contains("coefficient"))
          throw JobError(pt, "expected {\"exponent\": [...], \"coefficient\": ...}");
        ZVec e = int_vector(terms[t]["exponent"], pt + "/exponent", job.fan ? static_cast<int>(job.fan->nrays()) : -1);
        Exponent ex;
        for (std::size_t j = 0; j < e.size(); ++j) {
          if (e[j] < 0) throw JobError(pt + "/exponent/" + std::to_string(j), "negative exponent");
          ex.push_back(static_cast<int>(e[j]));
        }
        tv.emplace_back(ex, parse_rat(terms[t]["coefficient"], pt + "/coefficient"));
      }
      if (job.fan) {
        ChowGroup chow(*job.fan);
        for (std::size_t t = 0; t < tv.size(); ++t) {
          ZVec e(tv[t].first.begin(), tv[t].first.end());
          if (!chow.equal(e, *job.divisor))
            throw JobError("/polynomial/terms/" + std::to_string(t) + "/exponent", "degree differs from the divisor class");
        }
      }
      job.terms = std::move(tv);
    }
  }
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw JobError("/products", "expected an array");
    job.products = doc["products"];
  }
  return job;
}

std::shared_ptr<const SemiampleContraction> contraction(const JobSpec& job) {
  if (job.fan) return std::make_shared<SemiampleContraction>(*job.fan, *job.divisor);
  const LatticePolytope& P = *job.polytope;
  if (is_reflexive(P)) {
    const LatticePolytope nabla = polar_dual(P);
    std::vector<Cone> cones;
    for (const auto& f : nabla.faces())
      if (f.dim == P.dim() - 1) cones.push_back(f.vertices);
    std::vector<ZVec> pts;
    for (const auto& m : nabla.lattice_points())
      if (std::any_of(m.begin(), m.end(), [](long long x) { return x != 0; })) pts.push_back(m);
    Fan sigma = regular_subdivision(Fan(P.dim(), nabla.vertices_int(), cones), pts);
    return std::make_shared<SemiampleContraction>(sigma, ZVec(sigma.nrays(), 1));
  }
  // Normal fan: one ray per facet, one cone per vertex.
  std::vector<ZVec> rays;
  ZVec a;
  std::vector<int> rows = P.facet_ineqs();
  for (int row : rows) {
    rays.push_back(P.ineq_normals()[row]);
    const Rat& b = P.ineq_offsets()[row];
    if (b.get_den() != 1) throw InvalidInput("polytope is not a lattice polytope");
    a.push_back(Int(b.get_num()).get_si());
  }
  std::vector<Cone> cones;
  for (std::size_t v = 0; v < P.vertices().size(); ++v) {
    Cone c;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (dot(rays[k], P.vertices()[v]) + Rat(static_cast<long>(a[k])) == 0) c.push_back(static_cast<int>(k));
    cones.push_back(c);
  }
  Fan fan(P.dim(), rays, cones);
  if (!fan.simplicial()) throw InvalidInput("normal fan is not simplicial; give a fan job or a reflexive polytope");
  return std::make_shared<SemiampleContraction>(fan, a);
}

CoxPolynomial polynomial(const JobSpec& job, std::shared_ptr<const SemiampleContraction> c) {
  CoxPolynomial f(c->fan().nrays());
  if (job.terms) {
    if (!job.fan) throw JobError("/polynomial/terms", "explicit terms need a fan job (ray order is otherwise internal)");
    for (const auto& [e, co] : *job.terms) f.add_term(e, co);
    if (f.is_zero()) throw JobError("/polynomial/terms", "polynomial is zero");
    if (!nondegeneracy_certificate(c, f)) throw InvalidInput("nondegeneracy certificate failed for the given polynomial");
  } else {
    f = generic_polynomial(c, job.generic_seed.value_or(job.options.seed));
    if (job.options.rational_edges) {
      f = with_rational_edges(*c, f);
      if (!nondegeneracy_certificate(c, f)) throw InvalidInput("rational edge polynomial fails the certificate");
    }
  }
  return f;
}

LatticePolytope newton_polytope(const JobSpec& job) {
  if (job.polytope) return *job.polytope;
  return polytope_from_divisor(*job.fan, *job.divisor);
}

}  // namespace th::cli

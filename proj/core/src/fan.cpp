#include "torichodge/fan.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace th {

namespace {

// Rows r with cone = {x : <r, x> >= 0 for all r}; equations appear as +/- pairs.
std::vector<IntVec> cone_hrep(const std::vector<ZVec>& rays, const Cone& gens, int d) {
  std::vector<IntVec> G;
  for (int g : gens) G.push_back(to_int(rays[g]));
  ExtremeRays er = dual_cone(G, d);
  std::vector<IntVec> rows = er.rays;
  for (const auto& l : er.lineality) {
    rows.push_back(l);
    IntVec neg = l;
    for (auto& x : neg) x = -x;
    rows.push_back(neg);
  }
  return rows;
}

bool in_hrep(const std::vector<IntVec>& H, const RatVec& x, bool strict = false) {
  for (const auto& r : H) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += Rat(r[j]) * x[j];
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

std::size_t cone_rank(const std::vector<ZVec>& rays, const Cone& c, int d) {
  RatMatrix M(c.size(), d);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int j = 0; j < d; ++j) M(i, j) = Rat(static_cast<long>(rays[c[i]][j]));
  return rank(M);
}

RatVec to_rat_vec(const ZVec& v) {
  RatVec r;
  for (long long x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

}  // namespace

Fan::Fan(int d, std::vector<ZVec> rays, std::vector<Cone> max_cones)
    : d_(d), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (static_cast<int>(rays_[i].size()) != d_)
      throw InvalidInput("ray " + std::to_string(i) + " has wrong dimension");
    if (gcd_of(rays_[i]) != 1)
      throw InvalidInput("ray " + std::to_string(i) + " is not a primitive nonzero vector");
  }
  for (auto& c : max_cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InvalidInput("cone lists a ray twice");
    for (int g : c)
      if (g < 0 || g >= static_cast<int>(rays_.size()))
        throw InvalidInput("cone references ray index " + std::to_string(g) + " out of range");
  }
  check();
}

void Fan::check() {
  simplicial_ = true;
  for (const auto& c : max_cones_)
    if (cone_rank(rays_, c, d_) != c.size()) simplicial_ = false;

  std::set<Cone> all;
  all.insert(Cone{});
  if (simplicial_) {
    for (const auto& c : max_cones_) {
      const std::size_t k = c.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        Cone s;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) s.push_back(c[i]);
        all.insert(s);
      }
    }
  } else {
    for (int i = 0; i < static_cast<int>(rays_.size()); ++i) all.insert(Cone{i});
    for (const auto& c : max_cones_) all.insert(c);
  }
  cones_.assign(all.begin(), all.end());
  std::stable_sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  cone_lookup_.clear();
  for (std::size_t i = 0; i < cones_.size(); ++i) cone_lookup_[cones_[i]] = static_cast<int>(i);

  problems_.clear();
  if (d_ == 0) {
    complete_ = true;
    return;
  }
  bool full = !max_cones_.empty();
  for (const auto& c : max_cones_)
    if (cone_rank(rays_, c, d_) != static_cast<std::size_t>(d_)) full = false;

  std::vector<std::vector<IntVec>> H;
  for (const auto& c : max_cones_) H.push_back(cone_hrep(rays_, c, d_));

  bool ridges_ok = full && simplicial_;
  if (ridges_ok) {
    std::map<Cone, int> ridge_count;
    for (const auto& c : max_cones_)
      for (std::size_t i = 0; i < c.size(); ++i) {
        Cone r = c;
        r.erase(r.begin() + i);
        ++ridge_count[r];
      }
    for (const auto& [r, cnt] : ridge_count)
      if (cnt != 2) {
        ridges_ok = false;
        break;
      }
  }

  // Pairwise overlap test for fans of moderate size.
  bool overlap = false;
  if (max_cones_.size() <= 160) {
    for (std::size_t i = 0; i < max_cones_.size(); ++i)
      for (std::size_t j = i + 1; j < max_cones_.size(); ++j) {
        std::vector<IntVec> rows = H[i];
        rows.insert(rows.end(), H[j].begin(), H[j].end());
        ExtremeRays er = cone_extreme_rays(rows, d_);
        Cone common;
        std::set_intersection(max_cones_[i].begin(), max_cones_[i].end(), max_cones_[j].begin(),
                              max_cones_[j].end(), std::back_inserter(common));
        for (const auto& r : er.rays) {
          ZVec z = to_z(r);
          bool ok = false;
          for (int g : common)
            if (rays_[g] == z) ok = true;
          if (!ok) {
            overlap = true;
            std::string w;
            for (std::size_t t = 0; t < z.size(); ++t) w += (t ? "," : "") + std::to_string(z[t]);
            problems_.push_back("max cones " + std::to_string(i) + " and " + std::to_string(j) +
                                " overlap outside a common face (witness ray (" + w + "))");
            break;
          }
        }
        if (!er.lineality.empty()) overlap = true;
      }
  }

  bool covered = full;
  if (covered) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<long> coord(-100000, 100000);
    for (int s = 0; s < 12 && covered; ++s) {
      RatVec x(d_);
      for (int j = 0; j < d_; ++j) x[j] = coord(rng);
      int hits = 0;
      for (const auto& h : H)
        if (in_hrep(h, x)) ++hits;
      if (hits != 1) {
        covered = false;
        if (hits > 1) {
          overlap = true;
          problems_.push_back("a generic point lies in " + std::to_string(hits) + " max cones");
        }
      }
    }
  }
  complete_ = full && covered && !overlap && (ridges_ok || !simplicial_);
}

std::optional<int> Fan::cone_index(const Cone& c) const {
  auto it = cone_lookup_.find(c);
  if (it == cone_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Fan::cones_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (static_cast<int>(cones_[i].size()) == k) out.push_back(static_cast<int>(i));
  return out;
}

int Fan::locate(const RatVec& x) const {
  for (std::size_t i = 0; i < max_cones_.size(); ++i)
    if (in_hrep(cone_hrep(rays_, max_cones_[i], d_), x)) return static_cast<int>(i);
  return -1;
}

FanValidation validate_fan(const Fan& fan) {
  return FanValidation{fan.complete(), fan.simplicial(), fan.problems()};
}

Int cone_multiplicity(const Fan& fan, const Cone& cone) {
  if (cone.empty()) return 1;
  IntMatrix G(cone.size(), fan.dim());
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (int j = 0; j < fan.dim(); ++j) G(i, j) = static_cast<long>(fan.ray(cone[i])[j]);
  SmithForm f = smith_normal_form(G);
  Int m = 1;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (f.S(i, i) == 0) throw std::invalid_argument("cone generators are dependent");
    m *= f.S(i, i);
  }
  return m;
}

LatticePolytope polytope_from_divisor(const Fan& fan, const ZVec& a) {
  if (a.size() != fan.nrays())
    throw InvalidInput("divisor has " + std::to_string(a.size()) + " coefficients for " +
                       std::to_string(fan.nrays()) + " rays");
  return LatticePolytope::from_inequalities(fan.dim(), fan.rays(), a);
}

int iitaka_dimension(const Fan& fan, const ZVec& a) {
  LatticePolytope P = polytope_from_divisor(fan, a);
  return P.empty() ? -1 : P.dim();
}

std::optional<Cone> failing_cartier_cone(const Fan& fan, const ZVec& a) {
  if (!fan.simplicial()) throw std::invalid_argument("semiampleness test needs a simplicial fan");
  LatticePolytope P = polytope_from_divisor(fan, a);
  const int d = fan.dim();
  for (const auto& c : fan.max_cones()) {
    if (static_cast<int>(c.size()) != d) continue;
    if (P.empty()) return c;
    RatMatrix M(d, d);
    RatVec rhs(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) M(i, j) = Rat(static_cast<long>(fan.ray(c[i])[j]));
      rhs[i] = Rat(static_cast<long>(-a[c[i]]));
    }
    auto m = solve_linear(M, rhs);
    if (!m || !P.contains(*m)) return c;
  }
  return std::nullopt;
}

bool is_semiample(const Fan& fan, const ZVec& a) {
  if (polytope_from_divisor(fan, a).empty()) return false;
  return !failing_cartier_cone(fan, a);
}

SemiampleContraction::SemiampleContraction(const Fan& fan, const ZVec& a) : fan_(fan), a_(a) {
  delta_ = polytope_from_divisor(fan, a);
  if (delta_.empty()) throw InvalidInput("divisor polytope is empty");
  if (!is_semiample(fan, a)) throw InvalidInput("divisor is not semiample");
  kappa_ = delta_.dim();
  const int d = fan.dim();
  const int top = static_cast<int>(delta_.faces().size()) - 1;
  mx_ = kappa_ == 0 ? IntMatrix(0, d) : delta_.face_lattice_basis(top);

  const auto& verts = delta_.vertices();
  tight_.resize(fan.nrays());
  ray_face_.resize(fan.nrays());
  for (std::size_t k = 0; k < fan.nrays(); ++k) {
    for (int v = 0; v < static_cast<int>(verts.size()); ++v)
      if (dot(fan.ray(k), verts[v]) + Rat(static_cast<long>(a[k])) == 0) tight_[k].push_back(v);
    auto fi = delta_.face_index(tight_[k]);
    if (!fi) throw std::logic_error("ray face is not a face of the divisor polytope");
    ray_face_[k] = *fi;
  }

  // Facets of Delta_D give the rays of the target fan.
  std::vector<ZVec> trays;
  std::vector<int> facet_of_ray;
  for (int f = 0; f < nfaces(); ++f) {
    if (delta_.faces()[f].dim != kappa_ - 1) continue;
    int row = -1;
    for (int i : delta_.faces()[f].ineqs) {
      if (i < static_cast<int>(fan.nrays()) && tight_[i] == delta_.faces()[f].vertices) {
        row = i;
        break;
      }
    }
    if (row < 0) throw std::logic_error("facet without a defining ray");
    ZVec n = project(fan.ray(row));
    long long g = gcd_of(n);
    for (auto& x : n) x /= g;
    trays.push_back(n);
    facet_of_ray.push_back(f);
  }
  target_cones_.resize(nfaces());
  std::vector<Cone> tmax;
  for (int f = 0; f < nfaces(); ++f) {
    const auto& fv = delta_.faces()[f].vertices;
    for (std::size_t r = 0; r < facet_of_ray.size(); ++r) {
      const auto& gv = delta_.faces()[facet_of_ray[r]].vertices;
      if (std::includes(gv.begin(), gv.end(), fv.begin(), fv.end())) target_cones_[f].push_back(static_cast<int>(r));
    }
    if (delta_.faces()[f].dim == 0) tmax.push_back(target_cones_[f]);
  }
  target_ = Fan(kappa_, trays, kappa_ == 0 ? std::vector<Cone>{Cone{}} : tmax);
}

ZVec SemiampleContraction::project(const ZVec& v) const {
  ZVec out(kappa_);
  for (int j = 0; j < kappa_; ++j) {
    Int s = 0;
    for (std::size_t t = 0; t < v.size(); ++t) s += mx_(j, t) * Int(static_cast<long>(v[t]));
    out[j] = s.get_si();
  }
  return out;
}

int SemiampleContraction::smallest_face(const Cone& tau) const {
  std::vector<int> F(delta_.vertices().size());
  for (std::size_t v = 0; v < F.size(); ++v) F[v] = static_cast<int>(v);
  for (int k : tau) {
    std::vector<int> G;
    std::set_intersection(F.begin(), F.end(), tight_[k].begin(), tight_[k].end(), std::back_inserter(G));
    F = std::move(G);
  }
  auto fi = delta_.face_index(F);
  if (!fi) throw std::logic_error("cone image has no carrier face");
  return *fi;
}

bool SemiampleContraction::ray_in(int k, int face) const {
  const auto& fv = delta_.faces()[face].vertices;
  return std::includes(tight_[k].begin(), tight_[k].end(), fv.begin(), fv.end());
}

std::vector<int> SemiampleContraction::interior_rays(int face) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < fan_.nrays(); ++k)
    if (ray_face_[k] == face) out.push_back(static_cast<int>(k));
  return out;
}

ZVec SemiampleContraction::sigma_representative(int face) const {
  const int d = fan_.dim();
  std::vector<int> K;
  for (std::size_t k = 0; k < fan_.nrays(); ++k)
    if (ray_in(static_cast<int>(k), face)) K.push_back(static_cast<int>(k));
  // Look for an integral m with <m, e_k> = -a_k on K.
  ZVec m(d, 0);
  bool found = false;
  for (int v : delta_.faces()[face].vertices) {
    const RatVec& x = delta_.vertices()[v];
    if (std::all_of(x.begin(), x.end(), [](const Rat& q) { return q.get_den() == 1; })) {
      for (int j = 0; j < d; ++j) m[j] = x[j].get_num().get_si();
      found = true;
      break;
    }
  }
  if (!found && !K.empty()) {
    IntMatrix E(K.size(), d);
    for (std::size_t i = 0; i < K.size(); ++i)
      for (int j = 0; j < d; ++j) E(i, j) = static_cast<long>(fan_.ray(K[i])[j]);
    SmithForm sf = smith_normal_form(E);
    // E = U^-1 S V^-1; solve S y = U c, m = V y.
    IntVec c(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) c[i] = Int(static_cast<long>(-a_[K[i]]));
    IntVec uc(K.size());
    for (std::size_t i = 0; i < K.size(); ++i)
      for (std::size_t j = 0; j < K.size(); ++j) uc[i] += sf.U(i, j) * c[j];
    IntVec y(d);
    for (std::size_t i = 0; i < K.size(); ++i) {
      Int s = i < static_cast<std::size_t>(d) ? sf.S(i, i) : Int(0);
      if (s == 0) {
        if (uc[i] != 0) throw InvalidInput("divisor is not Cartier along the cone");
        continue;
      }
      if (uc[i] % s != 0) throw InvalidInput("divisor is not Cartier along the cone");
      y[i] = uc[i] / s;
    }
    for (int j = 0; j < d; ++j) {
      Int s = 0;
      for (int t = 0; t < d; ++t) s += sf.V(j, t) * y[t];
      m[j] = s.get_si();
    }
  }
  ZVec b(fan_.nrays());
  for (std::size_t k = 0; k < fan_.nrays(); ++k) b[k] = a_[k] + dot(m, fan_.ray(k));
  return b;
}

IntMatrix SemiampleContraction::face_lattice(int face) const {
  if (delta_.faces()[face].dim == 0) return IntMatrix(0, fan_.dim());
  return delta_.face_lattice_basis(face);
}

Fan regular_subdivision(const Fan& normal_fan, const std::vector<ZVec>& points) {
  const int d = normal_fan.dim();
  std::vector<ZVec> pts = points;
  for (const auto& r : normal_fan.rays()) pts.push_back(r);
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) throw InvalidInput("point dimension mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (gcd_of(pts[i]) != 1) throw InvalidInput("subdivision point " + std::to_string(i) + " is not primitive");

  LatticePolytope Q = LatticePolytope::from_points(d, pts);
  if (Q.dim() != d) throw InvalidInput("points do not span the lattice");
  const int top = static_cast<int>(Q.faces().size()) - 1;
  std::vector<int> carrier(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    carrier[i] = Q.carrier_face(pts[i]);
    if (carrier[i] == top) throw InvalidInput("subdivision point is not on the boundary");
  }

  std::vector<Cone> cones;
  for (int f = 0; f <= top; ++f) {
    if (Q.faces()[f].dim != d - 1) continue;
    const auto& fv = Q.faces()[f].vertices;
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& cv = Q.faces()[carrier[i]].vertices;
      if (std::includes(fv.begin(), fv.end(), cv.begin(), cv.end())) on.push_back(static_cast<int>(i));
    }
    IntMatrix B = Q.face_lattice_basis(f);
    RatMatrix Bt = to_rat(B.transpose());
    std::vector<RatVec> local, lifted;
    for (int i : on) {
      RatVec diff(d);
      for (int j = 0; j < d; ++j) diff[j] = Rat(static_cast<long>(pts[i][j] - pts[on[0]][j]));
      RatVec y = *solve_linear(Bt, diff);
      local.push_back(y);
      RatVec l = y;
      long long h = dot(pts[i], pts[i]);
      l.emplace_back(static_cast<long>(h));
      lifted.push_back(std::move(l));
    }
    auto emit = [&](const std::vector<int>& cell) {
      if (static_cast<int>(cell.size()) == d) {
        Cone c;
        for (int t : cell) c.push_back(on[t]);
        std::sort(c.begin(), c.end());
        cones.push_back(c);
        return;
      }
      std::vector<RatVec> cp;
      for (int t : cell) cp.push_back(local[t]);
      LatticePolytope C = LatticePolytope::from_vertices(d - 1, cp);
      std::vector<int> global(C.vertices().size());
      std::vector<long> prio(C.vertices().size());
      for (std::size_t v = 0; v < C.vertices().size(); ++v) {
        auto it = std::find(cp.begin(), cp.end(), C.vertices()[v]);
        global[v] = on[cell[it - cp.begin()]];
        prio[v] = global[v];
      }
      for (const auto& s : C.pulling_triangulation(static_cast<int>(C.faces().size()) - 1, &prio)) {
        Cone c;
        for (int v : s) c.push_back(global[v]);
        std::sort(c.begin(), c.end());
        cones.push_back(c);
      }
    };
    LatticePolytope L = LatticePolytope::from_vertices(d, lifted);
    if (L.dim() < d) {
      // Heights are affine on the facet: a single cell.
      std::vector<int> all(on.size());
      for (std::size_t t = 0; t < on.size(); ++t) all[t] = static_cast<int>(t);
      emit(all);
      continue;
    }
    for (int row : L.facet_ineqs()) {
      if (L.ineq_normals()[row][d - 1] <= 0) continue;
      std::vector<int> cell;
      for (std::size_t t = 0; t < lifted.size(); ++t)
        if (dot(L.ineq_normals()[row], lifted[t]) + L.ineq_offsets()[row] == 0) cell.push_back(static_cast<int>(t));
      emit(cell);
    }
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());

  // Refinement check against the input fan.
  std::vector<std::vector<IntVec>> H;
  for (const auto& c : normal_fan.max_cones()) H.push_back(cone_hrep(normal_fan.rays(), c, d));
  for (const auto& c : cones) {
    RatVec center(d);
    for (int g : c)
      for (int j = 0; j < d; ++j) center[j] += Rat(static_cast<long>(pts[g][j]));
    bool inside = false;
    for (const auto& h : H) {
      if (!in_hrep(h, center)) continue;
      inside = std::all_of(c.begin(), c.end(), [&](int g) { return in_hrep(h, to_rat_vec(pts[g])); });
      if (inside) break;
    }
    if (!inside) throw InvalidInput("subdivision does not refine the given fan");
  }
  return Fan(d, pts, cones);
}

}  // namespace th

#include "torichodge/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace th {

long long dot(const ZVec& a, const ZVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const ZVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) s += Rat(static_cast<long>(a[i])) * b[i];
  return s;
}

long long gcd_of(const ZVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

bool is_primitive(const ZVec& v) { return gcd_of(v) == 1; }

IntVec to_int(const ZVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

ZVec to_z(const IntVec& v) {
  ZVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("lattice coordinate exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Int idot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVec combine(const Int& s, const IntVec& x, const Int& t, const IntVec& y) {
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] + t * y[i];
  make_primitive(out);
  return out;
}

struct DDRay {
  IntVec x;
  Bits zero;
};

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }

}  // namespace

ExtremeRays cone_extreme_rays(const std::vector<IntVec>& C, std::size_t k) {
  const std::size_t m = C.size();
  const std::size_t words = (m + 63) / 64 + 1;
  std::vector<IntVec> L;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e(k);
    e[i] = 1;
    L.push_back(e);
  }
  std::vector<DDRay> R;

  for (std::size_t i = 0; i < m; ++i) {
    const IntVec& a = C[i];
    std::size_t li = L.size();
    for (std::size_t j = 0; j < L.size(); ++j)
      if (idot(a, L[j]) != 0) {
        li = j;
        break;
      }
    if (li < L.size()) {
      IntVec l0 = L[li];
      Int s = idot(a, l0);
      if (s < 0) {
        for (auto& x : l0) x = -x;
        s = -s;
      }
      std::vector<IntVec> L2;
      for (std::size_t j = 0; j < L.size(); ++j) {
        if (j == li) continue;
        Int t = idot(a, L[j]);
        L2.push_back(t == 0 ? L[j] : combine(s, L[j], -t, l0));
      }
      for (auto& r : R) {
        Int t = idot(a, r.x);
        if (t != 0) r.x = combine(s, r.x, -t, l0);
        set_bit(r.zero, i);
      }
      DDRay nr{l0, Bits(words, 0)};
      for (std::size_t j = 0; j < i; ++j) set_bit(nr.zero, j);
      R.push_back(std::move(nr));
      L = std::move(L2);
      continue;
    }

    std::vector<Int> val(R.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < R.size(); ++j) {
      val[j] = idot(a, R[j].x);
      if (val[j] > 0) pos.push_back(j);
      else if (val[j] < 0) neg.push_back(j);
      else set_bit(R[j].zero, i);
    }
    if (neg.empty()) continue;

    std::vector<DDRay> next;
    for (std::size_t j = 0; j < R.size(); ++j)
      if (val[j] >= 0) next.push_back(R[j]);
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = R[p].zero[w] & R[n].zero[w];
        bool adjacent = true;
        for (std::size_t r = 0; r < R.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool contains = true;
          for (std::size_t w = 0; w < words; ++w)
            if (common[w] & ~R[r].zero[w]) {
              contains = false;
              break;
            }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr{combine(val[p], R[n].x, -val[n], R[p].x), common};
        set_bit(nr.zero, i);
        next.push_back(std::move(nr));
      }
    R = std::move(next);
  }

  ExtremeRays out;
  for (auto& r : R) out.rays.push_back(r.x);
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  out.lineality = L;
  return out;
}

ExtremeRays dual_cone(const std::vector<IntVec>& gens, std::size_t k) {
  return cone_extreme_rays(gens, k);
}

namespace {

std::size_t affine_rank(const std::vector<RatVec>& verts, const std::vector<int>& idx, int d) {
  if (idx.size() <= 1) return 0;
  RatMatrix M(idx.size() - 1, d);
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (int j = 0; j < d; ++j) M(i - 1, j) = verts[idx[i]][j] - verts[idx[0]][j];
  return rank(M);
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

LatticePolytope LatticePolytope::from_inequalities(int d, const std::vector<ZVec>& A,
                                                   const std::vector<long long>& b) {
  std::vector<Rat> rb;
  for (long long x : b) rb.emplace_back(static_cast<long>(x));
  return from_inequalities(d, A, rb);
}

LatticePolytope LatticePolytope::from_inequalities(int d, const std::vector<ZVec>& A,
                                                   const std::vector<Rat>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("inequality count mismatch");
  LatticePolytope P;
  P.d_ = d;
  P.A_ = A;
  P.b_ = b;
  std::vector<IntVec> C;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (static_cast<int>(A[i].size()) != d) throw std::invalid_argument("inequality dimension mismatch");
    Int den = b[i].get_den();
    IntVec row;
    for (long long x : A[i]) row.push_back(Int(static_cast<long>(x)) * den);
    row.push_back(b[i].get_num());
    C.push_back(std::move(row));
  }
  IntVec t(d + 1);
  t[d] = 1;
  C.push_back(t);
  ExtremeRays er = cone_extreme_rays(C, d + 1);
  bool bounded_dir = !er.lineality.empty();
  for (const auto& r : er.rays) {
    if (r[d] == 0) {
      bounded_dir = true;
      continue;
    }
    RatVec v(d);
    for (int j = 0; j < d; ++j) {
      v[j] = Rat(r[j], r[d]);
      v[j].canonicalize();
    }
    P.vertices_.push_back(std::move(v));
  }
  if (P.vertices_.empty()) {
    P.dim_ = -1;
    return P;
  }
  if (bounded_dir) throw std::invalid_argument("polytope is unbounded");
  std::sort(P.vertices_.begin(), P.vertices_.end(), lex_less);
  P.build_faces();
  return P;
}

LatticePolytope LatticePolytope::from_points(int d, const std::vector<ZVec>& pts) {
  std::vector<RatVec> rp;
  for (const auto& p : pts) {
    RatVec v;
    for (long long x : p) v.emplace_back(static_cast<long>(x));
    rp.push_back(std::move(v));
  }
  return from_vertices(d, rp);
}

LatticePolytope LatticePolytope::from_vertices(int d, const std::vector<RatVec>& pts_in) {
  LatticePolytope P;
  P.d_ = d;
  std::vector<RatVec> pts = pts_in;
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) throw std::invalid_argument("point dimension mismatch");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return P;

  // Equations of the affine hull.
  std::vector<ZVec> eqA;
  std::vector<Rat> eqb;
  if (pts.size() > 1) {
    RatMatrix D(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i)
      for (int j = 0; j < d; ++j) D(i - 1, j) = pts[i][j] - pts[0][j];
    // Clear denominators row by row.
    IntMatrix Di(D.rows(), d);
    for (std::size_t i = 0; i < D.rows(); ++i) {
      Int l = 1;
      for (int j = 0; j < d; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), D(i, j).get_den_mpz_t());
      for (int j = 0; j < d; ++j) Di(i, j) = Int(D(i, j) * l);
    }
    IntMatrix E = kernel_saturation(Di);
    for (std::size_t r = 0; r < E.rows(); ++r) {
      ZVec e = to_z(E.row(r));
      eqA.push_back(e);
      eqb.push_back(-dot(e, pts[0]));
    }
  } else {
    for (int j = 0; j < d; ++j) {
      ZVec e(d);
      e[j] = 1;
      eqA.push_back(e);
      eqb.push_back(-pts[0][j]);
    }
  }

  // Valid inequalities (a, c): <a, v> + c >= 0 for all v.
  std::vector<IntVec> C;
  for (const auto& p : pts) {
    Int l = 1;
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec row;
    for (const auto& x : p) row.push_back(Int(x * l));
    row.push_back(l);
    C.push_back(std::move(row));
  }
  ExtremeRays er = cone_extreme_rays(C, d + 1);
  std::vector<ZVec> A;
  std::vector<Rat> b;
  for (const auto& r : er.rays) {
    ZVec a = to_z(IntVec(r.begin(), r.begin() + d));
    long long g = gcd_of(a);
    if (g == 0) continue;
    for (auto& x : a) x /= g;
    Rat c = Rat(r[d]) / Rat(static_cast<long>(g));
    c.canonicalize();
    // Keep only inequalities that define proper nonempty faces.
    std::size_t tight = 0;
    for (const auto& p : pts)
      if (dot(a, p) + c == 0) ++tight;
    if (tight == 0 || tight == pts.size()) continue;
    A.push_back(a);
    b.push_back(c);
  }
  for (std::size_t i = 0; i < eqA.size(); ++i) {
    A.push_back(eqA[i]);
    b.push_back(eqb[i]);
    ZVec neg = eqA[i];
    for (auto& x : neg) x = -x;
    A.push_back(neg);
    b.push_back(-eqb[i]);
  }

  // Vertices: points whose tight inequality set pins them down uniquely.
  std::vector<RatVec> verts;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    bool unique = true;
    for (std::size_t q = 0; q < pts.size() && unique; ++q) {
      if (q == p) continue;
      bool same = true;
      for (std::size_t i = 0; i < A.size() && same; ++i)
        if (dot(A[i], pts[p]) + b[i] == 0 && dot(A[i], pts[q]) + b[i] != 0) same = false;
      if (same) unique = false;
    }
    if (unique) verts.push_back(pts[p]);
  }
  P.vertices_ = std::move(verts);
  P.A_ = std::move(A);
  P.b_ = std::move(b);
  P.build_faces();
  return P;
}

void LatticePolytope::build_faces() {
  const int nv = static_cast<int>(vertices_.size());
  std::vector<int> all(nv);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> tight(A_.size());
  for (std::size_t i = 0; i < A_.size(); ++i)
    for (int v = 0; v < nv; ++v)
      if (dot(A_[i], vertices_[v]) + b_[i] == 0) tight[i].push_back(v);

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  seen.insert(all);
  queue.push_back(all);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> F = queue[qi];
    for (const auto& T : tight) {
      if (T.empty() || static_cast<int>(T.size()) == nv) continue;
      std::vector<int> G;
      std::set_intersection(F.begin(), F.end(), T.begin(), T.end(), std::back_inserter(G));
      if (G.empty() || !seen.insert(G).second) continue;
      queue.push_back(G);
    }
  }
  faces_.clear();
  for (const auto& F : seen) {
    Face f;
    f.vertices = F;
    f.dim = static_cast<int>(affine_rank(vertices_, F, d_));
    for (std::size_t i = 0; i < A_.size(); ++i)
      if (std::includes(tight[i].begin(), tight[i].end(), F.begin(), F.end()))
        f.ineqs.push_back(static_cast<int>(i));
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  face_lookup_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i) face_lookup_[faces_[i].vertices] = static_cast<int>(i);
  dim_ = faces_.back().dim;
}

std::optional<int> LatticePolytope::face_index(const std::vector<int>& vs) const {
  auto it = face_lookup_.find(vs);
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> LatticePolytope::facet_ineqs() const {
  std::vector<int> out;
  std::set<std::vector<int>> used;
  for (std::size_t i = 0; i < A_.size(); ++i) {
    std::vector<int> T;
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
      if (dot(A_[i], vertices_[v]) + b_[i] == 0) T.push_back(v);
    auto fi = face_index(T);
    if (!fi || faces_[*fi].dim != dim_ - 1) continue;
    if (used.insert(T).second) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool LatticePolytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (x.get_den() != 1) return false;
  return true;
}

bool LatticePolytope::contains(const ZVec& m) const {
  if (empty()) return false;
  for (std::size_t i = 0; i < A_.size(); ++i)
    if (Rat(static_cast<long>(dot(A_[i], m))) + b_[i] < 0) return false;
  return true;
}

bool LatticePolytope::contains(const RatVec& m) const {
  if (empty()) return false;
  for (std::size_t i = 0; i < A_.size(); ++i)
    if (dot(A_[i], m) + b_[i] < 0) return false;
  return true;
}

bool LatticePolytope::interior_contains(const ZVec& m) const {
  if (!contains(m)) return false;
  return carrier_face(m) == static_cast<int>(faces_.size()) - 1;
}

std::vector<ZVec> LatticePolytope::vertices_int() const {
  std::vector<ZVec> out;
  for (const auto& v : vertices_) {
    ZVec z;
    for (const auto& x : v) {
      if (x.get_den() != 1) throw std::invalid_argument("polytope has a non-integral vertex");
      z.push_back(x.get_num().get_si());
    }
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<ZVec> LatticePolytope::lattice_points() const {
  std::vector<ZVec> out;
  if (empty()) return out;
  const int d = d_;
  std::vector<long long> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Rat mn = vertices_[0][j], mx = vertices_[0][j];
    for (const auto& v : vertices_) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    Int f, c;
    mpz_cdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[j] = f.get_si();
    hi[j] = c.get_si();
    if (lo[j] > hi[j]) return out;
  }
  const std::size_t m = A_.size();
  // A m >= ceil(-b) for integer points.
  std::vector<long long> need(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat nb = -b_[i];
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), nb.get_num_mpz_t(), nb.get_den_mpz_t());
    need[i] = c.get_si();
  }
  // rest[i][j] = max over the box of sum_{j' >= j} A_ij' m_j'.
  std::vector<std::vector<long long>> rest(m, std::vector<long long>(d + 1, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = d - 1; j >= 0; --j)
      rest[i][j] = rest[i][j + 1] + std::max(A_[i][j] * lo[j], A_[i][j] * hi[j]);
  std::vector<long long> partial(m, 0);
  ZVec cur(d);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == d) {
      for (std::size_t i = 0; i < m; ++i)
        if (partial[i] < need[i]) return;
      out.push_back(cur);
      return;
    }
    for (long long x = lo[j]; x <= hi[j]; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < m; ++i) {
        partial[i] += A_[i][j] * x;
        if (partial[i] + rest[i][j + 1] < need[i]) ok = false;
      }
      cur[j] = x;
      if (ok) self(self, j + 1);
      for (std::size_t i = 0; i < m; ++i) partial[i] -= A_[i][j] * x;
    }
  };
  rec(rec, 0);
  return out;
}

int LatticePolytope::carrier_face(const RatVec& m) const {
  std::vector<int> F(vertices_.size());
  std::iota(F.begin(), F.end(), 0);
  for (std::size_t i = 0; i < A_.size(); ++i) {
    if (dot(A_[i], m) + b_[i] != 0) continue;
    std::vector<int> G;
    for (int v : F)
      if (dot(A_[i], vertices_[v]) + b_[i] == 0) G.push_back(v);
    F = std::move(G);
  }
  auto fi = face_index(F);
  if (!fi) throw std::logic_error("carrier face not found");
  return *fi;
}

int LatticePolytope::carrier_face(const ZVec& m) const {
  RatVec r;
  for (long long x : m) r.emplace_back(static_cast<long>(x));
  return carrier_face(r);
}

IntMatrix LatticePolytope::face_lattice_basis(int face) const {
  const auto& vs = faces_[face].vertices;
  IntMatrix D(vs.size() - 1, d_);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    RatVec diff(d_);
    Int l = 1;
    for (int j = 0; j < d_; ++j) {
      diff[j] = vertices_[vs[i]][j] - vertices_[vs[0]][j];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), diff[j].get_den_mpz_t());
    }
    for (int j = 0; j < d_; ++j) D(i - 1, j) = Int(diff[j] * l);
  }
  if (D.rows() == 0) return IntMatrix(0, d_);
  return saturate_rows(D);
}

std::vector<std::vector<int>> LatticePolytope::pulling_triangulation(int face,
                                                                     const std::vector<long>* priority) const {
  TriMemo memo;
  return pull(face, priority, memo);
}

const std::vector<std::vector<int>>& LatticePolytope::pull(int face, const std::vector<long>* priority,
                                                           TriMemo& memo) const {
  auto it = memo.find(face);
  if (it != memo.end()) return it->second;
  const Face& F = faces_[face];
  std::vector<std::vector<int>> out;
  if (F.dim == 0) {
    out.push_back({F.vertices[0]});
  } else {
    int apex = F.vertices[0];
    if (priority)
      for (int v : F.vertices)
        if ((*priority)[v] < (*priority)[apex]) apex = v;
    for (std::size_t g = 0; g < faces_.size(); ++g) {
      const Face& G = faces_[g];
      if (G.dim != F.dim - 1) continue;
      if (!std::includes(F.vertices.begin(), F.vertices.end(), G.vertices.begin(), G.vertices.end())) continue;
      if (std::binary_search(G.vertices.begin(), G.vertices.end(), apex)) continue;
      for (auto s : pull(static_cast<int>(g), priority, memo)) {
        s.insert(s.begin(), apex);
        out.push_back(std::move(s));
      }
    }
  }
  return memo.emplace(face, std::move(out)).first->second;
}

Int LatticePolytope::normalized_volume(int face) const {
  const Face& F = faces_[face];
  if (F.dim == 0) return 1;
  IntMatrix B = face_lattice_basis(face);
  const std::size_t k = B.rows();
  RatMatrix Bt = to_rat(B.transpose());
  auto coords = [&](int v) {
    RatVec diff(d_);
    for (int j = 0; j < d_; ++j) diff[j] = vertices_[v][j] - vertices_[F.vertices[0]][j];
    auto y = solve_linear(Bt, diff);
    if (!y) throw std::logic_error("vertex outside its face lattice");
    return *y;
  };
  std::map<int, RatVec> cache;
  auto get = [&](int v) -> const RatVec& {
    auto it2 = cache.find(v);
    if (it2 == cache.end()) it2 = cache.emplace(v, coords(v)).first;
    return it2->second;
  };
  Int total = 0;
  for (const auto& s : pulling_triangulation(face)) {
    RatMatrix M(k, k);
    const RatVec& y0 = get(s[0]);
    for (std::size_t i = 1; i <= k; ++i) {
      const RatVec& yi = get(s[i]);
      for (std::size_t j = 0; j < k; ++j) M(i - 1, j) = yi[j] - y0[j];
    }
    Rat det = determinant(M);
    total += abs(det.get_num());
  }
  return total;
}

LatticePolytope LatticePolytope::scaled(long long k) const {
  if (k <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rat> b;
  for (const auto& x : b_) b.push_back(x * Rat(static_cast<long>(k)));
  return from_inequalities(d_, A_, b);
}

LatticePolytope polar_dual(const LatticePolytope& P) {
  if (P.empty() || P.dim() != P.ambient_dim())
    throw std::invalid_argument("polar dual needs a full-dimensional polytope");
  std::vector<RatVec> pts;
  for (int i : P.facet_ineqs()) {
    const Rat& c = P.ineq_offsets()[i];
    if (c <= 0) throw std::invalid_argument("origin is not an interior point");
    RatVec u;
    for (long long x : P.ineq_normals()[i]) u.push_back(Rat(static_cast<long>(x)) / c);
    pts.push_back(std::move(u));
  }
  return LatticePolytope::from_vertices(P.ambient_dim(), pts);
}

bool is_reflexive(const LatticePolytope& P) {
  if (P.empty() || P.dim() != P.ambient_dim() || !P.is_lattice()) return false;
  for (int i : P.facet_ineqs())
    if (P.ineq_offsets()[i] <= 0) return false;
  return polar_dual(P).is_lattice();
}

int dual_face_index(const LatticePolytope& P, const LatticePolytope& Q, int f) {
  const Face& F = P.faces()[f];
  std::vector<int> qv;
  for (int i : P.facet_ineqs()) {
    if (!std::binary_search(F.ineqs.begin(), F.ineqs.end(), i)) continue;
    RatVec u;
    for (long long x : P.ineq_normals()[i]) u.push_back(Rat(static_cast<long>(x)) / P.ineq_offsets()[i]);
    auto it = std::find(Q.vertices().begin(), Q.vertices().end(), u);
    if (it == Q.vertices().end()) throw std::logic_error("dual vertex not found");
    qv.push_back(static_cast<int>(it - Q.vertices().begin()));
  }
  if (qv.empty()) return -1;
  std::sort(qv.begin(), qv.end());
  auto fi = Q.face_index(qv);
  if (!fi) throw std::logic_error("dual face not found");
  return *fi;
}

std::vector<FaceDatum> face_data(const LatticePolytope& P, const LatticePolytope* dual) {
  std::vector<FaceDatum> out(P.faces().size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    out[f].face = static_cast<int>(f);
    out[f].dim = P.faces()[f].dim;
    out[f].volume = P.normalized_volume(static_cast<int>(f));
    if (dual) out[f].dual_face = dual_face_index(P, *dual, static_cast<int>(f));
  }
  for (const auto& m : P.lattice_points()) {
    int c = P.carrier_face(m);
    out[c].interior_points.push_back(m);
    const auto& cv = P.faces()[c].vertices;
    for (std::size_t f = 0; f < out.size(); ++f) {
      const auto& fv = P.faces()[f].vertices;
      if (std::includes(fv.begin(), fv.end(), cv.begin(), cv.end())) out[f].points.push_back(m);
    }
  }
  return out;
}

}  // namespace th

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torichodge/linalg.hpp"

namespace th {

// Lattice points and rays are small; plain 64-bit coordinates.
using ZVec = std::vector<long long>;

long long dot(const ZVec& a, const ZVec& b);
Rat dot(const ZVec& a, const RatVec& b);
long long gcd_of(const ZVec& v);
bool is_primitive(const ZVec& v);
IntVec to_int(const ZVec& v);
ZVec to_z(const IntVec& v);

struct ExtremeRays {
  std::vector<IntVec> rays;       // primitive, canonical order
  std::vector<IntVec> lineality;  // basis; empty for pointed cones
};

// Double description of {x in Q^k : C x >= 0}.
ExtremeRays cone_extreme_rays(const std::vector<IntVec>& C, std::size_t k);

// Generators of the dual cone {y : <y, g> >= 0 for all generators g}.
ExtremeRays dual_cone(const std::vector<IntVec>& gens, std::size_t k);

struct Face {
  std::vector<int> vertices;  // sorted indices into LatticePolytope::vertices()
  std::vector<int> ineqs;     // H-rep rows tight on the whole face
  int dim = 0;
};

class LatticePolytope {
 public:
  LatticePolytope() = default;

  // {m : A m + b >= 0}; throws std::invalid_argument when unbounded.
  static LatticePolytope from_inequalities(int d, const std::vector<ZVec>& A, const std::vector<Rat>& b);
  static LatticePolytope from_inequalities(int d, const std::vector<ZVec>& A, const std::vector<long long>& b);
  static LatticePolytope from_vertices(int d, const std::vector<RatVec>& pts);
  static LatticePolytope from_points(int d, const std::vector<ZVec>& pts);

  int ambient_dim() const { return d_; }
  int dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<ZVec>& ineq_normals() const { return A_; }
  const std::vector<Rat>& ineq_offsets() const { return b_; }
  const std::vector<Face>& faces() const { return faces_; }  // ordered by (dim, vertices); last = polytope
  std::optional<int> face_index(const std::vector<int>& vertex_set) const;
  // Rows whose tight set is a facet (codimension one face).
  std::vector<int> facet_ineqs() const;

  bool is_lattice() const;
  bool contains(const ZVec& m) const;
  bool contains(const RatVec& m) const;
  bool interior_contains(const ZVec& m) const;  // strict inequalities on every non-equation row
  std::vector<ZVec> lattice_points() const;
  std::vector<ZVec> vertices_int() const;  // throws if not a lattice polytope

  // Smallest face containing the point (index into faces()).
  int carrier_face(const RatVec& m) const;
  int carrier_face(const ZVec& m) const;

  // Lattice volume in aff(face) with unit simplex = 1; a vertex has volume 1.
  Int normalized_volume(int face) const;
  Int normalized_volume() const { return normalized_volume(static_cast<int>(faces_.size()) - 1); }

  // Lattice of aff(face) - v0 intersected with Z^d: HNF basis rows.
  IntMatrix face_lattice_basis(int face) const;

  LatticePolytope scaled(long long k) const;

  // Pulling triangulation of a face: the apex of each step is the vertex with the
  // smallest priority (vertex index when no priorities are given).
  std::vector<std::vector<int>> pulling_triangulation(int face, const std::vector<long>* priority = nullptr) const;

 private:
  void build_faces();
  using TriMemo = std::map<int, std::vector<std::vector<int>>>;
  const std::vector<std::vector<int>>& pull(int face, const std::vector<long>* priority, TriMemo& memo) const;

  int d_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<ZVec> A_;
  std::vector<Rat> b_;
  std::vector<Face> faces_;
  std::map<std::vector<int>, int> face_lookup_;
};

// Polar dual {u : <m, u> >= -1 for m in P}; P must contain 0 in its interior.
LatticePolytope polar_dual(const LatticePolytope& P);
bool is_reflexive(const LatticePolytope& P);

struct FaceDatum {
  int face = 0;
  int dual_face = -1;  // index into the dual polytope's faces (reflexive input only)
  int dim = 0;
  std::vector<ZVec> points;
  std::vector<ZVec> interior_points;
  Int volume;
};

// Per-face lattice data. When dual is given, the dual face map is filled in.
std::vector<FaceDatum> face_data(const LatticePolytope& P, const LatticePolytope* dual = nullptr);

// Dual face index in Q of face f of P, for a reflexive pair (P, Q = polar_dual(P)).
int dual_face_index(const LatticePolytope& P, const LatticePolytope& Q, int f);

}  // namespace th

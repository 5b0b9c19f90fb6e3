#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torichodge/polytope.hpp"

namespace th {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Cone = std::vector<int>;  // sorted ray indices

class Fan {
 public:
  Fan() = default;
  // Throws InvalidInput on non-primitive rays or bad indices.
  Fan(int d, std::vector<ZVec> rays, std::vector<Cone> max_cones);

  int dim() const { return d_; }
  std::size_t nrays() const { return rays_.size(); }
  const std::vector<ZVec>& rays() const { return rays_; }
  const ZVec& ray(int i) const { return rays_[i]; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  bool simplicial() const { return simplicial_; }
  bool complete() const { return complete_; }

  // All cones including the zero cone, ordered by (dim, generators). Simplicial fans only.
  const std::vector<Cone>& cones() const { return cones_; }
  std::optional<int> cone_index(const Cone& c) const;
  std::vector<int> cones_of_dim(int k) const;

  // Max cone containing x (boundary allowed); -1 if none.
  int locate(const RatVec& x) const;

  std::vector<std::string> problems() const { return problems_; }

 private:
  void check();

  int d_ = 0;
  std::vector<ZVec> rays_;
  std::vector<Cone> max_cones_;
  bool simplicial_ = false;
  bool complete_ = false;
  std::vector<Cone> cones_;
  std::map<Cone, int> cone_lookup_;
  std::vector<std::string> problems_;
};

struct FanValidation {
  bool complete = false;
  bool simplicial = false;
  std::vector<std::string> problems;  // overlap witnesses and similar
};

FanValidation validate_fan(const Fan& fan);

Int cone_multiplicity(const Fan& fan, const Cone& cone);

// Delta_D = {m : <m, e_i> >= -a_i}.
LatticePolytope polytope_from_divisor(const Fan& fan, const ZVec& a);
int iitaka_dimension(const Fan& fan, const ZVec& a);  // -1 when Delta_D is empty
bool is_semiample(const Fan& fan, const ZVec& a);
// A maximal cone whose Cartier datum m_sigma lies outside Delta_D, if any.
std::optional<Cone> failing_cartier_cone(const Fan& fan, const ZVec& a);

// Contraction defined by a semiample divisor. Cones of the target fan are indexed by
// faces of Delta_D: the face Gamma corresponds to the normal cone of Gamma.
class SemiampleContraction {
 public:
  SemiampleContraction(const Fan& fan, const ZVec& a);

  const Fan& fan() const { return fan_; }
  const ZVec& divisor() const { return a_; }
  const LatticePolytope& polytope() const { return delta_; }
  int kappa() const { return kappa_; }

  // Rows u_1..u_kappa: basis of M_X; pi(v) = (<u_j, v>)_j.
  const IntMatrix& mx_basis() const { return mx_; }
  ZVec project(const ZVec& v) const;
  const Fan& target_fan() const { return target_; }

  // Face of Delta_D for each ray: argmin of <., e_k>.
  int ray_face(int k) const { return ray_face_[k]; }
  // Face Gamma_sigma of the smallest target cone containing pi(int tau).
  int smallest_face(const Cone& tau) const;

  // Target cones as faces of Delta_D, in face order. Index 0..nfaces-1.
  int nfaces() const { return static_cast<int>(delta_.faces().size()); }
  int cone_dim(int face) const { return kappa_ - delta_.faces()[face].dim; }
  int i_sigma(int face) const { return delta_.faces()[face].dim; }
  int zero_cone() const { return nfaces() - 1; }
  // pi(rho_k) lies in the target cone of `face`.
  bool ray_in(int k, int face) const;
  // Rays mapped into the interior of the target cone of `face`.
  std::vector<int> interior_rays(int face) const;
  // Target cone generators (indices into target_fan().rays()).
  const Cone& target_cone(int face) const { return target_cones_[face]; }

  // Integer vector b with sum b_k D_k ~ D and b_k = 0 for rays mapped into the cone of `face`.
  ZVec sigma_representative(int face) const;
  // HNF basis of M intersected with span(Gamma - Gamma).
  IntMatrix face_lattice(int face) const;

 private:
  Fan fan_;
  ZVec a_;
  LatticePolytope delta_;
  int kappa_ = 0;
  IntMatrix mx_;
  Fan target_;
  std::vector<Cone> target_cones_;
  std::vector<int> ray_face_;
  std::vector<std::vector<int>> tight_;
};

// Simplicial refinement of the face fan of conv(points), using every point as a ray:
// Delaunay cells of each facet under heights |p|^2, non-simplicial cells pulled in
// lexicographic point order. Every point must lie on the boundary.
Fan regular_subdivision(const Fan& normal_fan, const std::vector<ZVec>& points);

}  // namespace th

#pragma once

#include <memory>
#include <vector>

#include "torichodge/picard.hpp"
#include "torichodge/products.hpp"

namespace th {

// A product outside the range covered by the closed formulas (more than three sigma factors,
// or two sigma factors below the top degree).
class UnsupportedProduct : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct BatyrevNumbers {
  long long h11 = 0;
  long long h_d2_1 = 0;  // h^{d-2,1}
};

// Lattice-point formula for the Calabi-Yau hypersurface whose ambient fan has rays in
// `nabla`: h^{1,1} from nabla, h^{d-2,1} from its polar dual. Throws InvalidInput unless
// nabla is reflexive.
BatyrevNumbers batyrev_hodge(const LatticePolytope& nabla);

// Lattice points not in the relative interior of a facet (includes the origin).
std::vector<ZVec> simplified_points(const LatticePolytope& P);

struct MirrorOptions {
  bool simplified = true;       // mirror polynomial supported on simplified_points(nabla)
  bool rational_edges = false;  // X-side edge polynomials with interior rays split over Q
  bool dual_polynomial = true;  // false leaves f_dual empty and skips its certificate search
};

// X in P_Sigma with Newton polytope delta; X_dual in P_Sigma_dual with Newton polytope nabla.
struct MirrorPair {
  LatticePolytope delta;  // in M
  LatticePolytope nabla;  // polar dual, in N
  std::shared_ptr<const SemiampleContraction> x, x_dual;
  CoxPolynomial f, f_dual;
  bool simplified = true;
};

// Sigma refines the normal fan of delta with rays nabla cap N minus 0, Sigma_dual refines
// the normal fan of nabla with rays delta cap M minus 0. Every polynomial built passes the
// certificate.
MirrorPair build_mirror_pair(const LatticePolytope& delta, std::uint64_t seed, const MirrorOptions& opt = {});

// Replaces the coefficients on every edge of Delta that has interior rays by those of
// a prod_{s=1}^{vol} (T - s), so the components of X cap D_k are defined over Q.
CoxPolynomial with_rational_edges(const SemiampleContraction& c, const CoxPolynomial& f);

// alpha_{k_1} ... alpha_{k_t} in the A_n root system, indices 1..n.
long long alpha_product(int n, const std::vector<int>& ks);

// Basis correspondence D_k -> a_{e_k} x^{D(e_k)} between the toric part of H^{1,1}(X) and
// R_1(f_dual)_beta. The coefficient a_{e_k} of f_dual makes the linear relations land in the
// Jacobian ideal.
struct MonomialDivisorMap {
  std::vector<int> divisor_basis;  // rays of Sigma
  std::vector<Exponent> monomials; // x^{D(e_k)} in the Cox ring of Sigma_dual
  RatMatrix matrix;                // column j: coordinates of the image of D_{divisor_basis[j]}
  std::size_t toric_dim = 0;
  std::size_t polynomial_dim = 0;
  bool relations_vanish = false;
  bool isomorphism = false;
};
MonomialDivisorMap monomial_divisor_map(const MirrorPair& pair);

// One sigma in Sigma_X(d-1) with interior rays, matched with sigma_dual in Sigma_X_dual(2),
// the cone over the edge Gamma_sigma.
struct GeneralizedBlock {
  int face = 0;        // edge of delta
  int dual_face = 0;   // codimension-two face of nabla
  std::vector<int> interior_rays;     // e_k in int sigma
  long long volume = 0;               // vol(Gamma_sigma)
  std::vector<std::size_t> classes;   // number of g_l per interior ray
  std::size_t n_dual = 0;             // n(sigma_dual)
  std::size_t dual_slice_dim = 0;     // dim R_1^{sigma_dual}(f_dual)_{beta_1}
  std::vector<CoxPolynomial> A;       // x^{D(e_k)} / prod_{rho not in sigma_dual} x, per interior ray
  std::size_t A_rank = 0;
  bool holds = false;
};
struct GeneralizedMdmm {
  std::vector<GeneralizedBlock> blocks;
  bool holds = true;
};
GeneralizedMdmm generalized_mdmm(const MirrorPair& pair, RootMode mode = RootMode::numeric, double tolerance = 1e-10);

struct ChiralElement {
  bool sigma = false;  // gamma^{sigma,k}_A when true, gamma_A otherwise
  int face = -1;       // two-dimensional cone of Sigma_X, as a face index
  int k = 0;           // 1..n(sigma)
  int q = 1;           // A has degree q beta, or (q-1) beta + beta_1^sigma for sigma parts
  CoxPolynomial A;
};

struct ChiralValue {
  enum class Kind { zero, polynomial, sigma };
  Kind kind = Kind::zero;
  int face = -1, k = 0, q = 0;
  long long alpha = 1;
  int unit = 0;  // power of sqrt(-1)
  CoxPolynomial value;  // representative in R_1(f)_{q beta} or the sigma slice
  // In the top degree q = d - 1: coordinate of mu(value) in R_0(f)_{d beta}.
  Rat top = 0;
  bool is_zero() const { return kind == Kind::zero; }
};

// Products of chiral-ring elements on an anticanonical hypersurface. Throws
// UnsupportedProduct outside the covered range and InvalidInput when some 2-cone inside
// sigma has multiplicity > 1.
ChiralValue chiral_product(const Hypersurface& X, const std::vector<ChiralElement>& elems);

// a_1 ... a_s (D_{i_1} (x) g_{k_1}) ... (D_{i_t} (x) g_{k_t}) with s + t = d - 1, evaluated by
// the cup product and by alpha_{k_1}...alpha_{k_t} a_1 ... a_s D_{i_1} ... D_{i_t}.
struct QuantumSideResult {
  HodgeClass cup;
  HodgeClass closed_form;
  Rat cup_integral = 0, closed_integral = 0;
  long long alpha = 0;
  bool agree = false;
};
struct ComponentFactor {
  int ray = 0;
  int k = 1;  // 1..vol(Gamma_sigma) - 1
};
QuantumSideResult quantum_side_product(const CohomologyRing& R, const std::vector<CoxPolynomial>& toric,
                                       const std::vector<ComponentFactor>& factors);

}  // namespace th

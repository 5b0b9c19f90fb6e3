#pragma once

#include <complex>
#include <vector>

#include "torichodge/cox.hpp"

namespace th {

// (sum C D_k) / C, where C is spanned by the linear relations and the D_l with pi(int rho_l)
// in the interior of a cone of Sigma_X(i).
struct ToricDivisorQuotient {
  Echelon relations;
  std::vector<int> basis;   // non-pivot rays
  std::vector<int> killed;  // the D_l above
};
ToricDivisorQuotient toric_divisor_quotient(const SemiampleContraction& c);

// One sigma in Sigma_X(i-1) with an interior ray e_k.
struct PicardResidueBlock {
  int face = 0;   // edge Gamma_sigma of Delta_D
  int ray = 0;    // k
  long long components = 0;    // vol(Gamma_sigma), the number of components of X cap D_k
  std::size_t slice_dim = 0;   // dim R_1^sigma(f)_{beta - beta0 + beta1^sigma}
};

struct PicardReport {
  int iitaka = 0;
  // Pic(X)_C = H^2 is only asserted for i > 3; below that only the h^{1,1} pieces are reported.
  bool identified_with_h2 = false;
  std::vector<int> toric_basis;       // rays whose D_k form a basis of (sum C D_k) / C
  std::vector<int> killed_rays;       // D_l with pi(int rho_l) in the interior of a cone of Sigma_X(i)
  std::size_t toric_rank = 0;
  std::vector<PicardResidueBlock> residue;
  // n - d - sum_{Sigma_X(i)} a_1 + sum_{Sigma_X(i-1)} a_1 dim R_1^sigma.
  long long formula = 0;

  std::size_t rank() const;
};

// Throws InvalidInput when the nondegeneracy certificate fails.
PicardReport picard_group(const Hypersurface& X);

enum class RootMode { exact, numeric };

// Edge polynomial f|_{D_k} = a x^{D(m0)} prod_s (T - lambda_s), T = prod x^{<m1, e>}.
struct EdgeFactorization {
  int face = 0;
  ZVec m0, m1;                    // vertex and primitive direction of Gamma_sigma
  RatVec coefficients;            // of T^0..T^vol
  std::vector<Rat> exact_roots;   // ascending; exact mode
  std::vector<std::complex<double>> numeric_roots;  // sorted by (real, imag); numeric mode
};

// Component classes g_l, l = 1..vol-1, for an interior ray k of an edge face.
struct ComponentClasses {
  EdgeFactorization edge;
  std::vector<CoxPolynomial> exact;  // exact mode: g_l as polynomials
  // Coordinates in the R_1^sigma slice basis (exact mode: converted from `exact`).
  std::vector<std::vector<std::complex<double>>> numeric;
};

// Throws InvalidInput for a ray not interior to an edge face, a polynomial that does not
// split over Q in exact mode, or repeated roots.
ComponentClasses component_classes(const Hypersurface& X, int ray, RootMode mode, double tolerance = 1e-10);

}  // namespace th

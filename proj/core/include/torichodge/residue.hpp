#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torichodge/cox.hpp"

namespace th {

// q * (-2 pi sqrt(-1))^twist * sqrt(-1)^unit, unit taken mod 4 with the sign folded into q.
struct ResidueScalar {
  Rat q = 0;
  int twist = 0;
  int unit = 0;

  ResidueScalar() = default;
  ResidueScalar(Rat q_, int twist_ = 0, int unit_ = 0);

  bool is_zero() const { return q == 0; }
  ResidueScalar operator*(const ResidueScalar& o) const;
  bool operator==(const ResidueScalar& o) const { return q == o.q && twist == o.twist && unit == o.unit; }
  std::string str() const;
};

// Determinant of the (|I|)x(|I|) matrix with first row b_I and rows <m_j, e_k>, k in I.
// With m the identity basis of M this is c_I^beta; with a basis of M_X ∩ sigma^perp it is
// the sigma-variant. Throws std::invalid_argument when |I| != rows(m) + 1.
Int c_I_beta(const Fan& fan, const IntMatrix& m, const ZVec& b, const std::vector<int>& I);
Int c_I_beta(const Fan& fan, const ZVec& b, const std::vector<int>& I);

// Determinant of a square matrix of polynomials, truncated modulo the killed variables.
CoxPolynomial polynomial_determinant(const std::vector<std::vector<CoxPolynomial>>& M,
                                     const std::vector<int>& killed);

// Residue data attached to one cone sigma of Sigma_X (given as a face of Delta_D).
class SigmaResidueContext {
 public:
  // When I is given it must be admissible; otherwise the lexicographically smallest one is used.
  SigmaResidueContext(const Hypersurface& X, int face, std::optional<std::vector<int>> I = std::nullopt);

  const Hypersurface& hypersurface() const { return *X_; }
  int face() const { return face_; }
  int i_sigma() const { return i_; }
  const IntMatrix& m_basis() const { return m_; }
  const ZVec& b() const { return b_; }
  const std::vector<int>& index_set() const { return I_; }
  const Int& c_I() const { return c_; }
  const CoxPolynomial& jacobian() const { return J_; }  // J_sigma
  const Int& volume() const { return vol_; }
  const GradedSlice& top_slice() const { return *top_; }

  ZVec top_degree() const;      // (i+1) beta - beta0 + beta1
  ZVec residue_degree() const;  // (i+1) beta - 2 beta0 + 2 beta1
  ZVec r1_degree(int r) const;  // (r+1) beta - beta0 + beta1

  // Res^sigma; zero outside the residue degree.
  Rat res(const CoxPolynomial& g) const;
  // Coefficient mu with P * prod x == mu J_sigma in the top slice (P already multiplied).
  Rat top_coefficient(const CoxPolynomial& P) const;

  // Admissible s for p_sigma: rays outside sigma with <m_1, e_s> != 0.
  std::vector<int> admissible_s() const;
  // p_sigma(C) for dim sigma = i - 1, as a representative of degree beta - beta0 + beta1.
  CoxPolynomial p_sigma(const CoxPolynomial& C, std::optional<int> s = std::nullopt) const;

  // All admissible index sets, lexicographic, at most `limit`.
  std::vector<std::vector<int>> admissible_index_sets(std::size_t limit) const;

 private:
  const Hypersurface* X_;
  int face_;
  int i_;
  IntMatrix m_;
  ZVec b_;
  std::vector<int> I_;
  Int c_;
  CoxPolynomial J_;
  Int vol_;
  const GradedSlice* top_;
  Rat jcoord_;
};

// R_1(f)_{(d-1)beta} -> R_0(f)_{d beta} is multiplication by prod x_k (anticanonical case).
// Returns a representative g with g prod x == h modulo J_0(f). Throws std::runtime_error
// when no solution exists.
CoxPolynomial mu_inverse(const Hypersurface& X, const CoxPolynomial& h);

struct CorrectionPolynomials {
  std::vector<int> ray_order;  // l_0, ..., l_{n+1}
  CoxPolynomial G;
  CoxPolynomial H;  // the sqrt(-1) factor is carried separately
  int H_unit = 1;
};

// Rays mapped into a two-dimensional cone of Sigma_X, ordered across the cone.
std::vector<int> ordered_cone_rays(const SemiampleContraction& c, int face);
// Throws InvalidInput when the face is not a 2-cone or some 2-cone of Sigma inside it has
// multiplicity > 1.
CorrectionPolynomials correction_polynomials(const Hypersurface& X, int face);

ResidueScalar c_p_sigma(int p, int i_sigma);

}  // namespace th

#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "torichodge/hodge.hpp"
#include "torichodge/residue.hpp"

namespace th {

// Scalars are rationals times (-2 pi sqrt(-1))^twist sqrt(-1)^unit; components are keyed by
// the (twist, unit) tag so that everything stays exact.
class HodgeClass {
 public:
  using ToricKey = std::tuple<int, int, int>;               // (k, twist, unit)
  using ResidueKey = std::tuple<int, int, int, int, int>;   // (face, s, r, twist, unit)

  // Coordinates in the basis of A_1(X)_k.
  std::map<ToricKey, RatVec> toric;
  // Coefficient matrix of sum C_ab u_a (x) g_b over bases of A_1^sigma_s and the R_1^sigma slice r.
  std::map<ResidueKey, RatMatrix> residue;

  bool is_zero() const { return toric.empty() && residue.empty(); }
  void normalize();  // drops zero components
  bool operator==(const HodgeClass& o) const;
  HodgeClass operator+(const HodgeClass& o) const;
  HodgeClass operator*(const Rat& c) const;
};

// Cup product and the class constructors for one hypersurface. Caches are not thread-safe.
class CohomologyRing {
 public:
  CohomologyRing(const Hypersurface& X, const ToricCohomology& H);

  const Hypersurface& hypersurface() const { return X_; }
  const ToricCohomology& cohomology() const { return H_; }
  int dim() const { return X_.d() - 1; }

  const PairedQuotient& a1(int k) const;
  const PairedQuotient& a1_sigma(int face, int s) const;
  const SigmaResidueContext& context(int face) const;
  const GradedSlice& r1(int face, int r) const;

  // Bidegree (p, q) of a residue component.
  std::pair<int, int> bidegree(int face, int s, int r) const;

  HodgeClass toric_class(const CoxPolynomial& a, int k) const;
  // u (x) g with u in U^sigma_s and g in the R_1^sigma slice of degree (r+1) beta - beta0 + beta1.
  // Throws InvalidInput when the bookkeeping is malformed (r outside 0..i(sigma)-1, s out of range).
  HodgeClass residue_class(int face, const CoxPolynomial& u, int s, const CoxPolynomial& g, int r) const;

  HodgeClass multiply(const HodgeClass& x, const HodgeClass& y) const;
  // int_X of the top toric part, per (twist, unit) tag.
  std::map<std::pair<int, int>, Rat> integrate(const HodgeClass& x) const;

 private:
  RatVec toric_coords(const CoxPolynomial& a, int k) const;
  RatVec sigma_coords(int face, const CoxPolynomial& u, int s) const;
  // Res^sigma(g_b h_b') over the bases of slices r and r'.
  const RatMatrix& res_matrix(int face, int r, int r2) const;

  const Hypersurface& X_;
  const ToricCohomology& H_;
  mutable std::map<int, std::unique_ptr<PairedQuotient>> a1_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<PairedQuotient>> a1s_;
  mutable std::map<int, std::unique_ptr<SigmaResidueContext>> ctx_;
  mutable std::map<std::tuple<int, int, int>, RatMatrix> res_;
  CoxPolynomial x_;
};

}  // namespace th

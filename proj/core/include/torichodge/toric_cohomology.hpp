#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "torichodge/cox.hpp"

namespace th {

// H^{2k}(P_Sigma, Q) = Q[D_1..D_n]_k / (P(Sigma) + SR(Sigma)). Classes are CoxPolynomials
// whose exponents are powers of the D_k.
struct ToricCohomologySlice {
  int k = 0;
  std::vector<Exponent> monomials;  // monomials whose support spans a cone
  std::map<Exponent, std::uint32_t> index;
  Echelon relations;
  std::vector<std::size_t> basis;  // non-pivot monomials

  std::size_t dim() const { return basis.size(); }
  // Non-cone monomials vanish (Stanley-Reisner); throws on a monomial of the wrong degree.
  SparseVec vectorize(const CoxPolynomial& p) const;
  RatVec coords(const CoxPolynomial& p) const;
  CoxPolynomial basis_element(std::size_t i) const { return CoxPolynomial::monomial(monomials[basis[i]]); }
  CoxPolynomial lift(const RatVec& c) const;
};

class ToricCohomology {
 public:
  // Requires a complete simplicial fan.
  explicit ToricCohomology(const Fan& fan);
  ToricCohomology(const ToricCohomology&) = delete;
  ToricCohomology& operator=(const ToricCohomology&) = delete;

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim(); }
  std::size_t nvars() const { return fan_.nrays(); }

  const ToricCohomologySlice& slice(int k) const;
  // Sum over k of slice dimensions.
  std::size_t total_dim() const;

  CoxPolynomial divisor(const ZVec& a) const;  // sum a_k D_k
  CoxPolynomial cone_class(const Cone& c) const;  // prod_{rho in c} D_rho
  // Normal form: the lift of the coordinates. Zero for degrees outside 0..d.
  CoxPolynomial normal_form(const CoxPolynomial& p, int k) const;
  // Degree-d part integrated, normalized by int prod_{rho in sigma} D_rho = 1 / mult(sigma).
  Rat integrate(const CoxPolynomial& p) const;

 private:
  std::unique_ptr<ToricCohomologySlice> build(int k) const;

  Fan fan_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<ToricCohomologySlice>> slices_;
  mutable bool calibrated_ = false;
  mutable Rat top_scale_;
};

// Quotient of a subspace U_k of H^{2k}(P) by the kernel of u -> (int u v W)_v over a
// partner family v spanning U'_{k'} with k + k' + deg W = d.
class PairedQuotient {
 public:
  PairedQuotient() = default;
  PairedQuotient(const ToricCohomology& H, std::vector<CoxPolynomial> span, std::vector<CoxPolynomial> partners,
                 const CoxPolynomial& weight);

  std::size_t dim() const { return basis_.size(); }
  const CoxPolynomial& basis_element(std::size_t i) const { return basis_[i]; }
  const std::vector<CoxPolynomial>& partners() const { return partners_; }
  const CoxPolynomial& weight() const { return weight_; }
  // Pairing vector of u against the partners.
  RatVec pairing(const CoxPolynomial& u) const;
  // Coordinates of u modulo the kernel; nullopt when u is outside U + kernel.
  std::optional<RatVec> coords(const CoxPolynomial& u) const;

 private:
  const ToricCohomology* H_ = nullptr;
  std::vector<CoxPolynomial> partners_;
  CoxPolynomial weight_;
  std::vector<CoxPolynomial> basis_;
  SpanBasis span_;
};

// Spanning set of U^sigma_s: prod_{rho in gamma} D_rho times monomials, over cones gamma of
// Sigma whose relative interior maps into the relative interior of the target cone of `face`.
std::vector<CoxPolynomial> u_sigma_span(const ToricCohomology& H, const SemiampleContraction& c, int face, int s);

// Degree-(k,k) piece of A_1(X): H^{2k}(P) modulo the annihilator of [X].
PairedQuotient a1_slice(const ToricCohomology& H, const ZVec& divisor, int k);
// A_1^sigma(X)_{s,s}: U^sigma_s modulo the kernel of the X^{i(sigma)} pairing with
// U^sigma_{d-i(sigma)-s}.
PairedQuotient a1_sigma_slice(const ToricCohomology& H, const SemiampleContraction& c, int face, int s);

// (D^k . V(tau)) = int D^k mult(tau) prod_{rho in tau} D_rho, for tau of dimension d - k.
Rat intersection_number(const ToricCohomology& H, const ZVec& divisor, int k, const Cone& tau);
// Expected sign: positive iff pi(tau) lies in a cone of Sigma_X of dimension <= i - k
// (i the Iitaka dimension); zero otherwise.
bool intersection_expected_positive(const SemiampleContraction& c, int k, const Cone& tau);

}  // namespace th

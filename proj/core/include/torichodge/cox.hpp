#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "torichodge/echelon.hpp"
#include "torichodge/fan.hpp"

namespace th {

class ModularGroebner;

using Exponent = std::vector<int>;

// A_{d-1}(P_Sigma) = Z^n / image of M, via the Smith form of the ray matrix.
class ChowGroup {
 public:
  ChowGroup() = default;
  explicit ChowGroup(const Fan& fan);

  IntVec canonical(const ZVec& rep) const;
  bool equal(const ZVec& a, const ZVec& b) const { return canonical(a) == canonical(b); }
  std::vector<Int> torsion() const;
  std::size_t free_rank() const { return n_ - r_; }

 private:
  std::size_t n_ = 0, r_ = 0;
  IntMatrix U_;
  std::vector<Int> diag_;
};

class CoxPolynomial {
 public:
  CoxPolynomial() = default;
  explicit CoxPolynomial(std::size_t nvars) : n_(nvars) {}

  static CoxPolynomial monomial(const Exponent& e, const Rat& c = 1);
  static CoxPolynomial constant(std::size_t nvars, const Rat& c);

  std::size_t nvars() const { return n_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rat& c);
  Rat coefficient(const Exponent& e) const;

  CoxPolynomial operator+(const CoxPolynomial& o) const;
  CoxPolynomial operator-(const CoxPolynomial& o) const;
  CoxPolynomial operator*(const CoxPolynomial& o) const;
  CoxPolynomial operator*(const Rat& c) const;
  CoxPolynomial& operator+=(const CoxPolynomial& o);
  bool operator==(const CoxPolynomial& o) const { return terms_ == o.terms_; }

  CoxPolynomial euler_derivative(int k) const;  // x_k d/dx_k
  CoxPolynomial derivative(int k) const;
  // Drops every term divisible by some x_k, k in killed.
  CoxPolynomial truncate(const std::vector<int>& killed) const;
  CoxPolynomial times_monomial(const Exponent& e) const;
  // Exponent of the leading term; all terms share one Chow class for homogeneous input.
  ZVec degree_rep() const;

 private:
  std::size_t n_ = 0;
  std::map<Exponent, Rat> terms_;
};

class CoxRing {
 public:
  explicit CoxRing(const Fan& fan);
  CoxRing(const CoxRing&) = delete;
  CoxRing& operator=(const CoxRing&) = delete;

  const Fan& fan() const { return fan_; }
  const ChowGroup& chow() const { return chow_; }
  std::size_t nvars() const { return fan_.nrays(); }

  // Monomials of the given degree, descending lexicographic exponent order.
  std::vector<Exponent> monomials(const ZVec& degree) const;
  // Same, restricted to monomials not divisible by any killed variable.
  std::vector<Exponent> monomials(const ZVec& degree, const std::vector<int>& killed) const;

 private:
  Fan fan_;
  ChowGroup chow_;
  mutable std::mutex mu_;
  mutable std::map<IntVec, std::vector<Exponent>> cache_;
};

// One degree piece S_gamma / W, where S is taken modulo the killed variables.
struct GradedSlice {
  ZVec degree;
  std::vector<int> killed;
  std::vector<Exponent> monomials;
  std::map<Exponent, std::uint32_t> index;
  Echelon subspace;
  std::vector<std::size_t> quotient_basis;

  std::size_t dim() const { return quotient_basis.size(); }
  std::size_t rank() const { return subspace.rank(); }
  // Coordinates in the monomial basis; terms with killed variables are dropped.
  // Throws std::invalid_argument on a monomial of another degree.
  SparseVec vectorize(const CoxPolynomial& p) const;
  SparseVec reduce(const CoxPolynomial& p) const { return subspace.reduce(vectorize(p)); }
  // Coordinates in the quotient basis.
  RatVec coords(const CoxPolynomial& p) const;
  RatVec coords_of_vector(const SparseVec& v) const;
  CoxPolynomial basis_element(std::size_t i) const;
  CoxPolynomial lift(const RatVec& coords) const;
  CoxPolynomial polynomial(const SparseVec& v) const;
};

GradedSlice monomial_slice(const CoxRing& ring, const ZVec& degree, const std::vector<int>& killed = {});
GradedSlice ideal_slice(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const ZVec& degree,
                        const std::vector<int>& killed = {});
// (J : h) in the given degree; the quotient is identified with the image of g -> g*h in S/J.
GradedSlice colon_slice(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const CoxPolynomial& h,
                        const ZVec& degree, const std::vector<int>& killed = {});

// Dimensions of the same quotients computed modulo large primes (the maximum rank over
// two primes is used). Avoids rational coefficient growth for dense polynomials.
std::size_t ideal_quotient_dim(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const ZVec& degree,
                               const std::vector<int>& killed = {});
std::size_t colon_quotient_dim(const CoxRing& ring, const std::vector<CoxPolynomial>& gens, const CoxPolynomial& h,
                               const ZVec& degree, const std::vector<int>& killed = {});

// Replaces generators of one common degree by an echelon basis of their span.
std::vector<CoxPolynomial> interreduce(const std::vector<CoxPolynomial>& gens);

// Lattice point m of Delta_a gives the monomial with exponents a_k + <m, e_k>.
Exponent monomial_of_point(const Fan& fan, const ZVec& a, const ZVec& m);

// f in degree beta with a semiample contraction; owns the slice caches.
class Hypersurface {
 public:
  Hypersurface(std::shared_ptr<const SemiampleContraction> c, CoxPolynomial f);
  Hypersurface(const Hypersurface&) = delete;
  Hypersurface& operator=(const Hypersurface&) = delete;

  const SemiampleContraction& contraction() const { return *contraction_; }
  std::shared_ptr<const SemiampleContraction> contraction_ptr() const { return contraction_; }
  const CoxRing& ring() const { return ring_; }
  const CoxPolynomial& f() const { return f_; }
  std::size_t n() const { return ring_.nvars(); }
  int d() const { return ring_.fan().dim(); }
  int kappa() const { return contraction_->kappa(); }

  ZVec beta() const { return contraction_->divisor(); }
  ZVec beta0() const { return ZVec(n(), 1); }
  ZVec beta1(int face) const;
  // (q) beta - beta0 + beta1^sigma as an exponent-space representative.
  ZVec degree(int q, int face, int twist0 = 1, int twist1 = 1) const;

  std::vector<int> killed(int face) const;
  Exponent h_sigma(int face) const;  // product of x_k with pi(rho_k) outside the cone

  // x_k f_k for all k (J_0(f)).
  const std::vector<CoxPolynomial>& jacobian() const { return jac_; }
  // Generators of J_sigma(f): x_k f_k for all k, then x_k for rays mapped into the cone.
  std::vector<CoxPolynomial> jacobian_generators(int face) const;

  const GradedSlice& r0(int face, const ZVec& degree) const;
  const GradedSlice& r1(int face, const ZVec& degree) const;

  // Dimensions only; uses a cached exact slice when one exists.
  std::size_t r0_dim(int face, const ZVec& degree) const;
  std::size_t r1_dim(int face, const ZVec& degree) const;

  // Top slices of R_0^sigma are one-dimensional for every target cone.
  bool certificate() const;

 private:
  std::shared_ptr<const SemiampleContraction> contraction_;
  CoxRing ring_;
  CoxPolynomial f_;
  std::vector<CoxPolynomial> jac_;
  std::vector<CoxPolynomial> jac_reduced_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, IntVec>, std::unique_ptr<GradedSlice>> r0_cache_, r1_cache_;
  mutable std::map<std::pair<int, IntVec>, std::size_t> r0_dim_cache_, r1_dim_cache_;
  std::vector<long long> weights_;
  mutable std::map<int, std::shared_ptr<const ModularGroebner>> gb_cache_;

  long long weight(const ZVec& degree) const;
  // Groebner basis of J_0 modulo the killed variables, complete up to the given weight.
  std::shared_ptr<const ModularGroebner> groebner(int face, long long max_weight) const;
};

// Seeded random coefficients on every monomial of the degree, retried until the
// certificate passes (at most `attempts` seeds).
CoxPolynomial generic_polynomial(std::shared_ptr<const SemiampleContraction> c, std::uint64_t seed,
                                 int attempts = 20);
// Random nonzero coefficients on the given lattice points of Delta_D.
CoxPolynomial support_polynomial(const SemiampleContraction& c, const std::vector<ZVec>& points, std::uint64_t seed);
// Sum of x^{D(v)} over the vertices of Delta_D.
CoxPolynomial vertex_polynomial(const SemiampleContraction& c);

bool nondegeneracy_certificate(std::shared_ptr<const SemiampleContraction> c, const CoxPolynomial& f);

}  // namespace th

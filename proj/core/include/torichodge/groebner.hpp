#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "torichodge/cox.hpp"

namespace th {

// Groebner basis over F_p of an ideal homogeneous for positive integer weights, in the
// weighted degree reverse lexicographic order. Only the part of weighted degree at most
// `max_degree` is computed, which is enough for normal forms up to that degree.
// Supports at most 16 variables with exponents below 256.
class ModularGroebner {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr std::uint32_t kPrime = 2147483647u;

  struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::int32_t deg = 0;
    bool operator==(const Mono& o) const { return e == o.e; }
  };
  struct Term {
    Mono m;
    std::uint32_t c;
  };
  using Poly = std::vector<Term>;  // descending order, nonzero coefficients

  ModularGroebner(const std::vector<CoxPolynomial>& gens, std::vector<long long> weights, long long max_degree);

  static bool supported(std::size_t nvars, long long max_degree, const std::vector<long long>& weights);

  std::size_t size() const { return basis_.size(); }
  long long max_degree() const { return max_degree_; }
  bool is_standard(const Exponent& e) const;
  std::size_t quotient_dim(const std::vector<Exponent>& monomials) const;
  // Rank of g -> h g from the span of `source` into the quotient.
  std::size_t multiplication_rank(const std::vector<Exponent>& source, const Exponent& h) const;

 private:
  Mono make(const Exponent& e) const;
  bool greater(const Mono& a, const Mono& b) const;
  Poly normal_form(Poly p) const;
  void add(Poly g);

  std::size_t n_;
  std::vector<long long> w_;
  long long max_degree_;
  std::vector<Poly> basis_;
  std::vector<Mono> leads_;
  std::vector<std::uint64_t> masks_;
};

// Positive weights w with sum_k w_k e_k = 0 (a Z-grading of the Cox ring by a positive
// class). Throws InvalidInput for incomplete fans.
std::vector<long long> positive_grading(const Fan& fan);

}  // namespace th

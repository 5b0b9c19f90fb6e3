#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "torichodge/cox.hpp"
#include "torichodge/picard.hpp"

namespace th::cli {

// Schema violation; `pointer` is a JSON pointer into the job document.
class JobError : public InvalidInput {
 public:
  JobError(std::string pointer, const std::string& message)
      : InvalidInput(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct JobOptions {
  RootMode root_mode = RootMode::numeric;
  double numeric_tolerance = 1e-10;
  int jobs = 1;
  std::uint64_t seed = 7;
  bool rational_edges = false;
  bool simplified = true;
};

struct JobSpec {
  int dim = 0;
  std::optional<Fan> fan;
  std::optional<LatticePolytope> polytope;
  std::optional<ZVec> divisor;
  // Exactly one of terms / generic_seed when a polynomial is given.
  std::optional<std::vector<std::pair<Exponent, Rat>>> terms;
  std::optional<std::uint64_t> generic_seed;
  nlohmann::json products = nlohmann::json::array();
  JobOptions options;
};

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t h);

// Integers may be JSON numbers or decimal strings; rationals may also be "p/q" strings.
Int parse_int(const nlohmann::json& v, const std::string& pointer);
Rat parse_rat(const nlohmann::json& v, const std::string& pointer);

JobSpec parse_job(const std::string& text);

// Sigma and the divisor: the fan as given, the MPCP resolution of a reflexive polytope with
// the anticanonical divisor, or the (simplicial) normal fan of any other lattice polytope.
std::shared_ptr<const SemiampleContraction> contraction(const JobSpec& job);
// The polynomial of the job, or a seeded generic one; must pass the certificate.
CoxPolynomial polynomial(const JobSpec& job, std::shared_ptr<const SemiampleContraction> c);
// The Newton polytope for the mirror commands: the job polytope, or Delta_D of the fan job.
LatticePolytope newton_polytope(const JobSpec& job);

}  // namespace th::cli

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "torichodge/hodge.hpp"

namespace th::acceptance {

struct Options {
  int jobs = 1;
  std::uint64_t seed = 7;
  double tolerance = 1e-10;
};

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string summary;
  nlohmann::json detail;
  double seconds = 0;
};

// A hypersurface of the suite together with its diamond.
struct Example {
  std::string name;
  std::shared_ptr<const SemiampleContraction> c;
  CoxPolynomial f;
  std::unique_ptr<Hypersurface> X;
  std::unique_ptr<ToricCohomology> H;
  HodgeDiamond diamond;
};

// Examples are built on first use and shared between criteria.
class Session {
 public:
  explicit Session(Options opt = {});

  const Options& options() const { return opt_; }
  const Example& example(const std::string& name);
  // Hodge-theory examples of criteria 1-4 and the seeded random jobs of criterion 5.
  std::vector<std::string> diamond_examples() const;
  // Examples small enough for exact residue contexts and cup products.
  std::vector<std::string> exact_examples() const;

 private:
  Options opt_;
  std::map<std::string, std::unique_ptr<Example>> cache_;
};

std::string criterion_title(int id);
// Throws std::out_of_range for ids outside 1..9.
CriterionResult run_criterion(int id, Session& session);

// Seeded random semiample job on a complete simplicial fan of dimension <= 3.
std::shared_ptr<const SemiampleContraction> random_job(std::uint64_t seed, std::string* label = nullptr);

}  // namespace th::acceptance

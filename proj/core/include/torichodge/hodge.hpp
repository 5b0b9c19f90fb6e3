#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torichodge/toric_cohomology.hpp"

namespace th {

// One residue summand dim A_1^sigma(X)_{s,s} * dim R_1^sigma(f)_{(r+1)beta-beta0+beta1}.
struct ResidueContribution {
  int face = 0;
  int cone_dim = 0;
  int s = 0;
  int r = 0;
  std::size_t a_dim = 0;
  std::size_t r_dim = 0;
};

struct HodgeCell {
  std::size_t value = 0;
  std::size_t toric = 0;
  std::vector<ResidueContribution> residue;
};

struct HodgeDiamond {
  int dim = 0;  // complex dimension of X
  std::vector<std::vector<HodgeCell>> cells;  // cells[p][q], 0 <= p, q <= dim
  // Faces with i(sigma) = 0 whose R_1^sigma slice in degree beta - beta0 + beta1 is nonzero.
  std::vector<int> nonvanishing_vertex_faces;

  std::size_t h(int p, int q) const { return cells[p][q].value; }
  bool poincare_symmetric() const;
  bool hodge_symmetric() const;
  // h^{0,k} = 0 for k other than 0 and i - 1.
  bool structure_sheaf_vanishing(int i) const;
  std::string table() const;
};

struct HodgeOptions {
  int jobs = 1;
};

// Requires a certificate-passing f; throws InvalidInput otherwise.
HodgeDiamond hodge_diamond(const Hypersurface& X, const ToricCohomology& H, const HodgeOptions& opt = {});

// Runs tasks 0..count-1 on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace th

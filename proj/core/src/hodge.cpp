#include "torichodge/hodge.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace th {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(fail_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool HodgeDiamond::poincare_symmetric() const {
  for (int p = 0; p <= dim; ++p)
    for (int q = 0; q <= dim; ++q)
      if (h(p, q) != h(dim - p, dim - q)) return false;
  return true;
}

bool HodgeDiamond::hodge_symmetric() const {
  for (int p = 0; p <= dim; ++p)
    for (int q = 0; q <= dim; ++q)
      if (h(p, q) != h(q, p)) return false;
  return true;
}

bool HodgeDiamond::structure_sheaf_vanishing(int i) const {
  for (int k = 1; k <= dim; ++k)
    if (k != i - 1 && h(0, k) != 0) return false;
  return true;
}

std::string HodgeDiamond::table() const {
  std::ostringstream os;
  for (int p = dim; p >= 0; --p) {
    for (int q = 0; q <= dim; ++q) os << (q ? " " : "") << h(p, q);
    os << '\n';
  }
  return os.str();
}

HodgeDiamond hodge_diamond(const Hypersurface& X, const ToricCohomology& H, const HodgeOptions& opt) {
  const auto& c = X.contraction();
  const int d = X.d();
  if (!X.certificate()) throw InvalidInput("polynomial fails the nondegeneracy certificate");

  HodgeDiamond D;
  D.dim = d - 1;
  D.cells.assign(d, std::vector<HodgeCell>(d));

  // Warm the shared cohomology caches before going parallel.
  for (int k = 0; k <= d; ++k) H.slice(k);
  H.integrate(CoxPolynomial(H.nvars()));

  std::vector<std::size_t> toric(d);
  parallel_for(static_cast<std::size_t>(d), opt.jobs,
               [&](std::size_t p) { toric[p] = a1_slice(H, c.divisor(), static_cast<int>(p)).dim(); });
  for (int p = 0; p < d; ++p) {
    D.cells[p][p].toric = toric[p];
    D.cells[p][p].value += toric[p];
  }

  struct ATask {
    int face, s;
    std::size_t dim = 0;
  };
  std::vector<ATask> atasks;
  for (int face = 0; face < c.nfaces(); ++face)
    for (int s = 0; s <= d - c.i_sigma(face); ++s) atasks.push_back({face, s});
  parallel_for(atasks.size(), opt.jobs,
               [&](std::size_t t) { atasks[t].dim = a1_sigma_slice(H, c, atasks[t].face, atasks[t].s).dim(); });

  struct RTask {
    int face, r;
    std::size_t dim = 0;
  };
  std::vector<RTask> rtasks;
  std::vector<char> needed(c.nfaces(), 0);
  for (const auto& a : atasks)
    if (a.dim) needed[a.face] = 1;
  for (int face = 0; face < c.nfaces(); ++face) {
    const int is = c.i_sigma(face);
    if (is == 0) {
      rtasks.push_back({face, -1});
      continue;
    }
    if (!needed[face]) continue;
    for (int r = 0; r < is; ++r) rtasks.push_back({face, r});
  }
  parallel_for(rtasks.size(), opt.jobs, [&](std::size_t t) {
    auto& rt = rtasks[t];
    const int q = rt.r < 0 ? 1 : rt.r + 1;
    rt.dim = X.r1_dim(rt.face, X.degree(q, rt.face));
  });

  std::map<std::pair<int, int>, std::size_t> rdim;
  for (const auto& rt : rtasks) {
    if (rt.r < 0) {
      if (rt.dim) D.nonvanishing_vertex_faces.push_back(rt.face);
      continue;
    }
    rdim[{rt.face, rt.r}] = rt.dim;
  }
  for (const auto& a : atasks) {
    if (!a.dim) continue;
    const int is = c.i_sigma(a.face);
    for (int r = 0; r < is; ++r) {
      std::size_t rd = rdim[{a.face, r}];
      if (!rd) continue;
      const int p = is - 1 - r + a.s, q = r + a.s;
      if (p < 0 || q < 0 || p >= d || q >= d) throw std::logic_error("residue term outside the diamond");
      auto& cell = D.cells[p][q];
      cell.residue.push_back({a.face, c.cone_dim(a.face), a.s, r, a.dim, rd});
      cell.value += a.dim * rd;
    }
  }
  return D;
}

}  // namespace th

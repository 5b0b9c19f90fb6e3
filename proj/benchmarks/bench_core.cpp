#include <benchmark/benchmark.h>

#include <random>

#include "torichodge/hodge.hpp"
#include "torichodge/mirror.hpp"
#include "torichodge/products.hpp"

using namespace th;

namespace {

std::shared_ptr<const SemiampleContraction> projective(int d, long long deg) {
  std::vector<ZVec> rays;
  for (int k = 0; k < d; ++k) {
    ZVec e(d, 0);
    e[k] = 1;
    rays.push_back(e);
  }
  rays.push_back(ZVec(d, -1));
  std::vector<Cone> cones;
  for (int skip = 0; skip <= d; ++skip) {
    Cone c;
    for (int k = 0; k <= d; ++k)
      if (k != skip) c.push_back(k);
    cones.push_back(c);
  }
  ZVec a(d + 1, 0);
  a[0] = deg;
  return std::make_shared<SemiampleContraction>(Fan(d, rays, cones), a);
}

// conv(e_1, ..., e_d, -w): the fan polytope of the weighted projective space P(1, w).
LatticePolytope simplex(std::vector<long long> weights) {
  const int d = static_cast<int>(weights.size());
  std::vector<ZVec> pts;
  for (int k = 0; k < d; ++k) {
    ZVec e(d, 0);
    e[k] = 1;
    pts.push_back(e);
  }
  for (auto& x : weights) x = -x;
  pts.push_back(weights);
  return LatticePolytope::from_points(d, pts);
}

}  // namespace

static void BM_RationalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  RatMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = Rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
  for (auto _ : state) benchmark::DoNotOptimize(rank(A));
}
BENCHMARK(BM_RationalRank)->ArgNames({"n"})->RangeMultiplier(2)->Range(8, 64);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  IntMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<long>(rng() % 41) - 20;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->ArgNames({"n"})->RangeMultiplier(2)->Range(4, 32);

static void BM_LatticePoints(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state) {
    auto c = projective(3, k);
    benchmark::DoNotOptimize(c->polytope().lattice_points().size());
  }
}
BENCHMARK(BM_LatticePoints)->ArgNames({"deg"})->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BatyrevHodge(benchmark::State& state) {
  const auto nabla = simplex({1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(batyrev_hodge(nabla));
}
BENCHMARK(BM_BatyrevHodge)->Unit(benchmark::kMillisecond);

static void BM_MpcpSubdivision(benchmark::State& state) {
  const auto delta = polar_dual(simplex({1, 2, 2}));
  for (auto _ : state) {
    MirrorOptions opt;
    opt.dual_polynomial = false;
    benchmark::DoNotOptimize(build_mirror_pair(delta, 3, opt).x->fan().nrays());
  }
}
BENCHMARK(BM_MpcpSubdivision)->Unit(benchmark::kMillisecond);

// Plane curves of degree k: every Hodge number comes from the sigma = 0 Jacobian slice.
static void BM_PlaneCurveDiamond(benchmark::State& state) {
  auto c = projective(2, state.range(0));
  Hypersurface X(c, generic_polynomial(c, 1));
  ToricCohomology H(c->fan());
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(X, H).h(1, 0));
}
BENCHMARK(BM_PlaneCurveDiamond)->ArgNames({"deg"})->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_QuarticK3Diamond(benchmark::State& state) {
  auto c = projective(3, 4);
  Hypersurface X(c, generic_polynomial(c, 1));
  ToricCohomology H(c->fan());
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(X, H).h(1, 1));
}
BENCHMARK(BM_QuarticK3Diamond)->Unit(benchmark::kMillisecond);

static void BM_K3Picard(benchmark::State& state) {
  MirrorOptions opt;
  opt.rational_edges = true;
  opt.dual_polynomial = false;
  const auto pair = build_mirror_pair(polar_dual(simplex({1, 2, 2})), 3, opt);
  Hypersurface X(pair.x, pair.f);
  for (auto _ : state) benchmark::DoNotOptimize(picard_group(X).rank());
}
BENCHMARK(BM_K3Picard)->Unit(benchmark::kMillisecond);

static void BM_CupProduct(benchmark::State& state) {
  auto c = projective(3, 4);
  Hypersurface X(c, generic_polynomial(c, 1));
  ToricCohomology H(c->fan());
  CohomologyRing R(X, H);
  const auto h = R.toric_class(H.divisor({1, 0, 0, 0}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(R.integrate(R.multiply(h, h)));
}
BENCHMARK(BM_CupProduct)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "clustergeom/clustergeom.hpp"

namespace cg = clustergeom;

namespace {

cg::IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  cg::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

cg::Seed from_skew(const cg::IntegerMatrix& s) {
  const std::size_t n = s.rows();
  return cg::Seed::root(cg::make_fixed_data(cg::to_rational(s), std::vector<cg::Integer>(n, 1),
                                            std::vector<bool>(n, true)));
}

cg::Rank2Data nine_ray() {
  cg::Rank2Data d;
  const long w[][2] = {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {-1, -1}, {-1, -1}, {-1, -1}};
  for (const auto& v : w) d.w.push_back({cg::Integer(v[0]), cg::Integer(v[1])});
  d.nu.assign(9, cg::Integer(1));
  return d;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const cg::IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cg::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_LaurentMultiply(benchmark::State& state) {
  const auto e = static_cast<unsigned long>(state.range(0));
  const cg::LaurentPolynomial p = (cg::LaurentPolynomial::constant(3, 1) + cg::LaurentPolynomial::variable(3, 0) +
                                   cg::LaurentPolynomial::monomial({0, 1, -1}))
                                      .pow(e);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_LaurentMultiply)->Arg(4)->Arg(8)->Arg(16);

void BM_ExactDivide(benchmark::State& state) {
  const auto e = static_cast<unsigned long>(state.range(0));
  const cg::LaurentPolynomial q = cg::LaurentPolynomial::constant(2, 1) + cg::LaurentPolynomial::variable(2, 0) +
                                  cg::LaurentPolynomial::variable(2, 1);
  const cg::LaurentPolynomial p = q.pow(e);
  for (auto _ : state) benchmark::DoNotOptimize(cg::exact_divide(p, q));
}
BENCHMARK(BM_ExactDivide)->Arg(4)->Arg(8)->Arg(16);

void BM_ExploreMarkov(benchmark::State& state) {
  const cg::Seed s = from_skew(cg::IntegerMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  cg::ExploreOptions opt;
  opt.depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cg::explore(cg::root_node(s), opt));
}
BENCHMARK(BM_ExploreMarkov)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SymmetricFormNineRay(benchmark::State& state) {
  const cg::Rank2Data d = nine_ray();
  for (auto _ : state) benchmark::DoNotOptimize(cg::symmetric_form(d));
}
BENCHMARK(BM_SymmetricFormNineRay);

}  // namespace

BENCHMARK_MAIN();

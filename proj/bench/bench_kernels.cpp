// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "ptv/kernels.hpp"

namespace {

using namespace ptv;
namespace ks = ptv::kernels;

std::vector<Real> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(-1, 1);
  std::vector<Real> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<Point3> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(-1, 1);
  std::vector<Point3> p(n);
  for (auto& q : p) q = {u(rng), u(rng), 2 * u(rng)};
  return p;
}

using Gemm = void (*)(std::int64_t, std::int64_t, std::int64_t, const Real*, const Real*, Real*);

template <Gemm F>
void BM_gemm(benchmark::State& state) {
  const auto m = state.range(0), n = state.range(1), k = state.range(2);
  const auto a = random_values(static_cast<std::size_t>(m * k), 1);
  const auto b = random_values(static_cast<std::size_t>(k * n), 2);
  std::vector<Real> c(static_cast<std::size_t>(m * n));
  for (auto _ : state) {
    F(m, n, k, a.data(), b.data(), c.data());
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * m * n * k);
}

// Shapes of the tube MLP (slots x width) and attention projections.
#define GEMM_ARGS ->Args({4096, 32, 8})->Args({8192, 24, 24})->Args({256, 64, 64})->Args({512, 512, 32})

BENCHMARK(BM_gemm<ks::serial::gemm_nn>)->Name("gemm_nn/serial") GEMM_ARGS;
BENCHMARK(BM_gemm<ks::omp::gemm_nn>)->Name("gemm_nn/omp") GEMM_ARGS;
BENCHMARK(BM_gemm<ks::serial::gemm_tn>)->Name("gemm_tn/serial") GEMM_ARGS;
BENCHMARK(BM_gemm<ks::omp::gemm_tn>)->Name("gemm_tn/omp") GEMM_ARGS;

using Fps = std::vector<std::int32_t> (*)(std::span<const Point3>, std::int64_t, std::int64_t);

template <Fps F>
void BM_fps(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 3);
  const auto count = state.range(0) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(F(pts, count, 0));
}

BENCHMARK(BM_fps<ks::serial::fps>)->Name("fps/serial")->Arg(512)->Arg(768)->Arg(4096);
BENCHMARK(BM_fps<ks::omp::fps>)->Name("fps/omp")->Arg(512)->Arg(768)->Arg(4096);

using Query = std::vector<std::vector<ks::Hit>> (*)(std::span<const Point3>, std::span<const Point3>, float,
                                                    std::int64_t, const ks::AxisScales*);

template <Query F, bool Scaled>
void BM_query(benchmark::State& state) {
  const auto cloud = random_points(static_cast<std::size_t>(state.range(0)), 4);
  const auto queries = random_points(static_cast<std::size_t>(state.range(0) / 4), 5);
  const ks::AxisScales s{1.5f, 0.8f, 1.2f};
  for (auto _ : state) benchmark::DoNotOptimize(F(cloud, queries, 0.3f, 32, Scaled ? &s : nullptr));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
}

BENCHMARK(BM_query<ks::serial::radius_query, false>)->Name("ball_query/serial")->Arg(512)->Arg(2048);
BENCHMARK(BM_query<ks::omp::radius_query, false>)->Name("ball_query/omp")->Arg(512)->Arg(2048);
BENCHMARK(BM_query<ks::serial::radius_query, true>)->Name("ellipse_query/serial")->Arg(512)->Arg(2048);
BENCHMARK(BM_query<ks::omp::radius_query, true>)->Name("ellipse_query/omp")->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();

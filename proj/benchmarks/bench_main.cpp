#include <benchmark/benchmark.h>

#include <random>

#include "oqecc/additive_code.hpp"
#include "oqecc/code_params.hpp"
#include "oqecc/quantum_verifier.hpp"
#include "oqecc/search.hpp"

using namespace oqecc;

namespace {

AdditiveCode bacon_shor_2x2() {
  const auto ctx = GfContext::make(2, 1);
  const std::vector<std::vector<Elem>> gens{
      {1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 1}};
  std::vector<CodeVector> vs;
  for (const auto& g : gens) vs.emplace_back(ctx, Layout::Symplectic, g);
  return AdditiveCode::from_generators(ctx, 4, Layout::Symplectic, vs);
}

AdditiveCode sampled_code(unsigned p, unsigned m, std::size_t n, std::uint64_t index) {
  const auto ctx = GfContext::make(p, m);
  return AdditiveCode::from_rows(ctx, n, Layout::Symplectic, sample_generators(ctx, n, 7, index));
}

}  // namespace

static void BM_GfContextMake(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GfContext::make(2, m));
}
BENCHMARK(BM_GfContextMake)->DenseRange(1, 6);

static void BM_Hull(benchmark::State& state) {
  const auto code = sampled_code(2, 2, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hull(code));
}
BENCHMARK(BM_Hull)->Arg(2)->Arg(4)->Arg(6);

static void BM_MinDistance(benchmark::State& state) {
  const auto method = state.range(1) == 0 ? DistanceMethod::Exhaustive : DistanceMethod::BasisEnumeration;
  const auto code = sampled_code(2, 1, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code, method, 1));
}
BENCHMARK(BM_MinDistance)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_BuildProjector(benchmark::State& state) {
  const auto code = sampled_code(2, 1, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_projector(code));
}
BENCHMARK(BM_BuildProjector)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_VerifyDetectability(benchmark::State& state) {
  const auto code = bacon_shor_2x2();
  for (auto _ : state) benchmark::DoNotOptimize(verify_detectability(code, 1));
}
BENCHMARK(BM_VerifyDetectability)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  SearchOptions opts;
  opts.n = 4;
  opts.count = static_cast<std::uint64_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_search(opts));
}
BENCHMARK(BM_Search)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

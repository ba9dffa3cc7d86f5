#include <benchmark/benchmark.h>

#include "hypercert/jensen.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/sequence.hpp"
#include "hypercert/thresholds.hpp"
#include "hypercert/turan.hpp"

using namespace hypercert;

namespace {

const Sequence& partitions() {
  static const Sequence p = partition_sequence(4000);
  return p;
}

void BM_PartitionSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_sequence(state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionSequence)->Arg(1000)->Arg(4000)->Arg(10600)->Unit(benchmark::kMillisecond);

void BM_PlanePartitionSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(plane_partition_sequence(state.range(0)));
}
BENCHMARK(BM_PlanePartitionSequence)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_CertifyJensen(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const Polynomial f = jensen_poly(partitions(), d, 1000);
  const auto method = state.range(1) == 0 ? CertMethod::sturm : CertMethod::hankel;
  for (auto _ : state) benchmark::DoNotOptimize(certify_hyperbolic(f, method));
}
BENCHMARK(BM_CertifyJensen)->ArgsProduct({{3, 6, 10}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_TuranWindow(benchmark::State& state) {
  const auto j = static_cast<unsigned>(state.range(0));
  const auto w = partitions().window(2000, 2000 + j);
  for (auto _ : state) benchmark::DoNotOptimize(turan_window_value(w));
}
BENCHMARK(BM_TuranWindow)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_QuarticRoutes(benchmark::State& state) {
  const auto w = partitions().window(2000, 2004);
  if (state.range(0) == 0) {
    for (auto _ : state) benchmark::DoNotOptimize(turan_quartic_discriminant(w));
  } else {
    for (auto _ : state) benchmark::DoNotOptimize(turan_hankel_route(w));
  }
}
BENCHMARK(BM_QuarticRoutes)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_TuranIterate(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(turan_iterate(partitions(), 2, k, Anchor::centered, WorkerPool::serial(), 1000));
  }
}
BENCHMARK(BM_TuranIterate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_LaguerreAtZero(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laguerre_at_zero(partitions(), k, 3000));
}
BENCHMARK(BM_LaguerreAtZero)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_LaguerreThreshold(benchmark::State& state) {
  const auto pred = PredicateSpec::laguerre_zero(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(threshold_search(pred, partitions(), 3000));
}
BENCHMARK(BM_LaguerreThreshold)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "photonstat/fock.hpp"
#include "photonstat/majorize.hpp"
#include "photonstat/sampling.hpp"
#include "photonstat/splitter.hpp"
#include "photonstat/states.hpp"

namespace {

using namespace photonstat;

void BM_CoherentDistribution(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherent_distribution(mean));
  }
}
BENCHMARK(BM_CoherentDistribution)->Arg(1)->Arg(10)->Arg(100);

void BM_ThermalDistribution(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(thermal_distribution(mean));
  }
}
BENCHMARK(BM_ThermalDistribution)->Arg(1)->Arg(10)->Arg(100);

void BM_SqueezedBuild(benchmark::State& state) {
  const SqueezedParams params = solve_squeezed_params(6.0, 12.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(squeezed_distribution(params));
  }
}
BENCHMARK(BM_SqueezedBuild);

void BM_OrderAndCompare(benchmark::State& state) {
  const auto a = coherent_distribution(static_cast<double>(state.range(0)));
  const auto b = thermal_distribution(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(order_profile(a), order_profile(b)));
  }
}
BENCHMARK(BM_OrderAndCompare)->Arg(1)->Arg(10)->Arg(100);

void BM_NumberDifference(benchmark::State& state) {
  const auto d = thermal_distribution(static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(number_difference_distribution(d));
  }
}
BENCHMARK(BM_NumberDifference)->Arg(1)->Arg(10)->Arg(50);

void BM_JointEnumeration(benchmark::State& state) {
  const auto d = thermal_distribution(10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_distribution_brute_force(d).covariance());
  }
}
BENCHMARK(BM_JointEnumeration);

void BM_BeamSplitterSampling(benchmark::State& state) {
  const auto d = coherent_distribution(1.0);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_beam_splitter(d, samples, 42));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_BeamSplitterSampling)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();

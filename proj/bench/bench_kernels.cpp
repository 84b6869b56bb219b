#include <benchmark/benchmark.h>

#include <random>

#include "spikesweep/experiment.hpp"
#include "spikesweep/metrics.hpp"

using namespace spikesweep;

namespace {

std::vector<SpikeTrain> random_trains(std::size_t n, std::size_t spikes)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> t(0.0, 1000.0);
    std::vector<SpikeTrain> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(spikes);
        for (auto& x : v) x = t(rng);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        out.emplace_back(std::move(v), 0.0, 1000.0);
    }
    return out;
}

SweepConfig bench_config()
{
    SweepConfig c;
    c.duration = 500.0;
    c.epochs = 2;
    c.seeds = {0, 1, 2, 3};
    return c;
}

void BM_DistanceMatrixSerial(benchmark::State& state)
{
    const auto trains = random_trains(static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(distance_matrix_serial(trains, {Metric::victor_purpura, 1.0}));
}

void BM_DistanceMatrixParallel(benchmark::State& state)
{
    const auto trains = random_trains(static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(trains, {Metric::victor_purpura, 1.0}));
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto c = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto c = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}

} // namespace

BENCHMARK(BM_DistanceMatrixSerial)->Arg(32)->Arg(128);
BENCHMARK(BM_DistanceMatrixParallel)->Arg(32)->Arg(128);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "coventa/estimator.hpp"
#include "coventa/measures.hpp"
#include "coventa/mub.hpp"
#include "coventa/random.hpp"

using namespace coventa;

static void BM_g_hilbert_schmidt(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_mixed_state(dim, dim, dim * dim, 1);
    for (auto _ : state) benchmark::DoNotOptimize(g_hilbert_schmidt(rho).g);
}
BENCHMARK(BM_g_hilbert_schmidt)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_g_covariance_gellmann(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const GeneratorSet set = gell_mann_set(dim);
    const DensityMatrix rho = random_mixed_state(dim, dim, dim * dim, 2);
    for (auto _ : state) benchmark::DoNotOptimize(g_covariance(rho, set, set).g);
}
BENCHMARK(BM_g_covariance_gellmann)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_g_covariance_mub(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const GeneratorSet set = mub_generator_set(dim);
    const DensityMatrix rho = random_mixed_state(dim, dim, dim * dim, 3);
    for (auto _ : state) benchmark::DoNotOptimize(g_covariance(rho, set, set).g);
}
BENCHMARK(BM_g_covariance_mub)->Arg(2)->Arg(3)->Arg(5);

static void BM_build_mub(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_mub(dim).bases.size());
}
BENCHMARK(BM_build_mub)->Arg(3)->Arg(7)->Arg(13);

static void BM_schmidt_decompose(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const PureState psi = random_pure_state(dim, dim, 4);
    for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(psi).probabilities.sum());
}
BENCHMARK(BM_schmidt_decompose)->Arg(2)->Arg(4)->Arg(8);

static void BM_estimate_g_bell(benchmark::State& state) {
    Vector amps = Vector::Zero(4);
    amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
    const DensityMatrix bell = density_from_pure(PureState(2, 2, amps));
    const GeneratorSet set = mub_generator_set(2);
    EstimateOptions options;
    options.shots_per_setting = static_cast<std::int64_t>(state.range(0));
    options.trials = 1;
    options.seed = 5;
    for (auto _ : state) benchmark::DoNotOptimize(estimate_g(bell, set, set, options).mean_bias);
}
BENCHMARK(BM_estimate_g_bell)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_maximize_correlated(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_correlated_g(dim).second);
}
BENCHMARK(BM_maximize_correlated)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "dqm/infoentropy.hpp"
#include "dqm/oracle.hpp"
#include "dqm/spectrum.hpp"
#include "dqm/thermo.hpp"

namespace {

dqm::SystemConfig bench_config() {
    dqm::SystemConfig cfg;
    cfg.alpha = 0.75;
    cfg.B = 1.0;
    cfg.phi = 0.75;
    return cfg;
}
const dqm::PotentialSpec kPot = dqm::Anharmonic{1.0, 1.0, 0.0};

void BM_laguerre(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dqm::laguerre(n, 1.452966, 2.3));
}
BENCHMARK(BM_laguerre)->Arg(1)->Arg(5)->Arg(20);

void BM_energy(benchmark::State& state) {
    const auto cfg = bench_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(dqm::energy(cfg, kPot, {2, 1}).energy);
}
BENCHMARK(BM_energy);

void BM_wavefunction_eval(benchmark::State& state) {
    const auto st = dqm::wavefunction(bench_config(), kPot, {2, 1});
    double r = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(st(r));
        r = (r < 5.0) ? r + 0.01 : 0.1;
    }
}
BENCHMARK(BM_wavefunction_eval);

void BM_quadrature_norm(benchmark::State& state) {
    const auto cfg = bench_config();
    const auto st = dqm::wavefunction(cfg, kPot, {2, 1});
    for (auto _ : state) {
        const auto q = dqm::integrate_semiline(
            [&](double r) {
                const double psi = st(r);
                return psi * psi * cfg.alpha * r;
            },
            1e-10);
        benchmark::DoNotOptimize(q.value);
    }
}
BENCHMARK(BM_quadrature_norm);

void BM_thermo_report(benchmark::State& state) {
    dqm::ThermoInput in{1.0, bench_config(), kPot, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqm::free_energy(in));
        benchmark::DoNotOptimize(dqm::mean_energy(in));
        benchmark::DoNotOptimize(dqm::heat_capacity(in));
        benchmark::DoNotOptimize(dqm::entropy_thermo(in));
    }
}
BENCHMARK(BM_thermo_report);

void BM_numerov(benchmark::State& state) {
    const auto cfg = bench_config();
    dqm::RadialGrid grid;
    grid.num_points = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dqm::numerov_eigenvalue(cfg, kPot, 1, 0, grid, 1e-7));
}
BENCHMARK(BM_numerov)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_position_entropy(benchmark::State& state) {
    const auto st = dqm::wavefunction(bench_config(), kPot, {0, 1});
    const dqm::DensityConvention conv;
    for (auto _ : state)
        benchmark::DoNotOptimize(dqm::position_entropy(st, conv));
}
BENCHMARK(BM_position_entropy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

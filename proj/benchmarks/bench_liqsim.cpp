#include <benchmark/benchmark.h>

#include "liqsim/mc.hpp"
#include "liqsim/strategy.hpp"
#include "liqsim/varcalc.hpp"

namespace {

liqsim::LiquidationProblem call_problem() {
    liqsim::LiquidationProblem p;
    p.market = liqsim::MarketParams{0.0, 0.0, 0.2, 1.0};
    p.impact = liqsim::ImpactParams{0.1, 1.0};
    p.option = liqsim::OptionSpec{1.0, 0.0};
    p.phi0 = 0.5;
    return p;
}

void BM_BachelierValueU(benchmark::State& state) {
    const auto p = call_problem();
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            liqsim::bachelier_value_u(p.option, p.market, p.impact.a, 0.37, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_BachelierValueU);

void BM_DeltaUx(benchmark::State& state) {
    const auto p = call_problem();
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(liqsim::delta_ux(p.option, p.market, p.impact.a, 0.37, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_DeltaUx);

void BM_IntegrateTrajectory(benchmark::State& state) {
    const auto p = call_problem();
    const auto grid = liqsim::TimeGrid::uniform(p.market.horizon, state.range(0));
    const auto path = liqsim::simulate_path(p.market, grid, 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(liqsim::integrate_trajectory(p, path));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateTrajectory)->Arg(1000)->Arg(4000);

void BM_PathExponent(benchmark::State& state) {
    const auto p = call_problem();
    const auto grid = liqsim::TimeGrid::uniform(p.market.horizon, 1000);
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            liqsim::path_exponent(p, liqsim::StrategyKind::Asymptotic, grid, 1, i++));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PathExponent);

void BM_EstimateCE(benchmark::State& state) {
    const auto p = call_problem();
    const auto grid = liqsim::TimeGrid::uniform(p.market.horizon, 1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            liqsim::estimate_ce(p, liqsim::StrategyKind::Asymptotic, grid,
                                static_cast<int>(state.range(0)), 1, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateCE)->Arg(1000);

void BM_XiMinimizer(benchmark::State& state) {
    liqsim::VariationalProblem p;
    p.lambda = 0.1;
    p.x = 1.0;
    p.phi = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(liqsim::xi_minimizer(p).value);
}
BENCHMARK(BM_XiMinimizer);

void BM_BruteForceValue(benchmark::State& state) {
    liqsim::VariationalProblem p;
    p.lambda = 0.1;
    p.x = 1.0;
    p.phi = 0.5;
    for (auto _ : state)
        benchmark::DoNotOptimize(liqsim::brute_force_value(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForceValue)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();

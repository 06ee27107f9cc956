#include <benchmark/benchmark.h>

#include "pltr/flow.hpp"
#include "pltr/gen.hpp"
#include "pltr/pltr.hpp"
#include "pltr/schedule_build.hpp"

namespace {

pltr::Instance make_instance(int n, int horizon, int m) {
    pltr::GenSpec spec;
    spec.n = n;
    spec.m = m;
    spec.q = 3;
    spec.horizon = horizon;
    spec.volume_min = 1;
    spec.volume_max = 4;
    spec.slack_min = 0;
    spec.slack_max = horizon / 2;
    spec.seed = 12345;
    return pltr::generate(spec);
}

void BM_max_flow(benchmark::State& state) {
    pltr::Instance instance =
        make_instance(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(1)), 4);
    pltr::BoundProfile bounds =
        pltr::BoundProfile::uniform(instance.horizon_size(), 0, instance.m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pltr::check_feasible(instance, bounds));
    }
}
BENCHMARK(BM_max_flow)->Args({16, 64})->Args({64, 512})->Args({128, 4096});

void BM_pltr_run(benchmark::State& state) {
    pltr::Instance instance =
        make_instance(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(1)), 4);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(pltr::run(instance));
        } catch (const pltr::InfeasibleError&) {
            state.SkipWithError("generated instance infeasible");
            break;
        }
    }
}
BENCHMARK(BM_pltr_run)->Args({16, 64})->Args({32, 512})->Args({64, 4096});

void BM_realize(benchmark::State& state) {
    pltr::Instance instance =
        make_instance(static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(1)), 4);
    pltr::PltrResult result = pltr::run(instance);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pltr::realize(instance, result.final_bounds));
    }
}
BENCHMARK(BM_realize)->Args({16, 64})->Args({32, 512});

}  // namespace

BENCHMARK_MAIN();

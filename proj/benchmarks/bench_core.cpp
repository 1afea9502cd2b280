#include <benchmark/benchmark.h>

#include <cmath>

#include "teichrec/fixtures.hpp"
#include "teichrec/flat_surface.hpp"
#include "teichrec/hyperbolic.hpp"
#include "teichrec/large_deviations.hpp"
#include "teichrec/rng.hpp"
#include "teichrec/walk_sim.hpp"

using namespace teichrec;

static void BM_EnumerateTorus(benchmark::State& state) {
    const auto torus = fixtures::square_torus();
    const double L = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto cs = flat_surface::enumerate_saddle_connections(torus, L);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_EnumerateTorus)->Arg(5)->Arg(10)->Arg(20);

static void BM_EnumerateOrigami(benchmark::State& state) {
    const auto l3 = fixtures::l_origami3();
    const double L = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto cs = flat_surface::enumerate_saddle_connections(l3, L);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_EnumerateOrigami)->Arg(5)->Arg(10);

static void BM_Systole(benchmark::State& state) {
    const auto s = flat_surface::apply_linear(fixtures::l_origami3(),
                                              hyperbolic::Isometry2::flow(1.3));
    for (auto _ : state) benchmark::DoNotOptimize(flat_surface::shortest_saddle_connection(s));
}
BENCHMARK(BM_Systole);

static void BM_WalkStep(benchmark::State& state) {
    auto s = fixtures::l_origami3();
    Rng rng(5);
    for (auto _ : state) {
        s = walk_sim::walk_step(s, 2.0, rng.uniform(0.0, 6.283185307179586));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_WalkStep);

static void BM_Canonicalize(benchmark::State& state) {
    const auto moved = flat_surface::apply_linear(fixtures::l_origami3(),
                                                  hyperbolic::Isometry2::flow(2.0));
    for (auto _ : state) {
        auto c = flat_surface::canonicalize(moved);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Canonicalize);

static void BM_PolarAngle(benchmark::State& state) {
    const hyperbolic::PolarChange pc(12.0, 9.0);
    double phi = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyperbolic::polar_angle(pc, phi));
        phi = phi < 3.0 ? phi + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_PolarAngle);

static void BM_TriangleThinness(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperbolic::triangle_thinness(8.0, 11.0, 6.5, 48));
}
BENCHMARK(BM_TriangleThinness);

static void BM_ChernoffRate(benchmark::State& state) {
    const auto eta = large_deviations::TailModel::exponential_tail(1.0, 1.0, 0.0);
    const auto xi = large_deviations::TailModel::deterministic(2.0);
    for (auto _ : state) {
        auto rr = large_deviations::deviation_rate(eta, xi, 0.9, 8.0);
        benchmark::DoNotOptimize(rr);
    }
}
BENCHMARK(BM_ChernoffRate);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "etcs/angles.hpp"
#include "etcs/catalog.hpp"
#include "etcs/lattice.hpp"
#include "etcs/maslov.hpp"
#include "etcs/nu.hpp"
#include "etcs/torus.hpp"

namespace {

using namespace etcs;

const Configuration& rank4_config() { return find_entry("ex_3_7")->config; }

void bench_char_poly(benchmark::State& state) {
    const RatMat m = composite_isometry(rank4_config());
    for (auto _ : state) {
        RatPoly p = char_poly(m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bench_char_poly);

void bench_inertia(benchmark::State& state) {
    const RatMat& g = rank4_config().gram;
    for (auto _ : state) {
        Inertia in = inertia(g);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(bench_inertia);

void bench_configuration_angles(benchmark::State& state) {
    const Configuration& cfg = rank4_config();
    for (auto _ : state) {
        AngleSpectrum sp = configuration_angles(cfg);
        benchmark::DoNotOptimize(sp);
    }
}
BENCHMARK(bench_configuration_angles);

void bench_nu_bar(benchmark::State& state) {
    const Configuration& cfg = rank4_config();
    for (auto _ : state) {
        NuReport rep = nu_bar(cfg);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(bench_nu_bar);

void bench_catalog_verify(benchmark::State& state) {
    for (auto _ : state) {
        auto reports = verify_all();
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(bench_catalog_verify);

void bench_lagrangian_angle(benchmark::State& state) {
    const LagrangianPair pair = kernel_example_pair(make_rat(Int(1), Int(4)));
    for (auto _ : state) {
        MaslovResult res = maslov_angle(pair);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(bench_lagrangian_angle);

void bench_torus_match(benchmark::State& state) {
    const Surd c{Rat(2)};
    const TorusFactor t_plus{2, c, c * Surd::sqrt3()};
    const TorusFactor t_minus{2, c * Surd::sqrt3(), c};
    for (auto _ : state) {
        auto angles = gluing_angles(t_plus, t_minus);
        benchmark::DoNotOptimize(angles);
    }
}
BENCHMARK(bench_torus_match);

} // namespace

BENCHMARK_MAIN();

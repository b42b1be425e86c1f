#include "claw/detect.hpp"
#include "claw/generators.hpp"
#include "claw/oracle.hpp"
#include "claw/reduce.hpp"
#include "claw/struct_color.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace claw;

Graph random_graph(uint64_t seed, int n, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

void BM_chromatic_number(benchmark::State& state) {
    Graph g = random_graph(7, int(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::chromatic_number(g));
}
BENCHMARK(BM_chromatic_number)->Arg(12)->Arg(16)->Arg(20);

void BM_clique_number(benchmark::State& state) {
    Graph g = random_graph(11, int(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::clique_number(g));
}
BENCHMARK(BM_clique_number)->Arg(16)->Arg(24)->Arg(32);

void BM_max_matching(benchmark::State& state) {
    Graph g = random_graph(13, int(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::max_matching(g).size());
}
BENCHMARK(BM_max_matching)->Arg(32)->Arg(64)->Arg(128);

void BM_fractional_chromatic(benchmark::State& state) {
    Graph g = random_graph(17, int(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::fractional_chromatic(g).str());
}
BENCHMARK(BM_fractional_chromatic)->Arg(10)->Arg(13)->Arg(16);

void BM_find_claw(benchmark::State& state) {
    auto [spec, g] = gen::gen_icosahedral(3, gen::IcosahedralKind::G0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(detect::find_claw(g).has_value());
}
BENCHMARK(BM_find_claw);

void BM_find_good_triad(benchmark::State& state) {
    auto [spec, g] = gen::gen_icosahedral(5, gen::IcosahedralKind::G2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(detect::find_good_triad(g).has_value());
}
BENCHMARK(BM_find_good_triad);

void BM_make_skeletal(benchmark::State& state) {
    Graph base(6);
    for (int i = 0; i < 6; ++i) base.add_edge(i, (i + 1) % 6);
    auto [spec, g] = gen::gen_thickening(9, base, ThickeningSpec::Family::Generic, 3, 0.8);
    for (auto _ : state) {
        auto [h, trace] = reduce::make_skeletal(g);
        benchmark::DoNotOptimize(h.m());
    }
}
BENCHMARK(BM_make_skeletal);

void BM_color_claw_free_gear(benchmark::State& state) {
    Instance inst = gen::gen_strip_composite(4, JoinAnnotation::Kind::Gear);
    for (auto _ : state) {
        Coloring c = colorers::color_claw_free(inst.g, inst.ann);
        benchmark::DoNotOptimize(c.colors_used());
    }
}
BENCHMARK(BM_color_claw_free_gear);

void BM_color_icosahedral(benchmark::State& state) {
    auto [spec, g] = gen::gen_icosahedral(6, gen::IcosahedralKind::G1, 3);
    for (auto _ : state) {
        Coloring c = colorers::color_icosahedral(spec, g);
        benchmark::DoNotOptimize(c.colors_used());
    }
}
BENCHMARK(BM_color_icosahedral);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <dcoset/coset.hpp>
#include <dcoset/hecke.hpp>
#include <dcoset/text.hpp>

using namespace dcoset;

namespace {

const Ring kZ = Ring::integers();
const Ring kR5 = Ring::quadratic(Int(-5));

void bm_mu_total(benchmark::State& state) {
    Mat2 m = parse_matrix(kR5, "[[0+1*w,0],[0,2]]");
    for (auto _ : state) benchmark::DoNotOptimize(mu_total(m));
}
BENCHMARK(bm_mu_total);

void bm_factor_ideal(benchmark::State& state) {
    FractionalIdeal a = FractionalIdeal::principal(RingElement(kR5, 360));
    for (auto _ : state) benchmark::DoNotOptimize(a.factor());
}
BENCHMARK(bm_factor_ideal);

void bm_decompose_deterministic(benchmark::State& state) {
    Mat2 m = parse_matrix(kR5, "[[1,0],[0,2]]");
    for (auto _ : state) benchmark::DoNotOptimize(decompose_deterministic(m));
}
BENCHMARK(bm_decompose_deterministic);

void bm_decompose_probabilistic(benchmark::State& state) {
    Mat2 m = parse_matrix(kR5, "[[1,0],[0,2]]");
    SamplerConfig cfg;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(decompose_probabilistic(m, cfg));
    }
}
BENCHMARK(bm_decompose_probabilistic);

void bm_hecke_square(benchmark::State& state) {
    Mat2 m = parse_matrix(kR5, "[[1,0],[0,2]]");
    for (auto _ : state) benchmark::DoNotOptimize(hecke_multiply(m, m));
}
BENCHMARK(bm_hecke_square);

void bm_hermite_oracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hermite_transversal_z(Int(60)));
}
BENCHMARK(bm_hermite_oracle);

void bm_normal_form(benchmark::State& state) {
    Mat2 m = parse_matrix(kZ, "[[35,12],[19,7]]");
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(m));
}
BENCHMARK(bm_normal_form);

}  // namespace

BENCHMARK_MAIN();

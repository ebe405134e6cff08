#include <benchmark/benchmark.h>

#include "pcl/orbgroups.hpp"
#include "pcl/pencils.hpp"
#include "pcl/qpoly.hpp"

using namespace pcl;

static void BM_Gcd(benchmark::State& state) {
    QPoly a = parse_poly("x^2 + y^2 + x*z + z^2");
    QPoly b = parse_poly("x^3 - 2*x*y*z + y^2*z - z^3");
    QPoly pa = a * b, pb = b * parse_poly("x^2 - y*z + 3*z^2");
    for (auto _ : state) benchmark::DoNotOptimize(gcd(pa, pb));
}
BENCHMARK(BM_Gcd);

static void BM_Resultant(benchmark::State& state) {
    QPoly p = parse_poly("x^3 - 2*x*y*z + y^2*z - z^3");
    for (auto _ : state) benchmark::DoNotOptimize(resultant_q(p, p.derivative(0), 0));
}
BENCHMARK(BM_Resultant);

static void BM_SpecialFibers(benchmark::State& state) {
    Pencil p(parse_poly("z^2"), parse_poly("x^2 + y^2 - z^2"));
    for (auto _ : state) benchmark::DoNotOptimize(special_fibers(p, 1));
}
BENCHMARK(BM_SpecialFibers);

static void BM_CountEpimorphisms(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_epimorphisms(0, {2, 2, 5}, 20));
}
BENCHMARK(BM_CountEpimorphisms);

BENCHMARK_MAIN();

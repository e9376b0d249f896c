#include <benchmark/benchmark.h>

#include "humbert/f2.hpp"
#include "humbert/psi1.hpp"
#include "humbert/psi2.hpp"

using namespace humbert;

static void bm_psi1_double_series(benchmark::State& state) {
    Psi1Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            psi1_eval(p, cplx(0.4L, 0), cplx(1.2L, 0),
                      Psi1Method::double_series));
}
BENCHMARK(bm_psi1_double_series);

static void bm_psi1_continuation(benchmark::State& state) {
    Psi1Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(psi1_eval(p, cplx(-20, 0), cplx(1, 0),
                                           Psi1Method::continuation));
}
BENCHMARK(bm_psi1_continuation);

static void bm_psi1_laplace(benchmark::State& state) {
    Psi1Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            psi1_eval(p, cplx(-5, 0), cplx(1, 0), Psi1Method::laplace));
}
BENCHMARK(bm_psi1_laplace);

static void bm_psi2_mb(benchmark::State& state) {
    Psi2Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(0.9L, 0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(psi2_eval(p, cplx(0.5L, 0), cplx(-2, 0),
                                           Psi2Method::mb_integral));
}
BENCHMARK(bm_psi2_mb);

static void bm_f2_jaeger(benchmark::State& state) {
    F2Params p{cplx(0.9L, 0), cplx(0.6L, 0), cplx(0.4L, 0), cplx(1.4L, 0),
               cplx(1.2L, 0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(f2_eval(p, cplx(-20, 0), cplx(0.3L, 0),
                                         F2Method::jaeger));
}
BENCHMARK(bm_f2_jaeger);

BENCHMARK_MAIN();

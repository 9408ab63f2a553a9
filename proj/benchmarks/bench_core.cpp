#include <benchmark/benchmark.h>

#include "gapn/diff_analysis.hpp"
#include "gapn/dual_arcs.hpp"
#include "gapn/walsh.hpp"

using namespace gapn;

namespace {

FieldPtr f35()
{
    static FieldPtr f = make_field(3, 5, {1, 2, 0, 0, 0, 1});
    return f;
}

const FunctionTable& x11()
{
    static FunctionTable t = tabulate(make_monomial(f35(), 11));
    return t;
}

} // namespace

static void bench_mul(benchmark::State& state)
{
    const Field& f = *f35();
    Elem x = 81, y = 3;
    for (auto _ : state) {
        x = f.mul(x, y);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(bench_mul);

static void bench_pow(benchmark::State& state)
{
    const Field& f = *f35();
    Elem x = 1;
    for (auto _ : state) {
        x = x % 242 + 1;
        Elem r = f.pow(x, 17);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bench_pow);

static void bench_spectrum_3_5(benchmark::State& state)
{
    for (auto _ : state) {
        SpectrumReport rep = spectrum(x11());
        benchmark::DoNotOptimize(rep.max_count);
    }
}
BENCHMARK(bench_spectrum_3_5);

static void bench_is_gapn_3_5(benchmark::State& state)
{
    for (auto _ : state) {
        bool v = is_gapn(x11());
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bench_is_gapn_3_5);

static void bench_walsh_report_3_5(benchmark::State& state)
{
    for (auto _ : state) {
        WalshReport rep = walsh_report(x11());
        benchmark::DoNotOptimize(rep.is_gab);
    }
}
BENCHMARK(bench_walsh_report_3_5);

static void bench_gab_via_s3_3_5(benchmark::State& state)
{
    FunctionTable x17 = tabulate(make_monomial(f35(), 17));
    for (auto _ : state) {
        bool v = gab_via_s3(x17);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bench_gab_via_s3_3_5);

static void bench_interpolate_3_5(benchmark::State& state)
{
    for (auto _ : state) {
        Polynomial p = interpolate(x11());
        benchmark::DoNotOptimize(p.coeffs().size());
    }
}
BENCHMARK(bench_interpolate_3_5);

static void bench_dual_arc_3_4(benchmark::State& state)
{
    FieldPtr f = make_field(3, 4);
    FunctionTable gold = tabulate(make_gold(f, 1));
    auto m = greedy_cap_set(*f, 7);
    for (auto _ : state) {
        auto arc = build_arc(gold, MuNuConfig::gold_identity(), m);
        ArcReport rep = verify_dual_arc(*f, arc);
        benchmark::DoNotOptimize(rep.pairwise_ok);
    }
}
BENCHMARK(bench_dual_arc_3_4);

BENCHMARK_MAIN();

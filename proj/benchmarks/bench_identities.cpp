#include "prealt/commands.hpp"

#include <benchmark/benchmark.h>

using namespace prealt;

namespace {

void octonion_alternative(benchmark::State& st)
{
    auto o = catalog_entry("octonion").alternative();
    CheckOptions opts{10, static_cast<unsigned>(st.range(0))};
    for (auto _ : st) benchmark::DoNotOptimize(check_alternative(o, opts).passed);
}
BENCHMARK(octonion_alternative)->Arg(1)->Arg(4);

void octonion_associative(benchmark::State& st)
{
    auto o = catalog_entry("octonion").alternative();
    for (auto _ : st) benchmark::DoNotOptimize(check_associative(o).violation_count);
}
BENCHMARK(octonion_associative);

void canonical_solution(benchmark::State& st)
{
    auto p = catalog_entry("p3-graded").prealternative();
    Sign s = st.range(0) ? Sign::Plus : Sign::Minus;
    for (auto _ : st) benchmark::DoNotOptimize(canonical_r(p, s).r);
}
BENCHMARK(canonical_solution)->Arg(0)->Arg(1);

void pa_residuals_6dim(benchmark::State& st)
{
    auto rec = canonical_r(catalog_entry("p3-graded").prealternative(), Sign::Plus);
    for (auto _ : st) benchmark::DoNotOptimize(pa_residuals(*rec.pre, rec.r).all_zero());
}
BENCHMARK(pa_residuals_6dim);

void pad_double_p2(benchmark::State& st)
{
    auto p = catalog_entry("p2").prealternative();
    Tensor2 r(p.field, 2, 2);
    r(0, 1) = Scalar::from_int(p.field, 1);
    r(1, 0) = Scalar::from_int(p.field, 1);
    auto b = PreAltBialgebra::make(p, coboundary_comult(p, r));
    for (auto _ : st) benchmark::DoNotOptimize(pad_double(b).algebra.dim);
}
BENCHMARK(pad_double_p2);

// exhaustive skew AYBE search on the zero algebra of dimension n over GF(3)
void aybe_search(benchmark::State& st)
{
    auto a = reduce_mod(catalog_entry("zero-" + std::to_string(st.range(0))), Field::prime(3)).alternative();
    SearchOptions so{10'000'000, static_cast<unsigned>(st.range(1))};
    for (auto _ : st) benchmark::DoNotOptimize(brute_search_aybe(a, so).hits.size());
}
BENCHMARK(aybe_search)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

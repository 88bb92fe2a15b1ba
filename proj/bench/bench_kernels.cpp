// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ilab/detect.hpp"
#include "ilab/fitter.hpp"
#include "ilab/gen.hpp"
#include "ilab/incidence.hpp"

using namespace ilab;

namespace {

Scene mixed_scene(std::size_t k) {
    return merge(merge(gen_hyperboloid(k, k), translate(gen_planar(k, k), {0, 0, 50})), gen_generic(k, k, 17));
}

void BM_incidences_serial(benchmark::State& st) {
    const Scene s = mixed_scene(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(all_incidences_serial(s));
}

void BM_incidences_omp(benchmark::State& st) {
    const Scene s = mixed_scene(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(all_incidences(s));
}

void BM_constraints_serial(benchmark::State& st) {
    const Scene s = mixed_scene(10);
    const auto refs = curve_refs(s);
    for (auto _ : st) benchmark::DoNotOptimize(assemble_constraints_serial(refs, st.range(0)));
}

void BM_constraints_omp(benchmark::State& st) {
    const Scene s = mixed_scene(10);
    const auto refs = curve_refs(s);
    for (auto _ : st) benchmark::DoNotOptimize(assemble_constraints(refs, st.range(0)));
}

MultiPoly hyperboloid() {
    const auto x = MultiPoly::variable(0), y = MultiPoly::variable(1), z = MultiPoly::variable(2);
    return x * x + y * y - z * z - MultiPoly::constant(Rational(1));
}

void BM_contained_serial(benchmark::State& st) {
    const Scene s = mixed_scene(st.range(0));
    const MultiPoly q = hyperboloid();
    for (auto _ : st) benchmark::DoNotOptimize(contained_curves_serial(q, s));
}

void BM_contained_omp(benchmark::State& st) {
    const Scene s = mixed_scene(st.range(0));
    const MultiPoly q = hyperboloid();
    for (auto _ : st) benchmark::DoNotOptimize(contained_curves(q, s));
}

void BM_detect_serial(benchmark::State& st) {
    const Scene s = merge(gen_hyperboloid(st.range(0), st.range(0)), gen_generic(4, 4, 5));
    for (auto _ : st) benchmark::DoNotOptimize(find_structured_families_serial(s, {5, 1}));
}

void BM_detect_omp(benchmark::State& st) {
    const Scene s = merge(gen_hyperboloid(st.range(0), st.range(0)), gen_generic(4, 4, 5));
    for (auto _ : st) benchmark::DoNotOptimize(find_structured_families(s, {5, 1}));
}

}  // namespace

BENCHMARK(BM_incidences_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_incidences_omp)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_constraints_serial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_constraints_omp)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contained_serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contained_omp)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_detect_serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_detect_omp)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

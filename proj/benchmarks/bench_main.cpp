#include "support/quivers.hpp"

#include "tiltlab/catalog.hpp"
#include "tiltlab/cluster_algebra.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/tilting.hpp"

#include <benchmark/benchmark.h>

using namespace tiltlab;

namespace {

Quiver linear(std::size_t n) {
    std::vector<std::string> v;
    fixtures::Pairs a;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) a.push_back({std::to_string(i + 1), std::to_string(i)});
    return Quiver(v, a);
}

void BM_Catalog(benchmark::State& state) {
    const auto q = linear(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog(q));
}
BENCHMARK(BM_Catalog)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CatalogKronecker(benchmark::State& state) {
    const auto q = fixtures::kronecker();
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog(q, state.range(0)));
}
BENCHMARK(BM_CatalogKronecker)->Arg(9)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_HomExt(benchmark::State& state) {
    const auto c = build_catalog(fixtures::d4());
    for (auto _ : state)
        for (const auto& a : c.entries())
            for (const auto& b : c.entries()) benchmark::DoNotOptimize(hom_ext(a.rep, b.rep));
}
BENCHMARK(BM_HomExt)->Unit(benchmark::kMillisecond);

void BM_Tilting(benchmark::State& state) {
    const auto c = build_catalog(linear(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tilting(c));
}
BENCHMARK(BM_Tilting)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SigmaPrime(benchmark::State& state) {
    const auto c = build_catalog(fixtures::d4());
    for (auto _ : state) benchmark::DoNotOptimize(build_sigma(c, true));
}
BENCHMARK(BM_SigmaPrime)->Unit(benchmark::kMillisecond);

void BM_Clusters(benchmark::State& state) {
    const auto q = state.range(0) == 0 ? fixtures::a3() : fixtures::d4();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_clusters(q, 64));
}
BENCHMARK(BM_Clusters)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PreprojectiveVolume(benchmark::State& state) {
    const auto q = fixtures::kronecker();
    for (auto _ : state) benchmark::DoNotOptimize(preprojective_volume(q, state.range(0)));
}
BENCHMARK(BM_PreprojectiveVolume)->Arg(21)->Arg(101);

}  // namespace

BENCHMARK_MAIN();

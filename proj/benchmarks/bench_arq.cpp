#include <benchmark/benchmark.h>

#include "arq/degree.hpp"
#include "arq/generic_cover.hpp"
#include "arq/mesh_category.hpp"
#include "arq/probe.hpp"
#include "arq/quiver_io.hpp"

using namespace arq;

namespace {

QuiverPtr load(const std::string& name) {
  auto f = load_quiver_file(std::string(ARQ_QUIVER_DIR) + "/" + name + ".quiver");
  return std::make_shared<const Quiver>(Quiver::from_translation_quiver(f.quiver));
}

const char* dynkin(int n) {
  static const char* names[] = {"a2", "a3", "a4", "a5", "a6"};
  return names[n - 2];
}

}  // namespace

static void BM_KnitDynkin(benchmark::State& state) {
  auto q = load(dynkin(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(knit_ar_component(q, KnitDirection::from_projectives, 25));
}
BENCHMARK(BM_KnitDynkin)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_KnitAtilde2(benchmark::State& state) {
  auto q = load("atilde2");
  for (auto _ : state)
    benchmark::DoNotOptimize(knit_ar_component(q, KnitDirection::from_injectives, static_cast<std::size_t>(state.range(0))));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KnitAtilde2)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond)->Complexity();

// Fresh filtration each iteration, so the cache fill is measured.
static void BM_RadicalDims(benchmark::State& state) {
  auto ar = knit_ar_component(load(dynkin(static_cast<int>(state.range(0)))), KnitDirection::from_projectives, 25);
  for (auto _ : state) {
    RadicalFiltration rf(ar);
    std::size_t total = 0;
    for (std::size_t x = 0; x < ar.vertex_count(); ++x)
      for (std::size_t y = 0; y < ar.vertex_count(); ++y)
        total += rf.dims(static_cast<VertexId>(x), static_cast<VertexId>(y)).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_RadicalDims)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_FiniteTypeCheck(benchmark::State& state) {
  auto q = load(dynkin(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(finite_type_check(q, 25));
}
BENCHMARK(BM_FiniteTypeCheck)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_LeftDegreeAtilde2(benchmark::State& state) {
  auto q = load("atilde2");
  auto ar = knit_ar_component(q, KnitDirection::from_injectives, 15);
  auto x = *ar.injective_vertex(q->index_of(3));
  auto y = *ar.injective_vertex(q->index_of(1));
  ArrowId a = -1;
  for (auto b : ar.out_arrows(x))
    if (ar.arrow(b).target == y) a = b;
  auto f = ArMorphism::from_arrow(ar, a);
  for (auto _ : state) {
    RadicalFiltration rf(ar);
    benchmark::DoNotOptimize(left_degree(f, rf, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_LeftDegreeAtilde2)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_BuildCover(benchmark::State& state) {
  auto base = knit_ar_component(load("atilde2"), KnitDirection::from_injectives, 6).translation_quiver();
  for (auto _ : state) {
    auto gc = build_cover(base, 0, static_cast<std::size_t>(state.range(0)));
    state.counters["vertices"] = static_cast<double>(gc.cover.vertex_count());
  }
}
BENCHMARK(BM_BuildCover)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_MeshCategoryOnCover(benchmark::State& state) {
  auto base = knit_ar_component(load("atilde2"), KnitDirection::from_injectives, 6).translation_quiver();
  auto gc = build_cover(base, 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    MeshCategory mc(gc.cover);
    std::size_t total = 0;
    for (VertexId y : gc.cover.vertices()) total += mc.hom_dim(0, y);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MeshCategoryOnCover)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Probe(benchmark::State& state) {
  auto ar = knit_ar_component(load(dynkin(static_cast<int>(state.range(0)))), KnitDirection::from_projectives, 25);
  RadicalFiltration rf(ar);
  auto gc = build_cover(ar.translation_quiver(), 0, 12);
  auto F = well_behaved_assignment(gc, rf);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_standard_probe(rf, gc, F));
}
BENCHMARK(BM_Probe)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

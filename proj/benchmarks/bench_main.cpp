#include <benchmark/benchmark.h>

#include "bitri/corpus.hpp"
#include "bitri/standard.hpp"
#include "bitri/triangle.hpp"

using namespace bitri;

namespace {

void BM_StrictDescentObject(benchmark::State& state) {
  auto ds = corpus_descent_diagrams();
  for (auto _ : state)
    for (auto& d : ds) benchmark::DoNotOptimize(strict_descent_object(d.diagram).desc->morphisms());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ds.size()));
}
BENCHMARK(BM_StrictDescentObject)->Unit(benchmark::kMillisecond);

void BM_EnumeratePseudocoalgebras(benchmark::State& state) {
  auto t = comonad_by_name(state.range(0) ? "product:I" : "product:2");
  auto carrier = cats::iso();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pseudocoalgebras(t, carrier).size());
  state.SetLabel(t->name());
}
BENCHMARK(BM_EnumeratePseudocoalgebras)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HomCategory(benchmark::State& state) {
  auto zs = corpus_pseudocoalgebras("product:I");
  const auto& x = zs.back().z;
  const auto& z = zs[zs.size() / 2].z;
  for (auto _ : state) {
    if (state.range(0))
      benchmark::DoNotOptimize(hom_via_descent(x, z).desc->objects());
    else
      benchmark::DoNotOptimize(hom_category_direct(x, z).cat->objects());
  }
  state.SetLabel(state.range(0) ? "via descent" : "direct");
}
BENCHMARK(BM_HomCategory)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CoherenceG(benchmark::State& state) {
  auto zs = corpus_pseudocoalgebras("product:I");
  const auto& z = zs.back().z;
  for (auto _ : state) benchmark::DoNotOptimize(coherence_G(z).g.has_value());
}
BENCHMARK(BM_CoherenceG)->Unit(benchmark::kMillisecond);

void BM_PsRan(benchmark::State& state) {
  auto ks = corpus_kan_cases();
  for (auto _ : state)
    for (auto& k : ks) benchmark::DoNotOptimize(ps_ran(k.along, k.diagram, 0).cat->objects());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ks.size()));
}
BENCHMARK(BM_PsRan)->Unit(benchmark::kMillisecond);

void BM_DubucVsBruteforce(benchmark::State& state) {
  auto ts = corpus_triangles();
  for (auto _ : state)
    for (auto& t : ts) {
      if (state.range(0))
        benchmark::DoNotOptimize(right_adjoint_bruteforce(t.triangle.j).has_value());
      else
        benchmark::DoNotOptimize(dubuc_right_adjoint(t.triangle).adjunction.has_value());
    }
  state.SetLabel(state.range(0) ? "brute force" : "equalizers");
}
BENCHMARK(BM_DubucVsBruteforce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

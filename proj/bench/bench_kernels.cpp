// Serial reference against the OpenMP path for each parallel kernel. The
// second benchmark argument selects the path: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "sperner/cover.hpp"
#include "sperner/fixedpoint.hpp"

using namespace sperner;

namespace {

Exec path(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

Decomposition grid(int d, int n) {
  return edgewise_subdivide(Decomposition::triangulated(Polytope::standard_simplex(d)), n);
}

void BM_CompleteCells(benchmark::State& state) {
  testgen::Rng rng(1);
  auto d = grid(3, static_cast<int>(state.range(0)));
  auto phi = testgen::random_admissible(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(completely_labeled_cells(d, phi, CompleteMode::simplex, path(state)));
  state.counters["cells"] = static_cast<double>(d.cells().size());
}

void BM_ValidateDecomposition(benchmark::State& state) {
  auto d = grid(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_decomposition(d, path(state)));
  state.counters["cells"] = static_cast<double>(d.cells().size());
}

void BM_CellSigns(benchmark::State& state) {
  testgen::Rng rng(2);
  auto d = grid(3, static_cast<int>(state.range(0)));
  auto r = Realization::onto_host(d, testgen::random_admissible(rng, d));
  const auto p = pick_regular_value(r);
  for (auto _ : state) benchmark::DoNotOptimize(cell_signs_at(r, p, path(state)));
  state.counters["cells"] = static_cast<double>(d.cells().size());
}

void BM_InducedLabeling(benchmark::State& state) {
  auto d = grid(2, static_cast<int>(state.range(0)));
  const auto f = SelfMap::parse("(x1 + 1/3)/2; (x2 + 1/3)/2; (x3 + 1/3)/2");
  for (auto _ : state) benchmark::DoNotOptimize(induced_labeling(f, d, path(state)));
  state.counters["vertices"] = static_cast<double>(d.pool().size());
}

void BM_MinCover(benchmark::State& state) {
  testgen::Rng rng(3);
  auto p = testgen::circle_polygon(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_spanned_cover(p, p.num_vertices(), path(state)));
}

}  // namespace

BENCHMARK(BM_CompleteCells)->ArgsProduct({{8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateDecomposition)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellSigns)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedLabeling)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinCover)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

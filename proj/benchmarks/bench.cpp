#include <benchmark/benchmark.h>

#include "conifano/io.hpp"

using namespace conifano;

namespace {

const std::vector<GroundTruthEntry>& dataset() {
  static const auto entries = load_ground_truth(CONIFANO_DATASET);
  return entries;
}

const GroundTruthEntry& entry(const std::string& id) {
  for (const auto& e : dataset())
    if (e.id == id) return e;
  throw error("no such entry " + id);
}

void BM_FullRecord(benchmark::State& state, const std::string& id) {
  const auto& e = entry(id);
  Polytope P = Polytope::from_vertices(e.vertices);
  for (auto _ : state) benchmark::DoNotOptimize(full_record(P, e.id));
}

void BM_Phi0(benchmark::State& state, const std::string& id, int maxKappa) {
  const auto& e = entry(id);
  RelationLattice L = relation_lattice(Polytope::from_vertices(e.vertices));
  for (auto _ : state) benchmark::DoNotOptimize(phi0(L, maxKappa));
}

void BM_FitD3(benchmark::State& state, const std::string& id, int maxKappa) {
  const auto& e = entry(id);
  SeriesTable S = phi0(relation_lattice(Polytope::from_vertices(e.vertices)), maxKappa);
  for (auto _ : state) benchmark::DoNotOptimize(fit(S));
}

void BM_Sweep(benchmark::State& state) {
  const auto& entries = dataset();
  for (auto _ : state) {
    int h21sum = 0;
    for (const auto& e : entries)
      h21sum += full_record(Polytope::from_vertices(e.vertices), e.id).h21;
    benchmark::DoNotOptimize(h21sum);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_FullRecord, v1, "V(1)");
BENCHMARK_CAPTURE(BM_FullRecord, v23, "V(23)");
BENCHMARK_CAPTURE(BM_FullRecord, v166, "V(166)");
BENCHMARK_CAPTURE(BM_Phi0, v1_deg20, "V(1)", 20);
BENCHMARK_CAPTURE(BM_Phi0, v23_deg14, "V(23)", 14);
BENCHMARK_CAPTURE(BM_FitD3, v23_deg28, "V(23)", 28);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

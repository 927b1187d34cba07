#include "repkit/instances.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"
#include "repkit/smu_tree.hpp"
#include "repkit/translations.hpp"
#include "repkit/trigger.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace repkit;

namespace {

InstanceSpec spec_of(const benchmark::State &state) {
  return {static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)),
          static_cast<unsigned>(state.range(2))};
}

void BM_Generate(benchmark::State &state) {
  InstanceSpec s = spec_of(state);
  std::uint64_t literals = stats(s).l;
  for (auto _ : state) {
    std::ostringstream out;
    write_instance(out, s);
    benchmark::DoNotOptimize(out.str().size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * literals));
}
BENCHMARK(BM_Generate)
    ->Args({2, 12, 1})->Args({2, 12, 2})->Args({2, 12, 3})
    ->Args({3, 13, 3})->Args({4, 14, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Satisfiable(benchmark::State &state) {
  ClauseSet g = generate(spec_of(state));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_satisfiable(g));
}
BENCHMARK(BM_Satisfiable)
    ->Args({2, 8, 1})->Args({2, 8, 2})->Args({2, 8, 3})
    ->Unit(benchmark::kMillisecond);

void BM_RkRefutes(benchmark::State &state) {
  InstanceSpec s = spec_of(state);
  ClauseSet g = generate(s);
  unsigned k = stats(s).hd_claimed;
  for (auto _ : state)
    benchmark::DoNotOptimize(r_k_refutes(g, k));
}
BENCHMARK(BM_RkRefutes)
    ->Args({2, 4, 1})->Args({2, 6, 1})->Args({2, 6, 2})->Args({2, 6, 3})
    ->Args({3, 5, 1})->Args({3, 5, 3})
    ->Unit(benchmark::kMillisecond);

void BM_HdUnsat(benchmark::State &state) {
  ClauseSet g = generate(spec_of(state));
  for (auto _ : state)
    benchmark::DoNotOptimize(hd_unsat(g));
}
BENCHMARK(BM_HdUnsat)
    ->Args({2, 3, 1})->Args({2, 4, 2})->Args({2, 4, 3})
    ->Unit(benchmark::kMillisecond);

void BM_PrimeImplicatesDopedTree(benchmark::State &state) {
  LabeledBinaryTree t = extremal_tree(static_cast<unsigned>(state.range(0)),
                                      static_cast<unsigned>(state.range(1)));
  ClauseSet f = dope_tree(t).doped;
  for (auto _ : state)
    benchmark::DoNotOptimize(prime_implicates(f).c());
}
BENCHMARK(BM_PrimeImplicatesDopedTree)
    ->Args({1, 3})->Args({2, 3})->Args({2, 4})
    ->Unit(benchmark::kMillisecond);

void BM_TreePrimeImplicates(benchmark::State &state) {
  LabeledBinaryTree t = extremal_tree(static_cast<unsigned>(state.range(0)),
                                      static_cast<unsigned>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tree_prime_implicates(t).c());
}
BENCHMARK(BM_TreePrimeImplicates)
    ->Args({2, 3})->Args({2, 4})->Args({2, 5})->Args({3, 4})
    ->Unit(benchmark::kMillisecond);

void BM_TransversalAndMatching(benchmark::State &state) {
  LabeledBinaryTree t = extremal_tree(static_cast<unsigned>(state.range(0)),
                                      static_cast<unsigned>(state.range(1)));
  TriggerHypergraph hg = trigger_hypergraph(tree_prime_implicates(t),
                                            static_cast<unsigned>(state.range(0)) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transversal_number(hg).value);
    benchmark::DoNotOptimize(matching_number(hg).value);
  }
  state.counters["vertices"] = static_cast<double>(hg.vertices.size());
}
BENCHMARK(BM_TransversalAndMatching)
    ->Args({1, 4})->Args({1, 5})->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Cantm(benchmark::State &state) {
  LabeledBinaryTree t = extremal_tree(2, static_cast<unsigned>(state.range(0)));
  ClauseSet g = negate_doped(dope_tree(t));
  for (auto _ : state)
    benchmark::DoNotOptimize(cantm(g).output.c());
}
BENCHMARK(BM_Cantm)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <sepsym/separating.hpp>

namespace {

using namespace sepsym;

void BM_IsSeparating(benchmark::State& state) {
  unsigned q = static_cast<unsigned>(state.range(0));
  unsigned n = static_cast<unsigned>(state.range(1));
  unsigned workers = static_cast<unsigned>(state.range(2));
  Field field = Field::make_q(q);
  IndexSet A = index_set(q, n);
  for (auto _ : state) {
    auto outcome = is_separating(field, n, A, {.cap = kDefaultEnumerationCap, .workers = workers});
    benchmark::DoNotOptimize(outcome.separating());
  }
  state.SetItemsProcessed(state.iterations() *
                          checked_orbit_count(field, n, kDefaultEnumerationCap));
}
BENCHMARK(BM_IsSeparating)
    ->Args({7, 8, 1})
    ->Args({11, 8, 1})
    ->Args({11, 10, 1})
    ->Args({11, 10, 2})
    ->Args({11, 10, 4})
    ->Unit(benchmark::kMillisecond);

void BM_OrbitEnumeration(benchmark::State& state) {
  unsigned q = static_cast<unsigned>(state.range(0));
  unsigned n = static_cast<unsigned>(state.range(1));
  Field field = Field::make_q(q);
  for (auto _ : state) {
    OrbitStream stream(field, n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          checked_orbit_count(field, n, kDefaultEnumerationCap));
}
BENCHMARK(BM_OrbitEnumeration)->Args({11, 10})->Args({9, 12})->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  unsigned q = static_cast<unsigned>(state.range(0));
  unsigned n = static_cast<unsigned>(state.range(1));
  Field field = Field::make_q(q);
  IndexSet idx = index_set(q, n);

  std::vector<std::map<unsigned, Fe>> inputs;
  OrbitStream stream(field, n);
  while (stream.next() && inputs.size() < 64) {
    Signature sig = signature(stream.orbit(), idx.degrees());
    std::map<unsigned, Fe> values;
    for (std::size_t i = 0; i < idx.degrees().size(); ++i) values[idx.degrees()[i]] = sig[i];
    inputs.push_back(std::move(values));
  }

  std::size_t i = 0;
  for (auto _ : state) {
    auto orbit = reconstruct(field, n, inputs[i++ % inputs.size()]);
    benchmark::DoNotOptimize(orbit.has_value());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Reconstruct)->Args({3, 12})->Args({8, 5})->Args({5, 8});

}  // namespace

BENCHMARK_MAIN();

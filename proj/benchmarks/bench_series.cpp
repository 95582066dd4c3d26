#include <benchmark/benchmark.h>

#include <random>
#include <sepsym/series.hpp>

namespace {

using namespace sepsym;

std::vector<std::vector<std::uint32_t>> random_counts(unsigned q, unsigned n, std::size_t how_many) {
  std::mt19937 rng(12345);
  std::vector<std::vector<std::uint32_t>> all;
  for (std::size_t i = 0; i < how_many; ++i) {
    std::vector<std::uint32_t> counts(q - 1, 0);
    unsigned left = n;
    for (auto& c : counts) {
      c = std::uniform_int_distribution<std::uint32_t>(0, left)(rng);
      left -= c;
    }
    all.push_back(std::move(counts));
  }
  return all;
}

void BM_GenPoly(benchmark::State& state) {
  unsigned q = static_cast<unsigned>(state.range(0));
  unsigned n = static_cast<unsigned>(state.range(1));
  Field field = Field::make_q(q);
  auto inputs = random_counts(q, n, 256);
  std::vector<Fe> out, scratch;
  std::size_t i = 0;
  for (auto _ : state) {
    detail::gen_poly_into(field, inputs[i++ & 255], n, out, scratch);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GenPoly)->Args({3, 12})->Args({11, 10})->Args({8, 6})->Args({9, 6});

void BM_SeriesMul(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  Field field = Field::make_q(11);
  auto counts = random_counts(11, n, 2);
  TruncatedSeries f = gen_poly(OrbitMultiplicity(field, n, counts[0]));
  TruncatedSeries g = gen_poly(OrbitMultiplicity(field, n, counts[1]));
  for (auto _ : state) {
    auto h = series_mul(f, g);
    benchmark::DoNotOptimize(h.coeffs().data());
  }
}
BENCHMARK(BM_SeriesMul)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

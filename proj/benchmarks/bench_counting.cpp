#include <benchmark/benchmark.h>

#include "perfectrep/representations.hpp"

namespace {

void BM_CountExhaustive(benchmark::State& state) {
    const auto pn = perfectrep::make_perfect(7);
    const perfectrep::Natural m = pn.mersenne() * 17;
    for (auto _ : state) benchmark::DoNotOptimize(perfectrep::count_representations(m, pn, false));
}
BENCHMARK(BM_CountExhaustive);

void BM_CountMeetInTheMiddle(benchmark::State& state) {
    const auto pn = perfectrep::make_perfect(static_cast<unsigned>(state.range(0)));
    const perfectrep::Natural m = pn.mersenne() * 17;
    const perfectrep::CountOptions options{.ceiling = 19, .workers = static_cast<unsigned>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(perfectrep::count_representations(m, pn, true, options));
}
BENCHMARK(BM_CountMeetInTheMiddle)->Args({13, 1})->Args({13, 4})->Args({17, 1})->Args({17, 4});

void BM_SubsetSumHistogram(benchmark::State& state) {
    const auto pn = perfectrep::make_perfect(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(perfectrep::subset_sum_histogram(pn));
}
BENCHMARK(BM_SubsetSumHistogram)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "perfectrep/decompose.hpp"
#include "perfectrep/mersenne.hpp"

namespace {

void BM_LucasLehmer(benchmark::State& state) {
    const auto p = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(perfectrep::lucas_lehmer(p));
}
BENCHMARK(BM_LucasLehmer)->Arg(31)->Arg(127)->Arg(521)->Arg(2203);

void BM_Decompose(benchmark::State& state) {
    const auto pn = perfectrep::make_perfect(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(7);
    std::vector<perfectrep::Natural> targets;
    for (int i = 0; i < 1024; ++i) {
        perfectrep::Natural draw = (perfectrep::Natural(rng()) << 64) | perfectrep::Natural(rng());
        targets.push_back(draw % pn.n() + 1);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(perfectrep::decompose(targets[i++ % targets.size()], pn));
    }
}
BENCHMARK(BM_Decompose)->Arg(13)->Arg(31)->Arg(61);

void BM_DecomposeRoundTrip(benchmark::State& state) {
    const auto pn = perfectrep::make_perfect(static_cast<unsigned>(state.range(0)));
    perfectrep::Natural m = pn.n() / 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(perfectrep::subset_value(perfectrep::decompose(m, pn).subset, pn));
    }
}
BENCHMARK(BM_DecomposeRoundTrip)->Arg(13)->Arg(31)->Arg(61);

}  // namespace

#include <benchmark/benchmark.h>

#include <cstdint>

#include "perfectrep/practical.hpp"

namespace {

// Highly composite inputs stress the divisor count; primes stress nothing
// but the divisor scan.
void BM_CheckPanrepresentable(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(perfectrep::check_panrepresentable(n));
}
BENCHMARK(BM_CheckPanrepresentable)
    ->Arg(20)
    ->Arg(8128)
    ->Arg(720720)
    ->Arg(8648640)
    ->Arg(9999991)
    ->Unit(benchmark::kMicrosecond);

void BM_ReachabilityNoWitness(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto divisors = perfectrep::proper_divisors(n);
    for (auto _ : state) {
        perfectrep::ReachabilityTable table(divisors, n, false);
        benchmark::DoNotOptimize(table.first_unreachable());
    }
}
BENCHMARK(BM_ReachabilityNoWitness)->Arg(720720)->Arg(8648640)->Unit(benchmark::kMicrosecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "glvar/partition.hpp"
#include "glvar/schur.hpp"
#include "glvar/shift.hpp"

using namespace glvar;

static void bm_lr_coefficient(benchmark::State& state) {
    // sweep a family of genuinely multi-row cases; the memo is shared, so
    // report per-sweep cost
    std::vector<Partition> lams;
    for (const Partition& lam : partitions_of(static_cast<int>(state.range(0))))
        lams.push_back(lam);
    Partition mu({3, 2, 1});
    for (auto _ : state) {
        long long total = 0;
        for (const Partition& lam : lams)
            for (const Partition& nu : partitions_of(lam.size() - mu.size()))
                if (lam.size() >= mu.size())
                    total += lr_coefficient(lam, mu, nu);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_lr_coefficient)->Arg(8)->Arg(10);

static void bm_sym_decompose(benchmark::State& state) {
    PartitionTuple t = parse_tuple("[[2],[2],[2]]");
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_decompose(t, degree));
}
BENCHMARK(bm_sym_decompose)->Arg(4)->Arg(6)->Arg(8);

static void bm_shift_tuple(benchmark::State& state) {
    PartitionTuple t = parse_tuple("[[4],[2,2]]");
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(shift_tuple(n, t));
}
BENCHMARK(bm_shift_tuple)->Arg(1)->Arg(3);

static void bm_schur_dim(benchmark::State& state) {
    Partition lam({4, 3, 2, 1});
    for (auto _ : state)
        for (int n = 1; n <= 12; ++n)
            benchmark::DoNotOptimize(schur_dim(lam, n));
}
BENCHMARK(bm_schur_dim);

#include <benchmark/benchmark.h>

#include "hampart/mollard.hpp"
#include "hampart/symmetry.hpp"
#include "hampart/theorems.hpp"

#include <random>

using namespace hampart;

namespace {

BitMatrix random_matrix(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitMatrix m(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

// partitions reused across iterations; construction cost measured separately
const CodePartition& partition_at(std::uint32_t n) {
    static CodePartition p63 = construction_b(phelps7(), trivial_partition(hamming_code(3)));
    static CodePartition p127 = construction_b(phelps7(), trivial_partition(hamming_code(4)));
    static CodePartition p255 = construction_b(phelps7(), trivial_partition(hamming_code(5)));
    switch (n) {
        case 63: return p63;
        case 127: return p127;
        default: return p255;
    }
}

} // namespace

static void BM_rank(benchmark::State& state) {
    const auto rows = static_cast<std::uint32_t>(state.range(0));
    BitMatrix m = random_matrix(rows, rows * 2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(64)->Arg(256)->Arg(512);

static void BM_kernel(benchmark::State& state) {
    const auto cols = static_cast<std::uint32_t>(state.range(0));
    BitMatrix m = random_matrix(cols / 8, cols, 23);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(127)->Arg(511)->Arg(1023);

static void BM_pairwise_verify(benchmark::State& state) {
    const CodePartition& p = partition_at(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        PartitionCheck chk = verify_partition(p);
        benchmark::DoNotOptimize(chk.valid);
    }
}
BENCHMARK(BM_pairwise_verify)->Arg(63)->Arg(127)->Arg(255)->Unit(benchmark::kMillisecond);

static void BM_uniformity_scan(benchmark::State& state) {
    const CodePartition& p = partition_at(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        UniformityReport rep = uniformity(p);
        benchmark::DoNotOptimize(rep.is_uniform);
    }
}
BENCHMARK(BM_uniformity_scan)->Arg(63)->Arg(127)->Arg(255)->Unit(benchmark::kMillisecond);

static void BM_mollard_code(benchmark::State& state) {
    LinearCode c = hamming_code(3), d = hamming_code(5);
    for (auto _ : state) benchmark::DoNotOptimize(mollard_code(c, d).length());
}
BENCHMARK(BM_mollard_code);

static void BM_construction_b(benchmark::State& state) {
    CodePartition a = phelps7();
    CodePartition b = trivial_partition(hamming_code(4));
    for (auto _ : state) {
        CodePartition p = construction_b(a, b);
        benchmark::DoNotOptimize(p.n);
    }
}
BENCHMARK(BM_construction_b)->Unit(benchmark::kMillisecond);

static void BM_partition_action(benchmark::State& state) {
    const CodePartition& p = partition_at(127);
    std::vector<Isometry> gens = recipe_generators("b(phelps7, trivial:15)", ImportStore{});
    std::size_t at = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_action(p, gens[at]));
        at = (at + 1) % gens.size();
    }
}
BENCHMARK(BM_partition_action)->Unit(benchmark::kMillisecond);

static void BM_search_dim2(benchmark::State& state) {
    for (auto _ : state) {
        SearchOutcome out = phelps_search(2, {.limit = 1});
        benchmark::DoNotOptimize(out.partitions.size());
    }
}
BENCHMARK(BM_search_dim2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "bgmod/bg.hpp"
#include "bgmod/margolis.hpp"

#include <random>

using namespace bgmod;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::bernoulli_distribution bit(0.5);
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(gen)) m.set(r, c, true);
    return m;
}

void BM_rref(benchmark::State& state) {
    F2Matrix m = random_matrix(400, 400, 7);
    for (auto _ : state) {
        F2Rref r = f2_rref(m);
        benchmark::DoNotOptimize(r.pivots.size());
    }
}
BENCHMARK(BM_rref);

void BM_weight_module(benchmark::State& state) {
    for (auto _ : state) {
        WeightModule w = build_weight_module(24);
        benchmark::DoNotOptimize(w.mod->total_dim());
    }
}
BENCHMARK(BM_weight_module);

void BM_q_build(benchmark::State& state) {
    weight_module(10);
    weight_module(22);
    for (auto _ : state) {
        QModule q = build_q_module(10, 22);
        benchmark::DoNotOptimize(q.module->total_dim());
    }
}
BENCHMARK(BM_q_build);

void BM_oracle(benchmark::State& state) {
    QModule q = build_q_module(10, 22);
    for (auto _ : state) {
        MargolisReport rep = margolis(*q.module, 1);
        benchmark::DoNotOptimize(rep.total_homology);
    }
}
BENCHMARK(BM_oracle);

}  // namespace

BENCHMARK_MAIN();

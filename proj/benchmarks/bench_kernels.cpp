#include <benchmark/benchmark.h>

#include <random>

#include "qsd/cliques.hpp"
#include "qsd/codes.hpp"
#include "qsd/design.hpp"
#include "qsd/difference_sets.hpp"
#include "qsd/gf.hpp"

namespace {

qsd::GFMatrix random_matrix(std::mt19937& rng, int p, std::size_t rows, std::size_t cols) {
    std::vector<int> e(rows * cols);
    for (auto& x : e) x = int(rng() % p);
    return qsd::GFMatrix(p, rows, cols, std::move(e));
}

void BM_RankMod3_56x56(benchmark::State& state) {
    std::mt19937 rng(1);
    auto m = random_matrix(rng, 3, 56, 56);
    for (auto _ : state) benchmark::DoNotOptimize(qsd::rank_mod_p(m));
}
BENCHMARK(BM_RankMod3_56x56);

void BM_NullspaceMod3(benchmark::State& state) {
    std::mt19937 rng(2);
    auto m = random_matrix(rng, 3, 40, 56);
    for (auto _ : state) benchmark::DoNotOptimize(qsd::nullspace_basis(m));
}
BENCHMARK(BM_NullspaceMod3);

void BM_Enumerate01Dual(benchmark::State& state) {
    // meet-in-the-middle instance; weight is the range argument
    std::mt19937 rng(3);
    auto m = random_matrix(rng, 3, 10, 30);
    qsd::LinearCodeView code(m);
    std::size_t w = std::size_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(qsd::enumerate_01_dual_codewords(code, w));
}
BENCHMARK(BM_Enumerate01Dual)->Arg(6)->Arg(8)->Arg(10);

void BM_VerifyMinDistance(benchmark::State& state) {
    std::mt19937 rng(4);
    auto m = random_matrix(rng, 3, 12, 32);
    qsd::LinearCodeView code(m);
    auto probe = qsd::verify_min_distance(code, 1);
    std::size_t true_d = probe.kind == qsd::MinDistanceVerdict::Kind::confirmed
                             ? 1
                             : probe.found_weight;
    for (auto _ : state)
        benchmark::DoNotOptimize(qsd::verify_min_distance(code, true_d));
}
BENCHMARK(BM_VerifyMinDistance);

void BM_MaxClique(benchmark::State& state) {
    std::mt19937 rng(5);
    std::size_t n = std::size_t(state.range(0));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = i + 1; j < n; j++)
            if (rng() % 100 < 40) edges.push_back({i, j});
    auto g = qsd::graph_from_edges(n, edges);
    for (auto _ : state) benchmark::DoNotOptimize(qsd::max_clique(g));
}
BENCHMARK(BM_MaxClique)->Arg(60)->Arg(120)->Arg(240);

void BM_VerifyTDesign(benchmark::State& state) {
    auto d = qsd::develop_difference_set({qsd::GroupSpec::cyclic(11), {1, 3, 4, 5, 9}});
    for (auto _ : state) benchmark::DoNotOptimize(qsd::verify_t_design(d, 2));
}
BENCHMARK(BM_VerifyTDesign);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "shachom/cluster.hpp"
#include "shachom/discretize.hpp"
#include "shachom/distance.hpp"
#include "shachom/evaluate.hpp"
#include "shachom/id3.hpp"

using namespace shachom;

namespace {

Dataset random_dataset(std::size_t n, std::size_t d, std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    std::vector<double> values(n * d);
    for (auto& v : values)
        v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 100.0;
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c)
        names.push_back("a" + std::to_string(c));
    return Dataset(n, d, std::move(values), std::move(names));
}

} // namespace

static void BM_BuildDistanceMatrix(benchmark::State& state) {
    const auto ds = random_dataset(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        auto mat = build_distance_matrix(ds);
        benchmark::DoNotOptimize(mat);
    }
}
BENCHMARK(BM_BuildDistanceMatrix)->Arg(64)->Arg(178)->Arg(512);

static void BM_Cluster(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ds = random_dataset(n, 13);
    const WeightVector w = broadcast_alpha(0.2, 13);
    for (auto _ : state) {
        auto result = cluster(ds, 3, w, 1e-9);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Cluster)->Arg(64)->Arg(178)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_PartitionAt(benchmark::State& state) {
    const auto ds = random_dataset(300, 8);
    const auto full = cluster(ds, 2, broadcast_alpha(0.2, 8), 1e-9);
    for (auto _ : state) {
        auto p = partition_at(full.dendrogram, 30);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PartitionAt);

static void BM_Id3TrainEvaluate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto ds = random_dataset(n, 13);
    Partition p;
    p.assignment.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        p.assignment[i] = static_cast<std::uint32_t>(i % 5);
    p.k = 5;
    const Dataset annotated = annotate_with_clusters(ds, p);
    const NominalDataset nominal = discretize(annotated, 10);
    for (auto _ : state) {
        auto tree = id3_train(nominal);
        auto report = evaluate(*tree, nominal);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Id3TrainEvaluate)->Arg(178)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

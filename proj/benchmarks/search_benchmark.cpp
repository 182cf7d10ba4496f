// Wall-clock micro benchmarks. The distance count of each search is reported
// as a counter next to the timing.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "kfn/kfn.hpp"

namespace {

struct Fixture {
    std::shared_ptr<const kfn::Dataset> data;
    kfn::LcIndex index;
    std::vector<kfn::Point> queries;
};

const Fixture& uniform_fixture(std::size_t dim) {
    static std::map<std::size_t, std::unique_ptr<Fixture>> cache;
    auto& slot = cache[dim];
    if (!slot) {
        auto data = std::make_shared<const kfn::Dataset>(kfn::gen_uniform(20000, dim, 1));
        auto index = kfn::build_lc_index(data, {});
        slot = std::make_unique<Fixture>(Fixture{data, std::move(index), kfn::gen_uniform(101, dim, 2)});
    }
    return *slot;
}

const kfn::WowaMeasure& gini() {
    static const kfn::WowaMeasure m(kfn::WeightVector::normalized({1, 3}));
    return m;
}

void BM_Wowa(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const kfn::WowaMeasure measure(kfn::WeightVector::uniform(m));
    std::vector<double> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = static_cast<double>((i * 7) % m);
    for (auto _ : state) benchmark::DoNotOptimize(kfn::wowa(x, measure));
}
BENCHMARK(BM_Wowa)->Arg(2)->Arg(4)->Arg(8);

void BM_Build(benchmark::State& state) {
    auto data = std::make_shared<const kfn::Dataset>(
        kfn::gen_uniform(static_cast<std::size_t>(state.range(0)), 4, 1));
    for (auto _ : state) benchmark::DoNotOptimize(kfn::build_lc_index(data, {}));
}
BENCHMARK(BM_Build)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_KfnSearch(benchmark::State& state) {
    const auto& fx = uniform_fixture(static_cast<std::size_t>(state.range(0)));
    const auto k = static_cast<std::size_t>(state.range(1));
    std::size_t j = 0;
    std::uint64_t distances = 0, searches = 0;
    for (auto _ : state) {
        kfn::FnQuery q({fx.queries[j % 100], fx.queries[j % 100 + 1]}, gini());
        auto out = kfn::kfn_search(fx.index, std::move(q), k);
        distances += out.distance_count;
        ++searches;
        ++j;
        benchmark::DoNotOptimize(out);
    }
    state.counters["distances"] =
        static_cast<double>(distances) / static_cast<double>(std::max<std::uint64_t>(searches, 1));
}
BENCHMARK(BM_KfnSearch)->Args({4, 1})->Args({4, 5})->Args({10, 1})->Args({10, 5});

void BM_LinearScan(benchmark::State& state) {
    const auto& fx = uniform_fixture(static_cast<std::size_t>(state.range(0)));
    std::size_t j = 0;
    for (auto _ : state) {
        kfn::FnQuery q({fx.queries[j % 100], fx.queries[j % 100 + 1]}, gini());
        benchmark::DoNotOptimize(kfn::linear_scan_kfn(*fx.data, q, 5));
        ++j;
    }
}
BENCHMARK(BM_LinearScan)->Arg(4)->Arg(10);

void BM_Levenshtein(benchmark::State& state) {
    const std::string a(static_cast<std::size_t>(state.range(0)), 'a');
    std::string b = a;
    for (std::size_t i = 0; i < b.size(); i += 3) b[i] = 'c';
    for (auto _ : state) benchmark::DoNotOptimize(kfn::levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein)->Arg(16)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();

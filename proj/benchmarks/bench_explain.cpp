#include <benchmark/benchmark.h>

#include <vector>

#include "pxp/enumerate.hpp"
#include "pxp/extract.hpp"
#include "pxp/generator.hpp"
#include "pxp/oracle.hpp"
#include "pxp/probability.hpp"

using namespace pxp;

namespace {

// A fixed pool of problems so each iteration does comparable work.
std::vector<ExplanationProblem> corpus(int depth, int count = 64) {
    GeneratorOptions opt;
    opt.min_features = opt.max_features = 8;
    opt.max_depth = depth;
    opt.max_domain = 4;
    std::vector<ExplanationProblem> out;
    ProblemGenerator gen(12345 + static_cast<std::uint64_t>(depth), opt);
    while (static_cast<int>(out.size()) < count) out.push_back(gen.next());
    return out;
}

void BM_WaxpQuery(benchmark::State& state) {
    auto problems = corpus(static_cast<int>(state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = problems[k++ % problems.size()];
        benchmark::DoNotOptimize(waxp_holds(p, p.specified()));
    }
}
BENCHMARK(BM_WaxpQuery)->DenseRange(2, 8, 2);

void BM_FindOneAxp(benchmark::State& state) {
    auto problems = corpus(static_cast<int>(state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = problems[k++ % problems.size()];
        benchmark::DoNotOptimize(find_one_xp(p, XpKind::AXp));
    }
}
BENCHMARK(BM_FindOneAxp)->DenseRange(2, 8, 2);

void BM_EnumerateAll(benchmark::State& state) {
    auto problems = corpus(static_cast<int>(state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = problems[k++ % problems.size()];
        benchmark::DoNotOptimize(enumerate_xps(p).explanations.size());
    }
}
BENCHMARK(BM_EnumerateAll)->DenseRange(2, 8, 2);

void BM_PaxpProbability(benchmark::State& state) {
    auto problems = corpus(static_cast<int>(state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = problems[k++ % problems.size()];
        benchmark::DoNotOptimize(paxp_probability(p, {}));
    }
}
BENCHMARK(BM_PaxpProbability)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();

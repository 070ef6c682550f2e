#include "lmoam/attention.hpp"
#include "lmoam/evaluation.hpp"
#include "lmoam/indicators.hpp"
#include "lmoam/lsmop.hpp"
#include "lmoam/nsga2.hpp"
#include "lmoam/optimizer.hpp"
#include "lmoam/reference_front.hpp"
#include "lmoam/sorting.hpp"

#include <benchmark/benchmark.h>

using namespace lmoam;

namespace {

std::vector<ObjectiveVector> random_objectives(std::size_t n, std::size_t m, std::uint64_t seed)
{
    RngStream rng(seed);
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& v : out)
        for (auto& x : v) x = rng.uniform();
    return out;
}

// Points on the unit simplex, so every one is nondominated.
std::vector<ObjectiveVector> simplex_front(std::size_t n, std::uint64_t seed)
{
    RngStream rng(seed);
    std::vector<ObjectiveVector> out(n, ObjectiveVector(3));
    for (auto& v : out) {
        double s = 0;
        for (auto& x : v) s += (x = rng.exponential());
        for (auto& x : v) x /= s;
    }
    return out;
}

void BM_NondominatedSort(benchmark::State& state)
{
    const auto objs = random_objectives(std::size_t(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ea::nondominated_sort(objs));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NondominatedSort)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_CrowdingDistance(benchmark::State& state)
{
    const auto front = simplex_front(std::size_t(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(ea::crowding_distance(front));
}
BENCHMARK(BM_CrowdingDistance)->Arg(300)->Arg(600);

void BM_LsmopEvaluate(benchmark::State& state)
{
    const int id = int(state.range(0));
    const auto problem = lsmop::make_problem(id, 3, std::size_t(state.range(1)));
    RngStream rng(3);
    const auto x = random_point(*problem->bounds(), rng);
    EvaluationCounter counter(std::numeric_limits<std::size_t>::max());
    for (auto _ : state) benchmark::DoNotOptimize(counter.evaluate(*problem, x));
}
BENCHMARK(BM_LsmopEvaluate)->ArgsProduct({{1, 3, 5, 9}, {1000, 5000}});

void BM_Igd(benchmark::State& state)
{
    const auto front = random_objectives(300, 3, 4);
    RngStream rng(5);
    const auto ref = lsmop::sample_reference_front(1, 3, std::size_t(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(indicators::igd(front, ref));
}
BENCHMARK(BM_Igd)->Arg(1000)->Arg(10000);

void BM_Hypervolume3d(benchmark::State& state)
{
    const auto front = simplex_front(std::size_t(state.range(0)), 6);
    const std::vector<double> ref(3, 1.1);
    for (auto _ : state) benchmark::DoNotOptimize(indicators::hv(front, ref));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hypervolume3d)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_AttentionStep(benchmark::State& state)
{
    const std::size_t d = std::size_t(state.range(0));
    const auto problem = lsmop::make_problem(1, 3, d);
    RngStream rng(7);
    const auto pop = ea::random_population(*problem, 300, rng);
    for (auto _ : state) {
        const auto var = attention::variance_vector(pop);
        const auto key = attention::build_key(var, 5);
        const auto queries = attention::init_queries(pop, key, pop[0].decision, 20, rng);
        for (const auto& q : queries)
            benchmark::DoNotOptimize(attention::apply_attention(q.weights, key, pop[0].decision, *problem->bounds()));
    }
}
BENCHMARK(BM_AttentionStep)->Arg(1000)->Arg(5000);

void BM_LmoamRun(benchmark::State& state)
{
    const auto problem = lsmop::make_problem(1, 3, std::size_t(state.range(0)));
    LmoamConfig cfg;
    cfg.population_size = 100;
    cfg.total_budget = 10000;
    for (auto _ : state) benchmark::DoNotOptimize(run_lmoam(*problem, cfg, 11));
}
BENCHMARK(BM_LmoamRun)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Nsga2Run(benchmark::State& state)
{
    const auto problem = lsmop::make_problem(1, 3, std::size_t(state.range(0)));
    const ea::Nsga2Config cfg{100, 10000, {}, 1000};
    for (auto _ : state) benchmark::DoNotOptimize(ea::nsga2_run(*problem, cfg, 11));
}
BENCHMARK(BM_Nsga2Run)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

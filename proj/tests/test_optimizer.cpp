#include "lmoam/evaluation.hpp"
#include "lmoam/lsmop.hpp"
#include "lmoam/nsga2.hpp"
#include "lmoam/optimizer.hpp"
#include "lmoam/sorting.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lmoam;

namespace {

struct InnerFixture {
    std::unique_ptr<lsmop::LsmopProblem> problem;
    Population pop;
    attention::KeyMatrix key{{}, 1};
    DecisionVector value;
    std::vector<attention::Query> queries;

    InnerFixture(int id, std::size_t d, RngStream& rng)
        : problem(lsmop::make_problem(id, 3, d)), pop(problem->bounds())
    {
        EvaluationCounter init(40);
        pop = ea::random_population(*problem, 40, rng);
        init.evaluate(*problem, pop);
        ea::assign_rank_and_crowding(pop);
        value = pop[attention::select_value(pop, rng)].decision;
        key = attention::build_key(attention::variance_vector(pop), 5);
        queries = attention::init_queries(pop, key, value, 20, rng);
    }
};

LmoamConfig small_config(std::size_t n, std::size_t budget)
{
    LmoamConfig cfg;
    cfg.population_size = n;
    cfg.total_budget = budget;
    cfg.checkpoint_interval = std::max<std::size_t>(1, budget / 10);
    return cfg;
}

} // namespace

TEST(LmoamConfig, DefaultsAndValidation)
{
    LmoamConfig cfg;
    EXPECT_EQ(cfg.population_size, 300u);
    EXPECT_EQ(cfg.total_budget, 100000u);
    EXPECT_EQ(cfg.query_dimension, 5u);
    EXPECT_EQ(cfg.query_count, 20u);
    EXPECT_EQ(cfg.tranche(), 5000u);
    cfg.total_budget = 299;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    auto p = lsmop::make_problem(1, 3, 100);
    EXPECT_THROW(run_lmoam(*p, cfg, 1), std::invalid_argument);
    cfg = {};
    cfg.inner_budget_fraction = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(InnerSearch, DefaultTrancheGivesTwoHundredFiftyGenerations)
{
    RngStream rng(1);
    InnerFixture f(1, 100, rng);
    EvaluationCounter counter(5000);
    const auto gens = inner_query_search(f.queries, f.key, f.value, *f.problem, counter, 5000, {}, rng);
    EXPECT_EQ(gens.size(), 250u);
    std::size_t solutions = 0;
    for (const auto& g : gens) solutions += g.solutions.size();
    EXPECT_EQ(solutions, 5000u);
    EXPECT_EQ(counter.used(), 5000u);
}

TEST(InnerSearch, ShortTrancheAndRemainingBudget)
{
    RngStream rng(2);
    InnerFixture f(2, 100, rng);
    EvaluationCounter counter(1000);
    auto gens = inner_query_search(f.queries, f.key, f.value, *f.problem, counter, 47, {}, rng);
    EXPECT_EQ(counter.used(), 47u);
    EXPECT_EQ(gens.back().solutions.size(), 7u);
    EvaluationCounter tight(13);
    gens = inner_query_search(f.queries, f.key, f.value, *f.problem, tight, 5000, {}, rng);
    EXPECT_EQ(tight.used(), 13u);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0].solutions.size(), 13u);
}

TEST(InnerSearch, AllOnesQueryReproducesValueFitness)
{
    RngStream rng(3);
    InnerFixture f(5, 120, rng);
    std::vector<attention::Query> qs(4, attention::Query{std::vector<double>(5, 1.0), std::nullopt});
    EvaluationCounter counter(4), direct(1);
    const auto gens = inner_query_search(qs, f.key, f.value, *f.problem, counter, 4, {}, rng);
    const auto fv = direct.evaluate(*f.problem, f.value);
    for (const auto& q : gens[0].queries) EXPECT_EQ(*q.fitness, fv);
}

TEST(InnerSearch, QueryFitnessAndMembershipInvariants)
{
    RngStream rng(4);
    InnerFixture f(3, 150, rng);
    EvaluationCounter counter(2000);
    const auto gens = inner_query_search(f.queries, f.key, f.value, *f.problem, counter, 2000, {}, rng);
    for (const auto& g : gens) {
        ASSERT_EQ(g.queries.size(), g.solutions.size());
        for (std::size_t i = 0; i < g.queries.size(); ++i) {
            ASSERT_TRUE(g.queries[i].fitness.has_value());
            ASSERT_EQ(*g.queries[i].fitness, *g.solutions[i].objective);
            ASSERT_EQ(g.solutions[i].decision,
                      attention::apply_attention(g.queries[i].weights, f.key, f.value, *f.problem->bounds()));
        }
    }
}

TEST(InnerSearch, FirstFrontNeverRegresses)
{
    RngStream rng(5);
    for (int id : {1, 4, 8}) {
        InnerFixture f(id, 100, rng);
        EvaluationCounter counter(3000);
        const auto gens = inner_query_search(f.queries, f.key, f.value, *f.problem, counter, 3000, {}, rng);
        for (std::size_t t = 1; t < gens.size(); ++t) {
            ASSERT_EQ(gens[t].survivors.size(), 20u);
            std::vector<oracle::Point> prev, next;
            for (const auto& q : gens[t - 1].survivors) prev.push_back(*q.fitness);
            for (const auto& q : gens[t].survivors) next.push_back(*q.fitness);
            const auto front0 = oracle::fronts(next)[0];
            for (auto i : front0)
                for (const auto& p : prev) ASSERT_FALSE(oracle::dominates(p, next[i])) << "generation " << t;
        }
    }
}

TEST(Lmoam, BudgetLedgerIsExactAcrossConfigurations)
{
    auto p = lsmop::make_problem(1, 3, 60);
    RngStream pick(6);
    for (int t = 0; t < 12; ++t) {
        auto cfg = small_config(2 * (5 + pick.index(20)), 0);
        cfg.total_budget = cfg.population_size + pick.index(3000);
        cfg.inner_budget_fraction = 0.02 + 0.2 * pick.uniform();
        cfg.query_count = 2 + pick.index(20);
        cfg.query_dimension = 1 + pick.index(6);
        cfg.checkpoint_interval = 1 + pick.index(500);
        const auto res = run_lmoam(*p, cfg, pick.next_u64());
        EXPECT_EQ(res.ledger.total(), cfg.total_budget);
        EXPECT_EQ(res.record.total_evaluations, cfg.total_budget);
        EXPECT_EQ(res.ledger.initialization, cfg.population_size);
        EXPECT_EQ(res.population.size(), cfg.population_size);
        EXPECT_EQ(res.record.checkpoints.size(),
                  (cfg.total_budget + cfg.checkpoint_interval - 1) / cfg.checkpoint_interval);
    }
}

TEST(Lmoam, BudgetOfOnePopulation)
{
    auto p = lsmop::make_problem(2, 3, 60);
    const auto res = run_lmoam(*p, small_config(20, 20), 3);
    EXPECT_EQ(res.ledger.inner, 0u);
    EXPECT_EQ(res.ledger.outer, 0u);
    EXPECT_EQ(res.population.size(), 20u);
}

TEST(Lmoam, SameSeedBitIdentical)
{
    auto p = lsmop::make_problem(7, 3, 100);
    RngStream rng(1);
    const auto ref = lsmop::sample_reference_front(7, 3, 400, rng);
    const auto cfg = small_config(30, 3000);
    const auto a = run_lmoam(*p, cfg, 77, &ref);
    const auto b = run_lmoam(*p, cfg, 77, &ref);
    EXPECT_EQ(a.record.canonical(), b.record.canonical());
    EXPECT_EQ(a.population.objectives(), b.population.objectives());
    std::vector<DecisionVector> da, db;
    for (const auto& i : a.population) da.push_back(i.decision);
    for (const auto& i : b.population) db.push_back(i.decision);
    EXPECT_EQ(da, db);
}

TEST(Lmoam, ObserverSeesIterationState)
{
    auto p = lsmop::make_problem(1, 3, 80);
    auto cfg = small_config(20, 2000);
    cfg.inner_budget_fraction = 0.1;  // tranche of 200
    std::size_t iterations = 0;
    std::size_t inner = 0;
    const auto res = run_lmoam(*p, cfg, 4, nullptr, [&](const OuterIteration& it) {
        EXPECT_EQ(it.index, iterations++);
        EXPECT_EQ(it.initial_queries.size(), 20u);
        EXPECT_EQ(it.key.variables(), 80u);
        EXPECT_EQ(it.key.buckets(), 5u);
        for (const auto& g : it.generations) inner += g.solutions.size();
    });
    // 1980 evaluations after initialisation, 400 per pass.
    EXPECT_EQ(iterations, 5u);
    EXPECT_EQ(inner, res.ledger.inner);
    EXPECT_EQ(res.ledger.inner, 1000u);
    EXPECT_EQ(res.ledger.outer, 980u);
}

TEST(Lmoam, RecordHasNaNIgdWithoutReference)
{
    auto p = lsmop::make_problem(1, 3, 60);
    const auto res = run_lmoam(*p, small_config(20, 500), 5);
    ASSERT_FALSE(res.record.checkpoints.empty());
    EXPECT_TRUE(std::isnan(res.record.checkpoints.front().igd));
    for (std::size_t i = 1; i < res.record.checkpoints.size(); ++i)
        EXPECT_GT(res.record.checkpoints[i].evaluations, res.record.checkpoints[i - 1].evaluations);
    EXPECT_EQ(res.record.checkpoints.back().evaluations, 500u);
}

#include "lmoam/evaluation.hpp"
#include "lmoam/lsmop.hpp"
#include "lmoam/reference_front.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace lmoam;
using lmoam::lsmop::make_problem;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent table: does objective i (0-based) of LSMOP`id` use Rosenbrock,
// whose optimum sits at 1 rather than 0?
bool rosenbrock_objective(int id, std::size_t i)
{
    const bool odd = i % 2 == 0;
    return (id == 3 && !odd) || (id == 6 && odd) || (id == 7 && !odd);
}

double linkage(int id, std::size_t j, std::size_t d)
{
    const double r = double(j + 1) / double(d);
    return id <= 4 ? 1 + r : 1 + std::cos(0.5 * kPi * r);
}

// Pareto-optimal decision vector: position variables `pos`, every linked
// distance variable placed at its landscape optimum.
DecisionVector optimal_decision(const lsmop::LsmopProblem& p, const std::vector<double>& pos)
{
    const auto d = p.num_variables();
    DecisionVector x(d, 0.0);
    std::copy(pos.begin(), pos.end(), x.begin());
    for (const auto& g : p.groups()) {
        const double target = rosenbrock_objective(p.id(), g.objective) ? 1.0 : 0.0;
        for (std::size_t j = g.begin; j < g.end(); ++j) x[j] = (target + 10 * x[0]) / linkage(p.id(), j, d);
    }
    // Variables past the last group do not enter any g; leave them in bounds.
    return x;
}

// Signed residual of f from the front surface of LSMOP`id`.
double surface_residual(int id, const ObjectiveVector& f)
{
    const std::size_t m = f.size();
    if (id <= 4) {
        double s = 0;
        for (double v : f) s += v;
        return s - 1;
    }
    if (id <= 8) {
        double s = 0;
        for (double v : f) s += v * v;
        return std::sqrt(s) - 1;
    }
    double h = 2.0 * double(m);
    for (std::size_t i = 0; i + 1 < m; ++i) h -= f[i] * (1 + std::sin(3 * kPi * f[i]));
    return f[m - 1] - h;
}

ObjectiveVector eval(const Problem& p, const DecisionVector& x)
{
    EvaluationCounter c(1);
    return c.evaluate(p, x);
}

} // namespace

TEST(Lsmop, NamesAndSizes)
{
    auto p1 = make_problem(1, 3, 1000);
    EXPECT_EQ(p1->name(), "LSMOP1");
    EXPECT_EQ(p1->num_objectives(), 3u);
    EXPECT_EQ(p1->num_variables(), 1000u);
    auto p9 = make_problem(9, 3, 5000);
    EXPECT_EQ(p9->name(), "LSMOP9");
    EXPECT_EQ(p9->num_variables(), 5000u);
}

TEST(Lsmop, RejectsUnsupportedShapes)
{
    EXPECT_THROW(make_problem(1, 3, 2), std::invalid_argument);
    EXPECT_THROW(make_problem(1, 3, 3), std::invalid_argument);
    EXPECT_THROW(make_problem(0, 3, 100), std::invalid_argument);
    EXPECT_THROW(make_problem(10, 3, 100), std::invalid_argument);
    EXPECT_THROW(make_problem(1, 1, 100), std::invalid_argument);
    EXPECT_THROW(make_problem(1, 3, 12), std::invalid_argument);  // a group would be empty
}

TEST(Lsmop, BoundsSplitPositionAndDistanceVariables)
{
    auto p = make_problem(4, 3, 100);
    const auto& b = *p->bounds();
    for (std::size_t i = 0; i < 100; ++i) {
        EXPECT_EQ(b.lower(i), 0.0);
        EXPECT_EQ(b.upper(i), i < 2 ? 1.0 : 10.0);
    }
}

TEST(Lsmop, GroupSizesFollowLogisticMap)
{
    for (std::size_t m : {2u, 3u}) {
        for (std::size_t d : {100u, 500u, 1000u}) {
            auto p = make_problem(1, m, d);
            std::vector<double> c(m);
            c[0] = 3.8 * 0.1 * 0.9;
            for (std::size_t i = 1; i < m; ++i) c[i] = 3.8 * c[i - 1] * (1 - c[i - 1]);
            double sum = 0;
            for (double v : c) sum += v;
            std::size_t begin = m - 1;
            ASSERT_EQ(p->groups().size(), m);
            for (std::size_t i = 0; i < m; ++i) {
                const auto& g = p->groups()[i];
                EXPECT_EQ(g.objective, i);
                EXPECT_EQ(g.begin, begin);
                EXPECT_EQ(g.subcomponents, 5u);
                EXPECT_EQ(g.subcomponent_length, std::size_t(std::floor(c[i] / sum * double(d - m + 1) / 5)));
                begin = g.end();
            }
            EXPECT_LE(begin, d);
        }
    }
}

TEST(Lsmop, LandscapeOptima)
{
    using namespace lsmop::landscape;
    const std::vector<double> zero(7, 0.0), one(7, 1.0);
    EXPECT_EQ(sphere(zero), 0.0);
    EXPECT_EQ(schwefel(zero), 0.0);
    EXPECT_EQ(rastrigin(zero), 0.0);
    EXPECT_NEAR(griewank(zero), 0.0, 1e-15);
    EXPECT_NEAR(ackley(zero), 0.0, 1e-14);
    EXPECT_EQ(rosenbrock(one), 0.0);
    EXPECT_DOUBLE_EQ(sphere(std::vector{1.0, 2.0}), 5.0);
    EXPECT_DOUBLE_EQ(schwefel(std::vector{1.0, -3.0, 2.0}), 3.0);
    EXPECT_DOUBLE_EQ(rosenbrock(std::vector{0.0, 0.0}), 1.0);
    EXPECT_NEAR(rastrigin(std::vector{0.5}), 20.25, 1e-12);
}

TEST(Lsmop, OptimalDecisionsLandOnFrontSurface)
{
    RngStream rng(2024);
    for (int id = 1; id <= 9; ++id) {
        for (std::size_t m : {2u, 3u}) {
            auto p = make_problem(id, m, 200);
            const auto iv = lsmop::disconnected_intervals();
            for (int t = 0; t < 200; ++t) {
                // x1 <= 0.8 keeps every shifted optimum inside [0, 10].
                std::vector<double> pos(m - 1);
                for (auto& v : pos) v = rng.uniform(0.0, 0.8);
                if (id == 9) {
                    for (auto& v : pos) v = rng.bernoulli(0.5) ? rng.uniform(iv[0], iv[1]) : rng.uniform(iv[2], iv[3]);
                    if (pos[0] > 0.8) pos[0] = rng.uniform(iv[0], iv[1]);
                }
                const auto x = optimal_decision(*p, pos);
                ASSERT_TRUE(p->bounds()->contains(x));
                const auto f = eval(*p, x);
                EXPECT_NEAR(surface_residual(id, f), 0.0, 1e-6) << p->name() << " m=" << m;
            }
        }
    }
}

TEST(Lsmop, ObjectivesNonNegativeOnRandomInputs)
{
    RngStream rng(99);
    const std::size_t per_problem = 100000 / 9 + 1;
    for (int id = 1; id <= 9; ++id) {
        auto p = make_problem(id, 3, 100);
        EvaluationCounter c(per_problem);
        for (std::size_t t = 0; t < per_problem; ++t) {
            const auto f = c.evaluate(*p, random_point(*p->bounds(), rng));
            for (double v : f) {
                ASSERT_TRUE(std::isfinite(v));
                ASSERT_GE(v, 0.0) << p->name();
            }
        }
    }
}

TEST(Lsmop, FiniteAtLargerScale)
{
    for (int id = 1; id <= 9; ++id) {
        for (std::size_t d : {100u, 500u, 5000u}) {
            auto p = make_problem(id, 3, d);
            DecisionVector x(d);
            for (std::size_t j = 0; j < d; ++j) x[j] = p->bounds()->upper(j) * (0.3 + 0.7 * double(j % 7) / 6.0);
            for (double v : eval(*p, x)) EXPECT_TRUE(std::isfinite(v)) << p->name() << " d=" << d;
        }
    }
}

TEST(ReferenceFront, ExactSizeAndNondominated)
{
    for (int id = 1; id <= 9; ++id) {
        RngStream rng(5);
        const auto front = lsmop::sample_reference_front(id, 3, 10000, rng);
        ASSERT_EQ(front.size(), 10000u);
        // A dominating point is lexicographically smaller, so after sorting
        // only earlier points need checking.
        auto pts = front.points;
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                ASSERT_FALSE(oracle::dominates(pts[j], pts[i])) << "LSMOP" << id;
            }
        }
    }
}

TEST(ReferenceFront, PointsLieOnSurface)
{
    for (int id = 1; id <= 9; ++id) {
        for (std::size_t m : {2u, 3u}) {
            RngStream rng(8);
            for (const auto& f : lsmop::sample_reference_front(id, m, 2000, rng).points) {
                ASSERT_NEAR(surface_residual(id, f), 0.0, 1e-9) << "LSMOP" << id;
                for (double v : f) ASSERT_GE(v, 0.0);
            }
        }
    }
}

TEST(ReferenceFront, DisconnectedFrontUsesNondominatedIntervals)
{
    const auto iv = lsmop::disconnected_intervals();
    // Known breakpoints of x (1 + sin(3 pi x)) on its nondominated part.
    EXPECT_EQ(iv[0], 0.0);
    EXPECT_NEAR(iv[1], 0.2514118360889171, 1e-9);
    EXPECT_NEAR(iv[2], 0.6316265307000614, 1e-9);
    EXPECT_NEAR(iv[3], 0.8594008566447239, 1e-9);
    RngStream rng(3);
    for (const auto& f : lsmop::sample_reference_front(9, 3, 5000, rng).points) {
        for (std::size_t i = 0; i < 2; ++i) {
            const bool inside = (f[i] >= iv[0] && f[i] <= iv[1]) || (f[i] >= iv[2] && f[i] <= iv[3]);
            ASSERT_TRUE(inside) << f[i];
        }
    }
}

TEST(ReferenceFront, DeterministicForSameSeed)
{
    for (int id : {1, 5, 9}) {
        RngStream a(77), b(77);
        EXPECT_EQ(lsmop::sample_reference_front(id, 3, 1234, a).points,
                  lsmop::sample_reference_front(id, 3, 1234, b).points);
    }
}

TEST(ReferenceFront, RejectsTooFewPoints)
{
    RngStream rng(1);
    EXPECT_THROW(lsmop::sample_reference_front(1, 3, 2, rng), std::invalid_argument);
}

TEST(ReferenceFront, LatticeSize)
{
    EXPECT_EQ(lsmop::simplex_lattice_size(3, 1), 3u);
    EXPECT_EQ(lsmop::simplex_lattice_size(3, 2), 6u);
    EXPECT_EQ(lsmop::simplex_lattice_size(3, 12), 91u);
    EXPECT_EQ(lsmop::simplex_lattice_size(2, 9), 10u);
}

TEST(FrontCsv, RoundTripIsExact)
{
    RngStream rng(4);
    const auto front = lsmop::sample_reference_front(7, 3, 500, rng);
    const auto path = std::filesystem::temp_directory_path() / "lmoam_front_roundtrip.csv";
    lsmop::write_front_csv(path, front.points);
    EXPECT_EQ(lsmop::read_front_csv(path), front.points);
    std::filesystem::remove(path);
}

TEST(FrontCsv, RaggedOrMissingFilesThrow)
{
    const auto path = std::filesystem::temp_directory_path() / "lmoam_front_ragged.csv";
    {
        std::ofstream out(path);
        out << "f1,f2\n1,2\n3\n";
    }
    EXPECT_THROW(lsmop::read_front_csv(path), std::runtime_error);
    std::filesystem::remove(path);
    EXPECT_THROW(lsmop::read_front_csv(path), std::runtime_error);
}

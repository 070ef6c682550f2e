#pragma once

#include "lmoam/problem.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

/// LSMOP1-LSMOP9 scalable test problems.
///
/// Follows the suite as defined in R. Cheng, Y. Jin, M. Olhofer, B. Sendhoff,
/// "Test problems for large-scale multiobjective and many-objective
/// optimization", IEEE Trans. Cybernetics 47(12), 2017, in the form
/// distributed with PlatEMO. Every instance is assembled from four published
/// components:
///
///   * variable split: x = (x_f, x_s), m-1 position variables in [0,1] and
///     d-m+1 distance variables in [0,10];
///   * variable linkage on x_s (linear: 1 + i/d, nonlinear: 1 + cos(pi/2 i/d)),
///     x_s[i] <- link(i) * x_s[i] - 10 * x_f[0];
///   * non-uniform correlated grouping: a logistic-map sequence splits x_s into
///     m groups, each cut into nk = 5 equal subcomponents;
///   * landscape functions eta_1 (odd objectives) and eta_2 (even objectives)
///     averaged over each group, giving g_i;
///   * a front shape h: linear (LSMOP1-4), spherical (LSMOP5-8) or the
///     disconnected DTLZ7-like shape (LSMOP9).
namespace lmoam::lsmop {

enum class Landscape { sphere, schwefel, rosenbrock, rastrigin, griewank, ackley };
enum class Linkage { linear, nonlinear };
enum class FrontShape { linear, spherical, disconnected };

std::string to_string(Landscape l);

/// Landscape functions on one subcomponent. All are zero at their optimum,
/// which is x = 0 except Rosenbrock (x = 1).
namespace landscape {
double sphere(std::span<const double> x);
double schwefel(std::span<const double> x);    // Schwefel 2.21: max |x_i|
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double griewank(std::span<const double> x);
double ackley(std::span<const double> x);
double evaluate(Landscape l, std::span<const double> x);
double optimum(Landscape l);
} // namespace landscape

struct Definition {
    int id;
    Landscape odd;     // eta_1: objectives 1, 3, 5, ...
    Landscape even;    // eta_2: objectives 2, 4, ...
    Linkage linkage;
    FrontShape shape;
};

/// Component table for LSMOP1..9.
const Definition& definition(int id);

/// Contiguous block of distance variables feeding one objective's g term.
struct VariableGroup {
    std::size_t objective;   // 0-based
    std::size_t begin;       // absolute decision index, inclusive
    std::size_t subcomponent_length;
    std::size_t subcomponents;
    Landscape landscape;

    std::size_t end() const noexcept { return begin + subcomponent_length * subcomponents; }
};

class LsmopProblem final : public Problem {
public:
    /// Throws std::invalid_argument for id outside 1..9, m < 2, d <= m, or a
    /// d too small to give every objective a non-empty subcomponent.
    LsmopProblem(int id, std::size_t m, std::size_t d);

    std::string name() const override;
    std::size_t num_objectives() const noexcept override { return m_; }
    std::size_t num_variables() const noexcept override { return d_; }
    std::shared_ptr<const Bounds> bounds() const noexcept override { return bounds_; }

    int id() const noexcept { return def_.id; }
    const Definition& definition() const noexcept { return def_; }
    const std::vector<VariableGroup>& groups() const noexcept { return groups_; }

    /// Multiplicative linkage factor for the distance variable at absolute
    /// (0-based) decision index j >= m-1.
    double linkage_factor(std::size_t j) const;

private:
    ObjectiveVector evaluate(std::span<const double> x) const override;

    Definition def_;
    std::size_t m_;
    std::size_t d_;
    std::shared_ptr<const Bounds> bounds_;
    std::vector<VariableGroup> groups_;
};

/// Equivalent to LsmopProblem(id, m, d), returned behind the Problem interface.
std::unique_ptr<LsmopProblem> make_problem(int id, std::size_t m, std::size_t d);

inline constexpr std::size_t kSubcomponents = 5;

} // namespace lmoam::lsmop

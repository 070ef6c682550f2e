#include "lmoam/lsmop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lmoam::lsmop {

std::string to_string(Landscape l)
{
    switch (l) {
    case Landscape::sphere: return "sphere";
    case Landscape::schwefel: return "schwefel";
    case Landscape::rosenbrock: return "rosenbrock";
    case Landscape::rastrigin: return "rastrigin";
    case Landscape::griewank: return "griewank";
    case Landscape::ackley: return "ackley";
    }
    return "unknown";
}

namespace landscape {

double sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double schwefel(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s = std::max(s, std::abs(v));
    }
    return s;
}

double rosenbrock(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i] * x[i] - x[i + 1];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    }
    return s;
}

double griewank(std::span<const double> x)
{
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double ackley(std::span<const double> x)
{
    if (x.empty()) {
        return 0.0;
    }
    const auto n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return 20.0 - 20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + std::numbers::e;
}

double evaluate(Landscape l, std::span<const double> x)
{
    switch (l) {
    case Landscape::sphere: return sphere(x);
    case Landscape::schwefel: return schwefel(x);
    case Landscape::rosenbrock: return rosenbrock(x);
    case Landscape::rastrigin: return rastrigin(x);
    case Landscape::griewank: return griewank(x);
    case Landscape::ackley: return ackley(x);
    }
    throw std::logic_error("unknown landscape");
}

double optimum(Landscape l)
{
    return l == Landscape::rosenbrock ? 1.0 : 0.0;
}

} // namespace landscape

namespace {

using enum Landscape;

// (eta_1, eta_2, linkage, shape) for LSMOP1..9.
const std::array<Definition, 9> kDefinitions{{
    {1, sphere, sphere, Linkage::linear, FrontShape::linear},
    {2, griewank, schwefel, Linkage::linear, FrontShape::linear},
    {3, rastrigin, rosenbrock, Linkage::linear, FrontShape::linear},
    {4, ackley, griewank, Linkage::linear, FrontShape::linear},
    {5, sphere, sphere, Linkage::nonlinear, FrontShape::spherical},
    {6, rosenbrock, schwefel, Linkage::nonlinear, FrontShape::spherical},
    {7, ackley, rosenbrock, Linkage::nonlinear, FrontShape::spherical},
    {8, griewank, sphere, Linkage::nonlinear, FrontShape::spherical},
    {9, sphere, ackley, Linkage::nonlinear, FrontShape::disconnected},
}};

// Group sizes follow the logistic map c_{i+1} = 3.8 c_i (1 - c_i), c_1 = 3.8 * 0.1 * 0.9.
std::vector<std::size_t> subcomponent_lengths(std::size_t m, std::size_t d)
{
    std::vector<double> c(m);
    c[0] = 3.8 * 0.1 * (1.0 - 0.1);
    for (std::size_t i = 1; i < m; ++i) {
        c[i] = 3.8 * c[i - 1] * (1.0 - c[i - 1]);
    }
    double total = 0.0;
    for (double v : c) {
        total += v;
    }
    const double distance_vars = static_cast<double>(d - m + 1);
    std::vector<std::size_t> len(m);
    for (std::size_t i = 0; i < m; ++i) {
        len[i] = static_cast<std::size_t>(
            std::floor(c[i] / total * distance_vars / static_cast<double>(kSubcomponents)));
    }
    return len;
}

} // namespace

const Definition& definition(int id)
{
    if (id < 1 || id > 9) {
        throw std::invalid_argument("LSMOP id must be in 1..9, got " + std::to_string(id));
    }
    return kDefinitions[static_cast<std::size_t>(id - 1)];
}

LsmopProblem::LsmopProblem(int id, std::size_t m, std::size_t d) : def_(lsmop::definition(id)), m_(m), d_(d)
{
    if (m < 2) {
        throw std::invalid_argument("LSMOP requires at least 2 objectives");
    }
    if (d <= m) {
        throw std::invalid_argument("LSMOP requires d > m (got m=" + std::to_string(m) + ", d=" + std::to_string(d)
                                    + ")");
    }
    const auto len = subcomponent_lengths(m, d);
    std::size_t offset = m - 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (len[i] == 0) {
            throw std::invalid_argument("LSMOP: d=" + std::to_string(d) + " leaves objective " + std::to_string(i + 1)
                                        + " without distance variables");
        }
        groups_.push_back({i, offset, len[i], kSubcomponents, i % 2 == 0 ? def_.odd : def_.even});
        offset += len[i] * kSubcomponents;
    }

    std::vector<double> lower(d, 0.0);
    std::vector<double> upper(d, 10.0);
    std::fill(upper.begin(), upper.begin() + static_cast<std::ptrdiff_t>(m - 1), 1.0);
    bounds_ = std::make_shared<const Bounds>(std::move(lower), std::move(upper));
}

std::string LsmopProblem::name() const
{
    return "LSMOP" + std::to_string(def_.id);
}

double LsmopProblem::linkage_factor(std::size_t j) const
{
    // 1-based variable index over the full decision vector, as in the suite.
    const double r = static_cast<double>(j + 1) / static_cast<double>(d_);
    if (def_.linkage == Linkage::linear) {
        return 1.0 + r;
    }
    return 1.0 + std::cos(0.5 * std::numbers::pi * r);
}

ObjectiveVector LsmopProblem::evaluate(std::span<const double> x) const
{
    const std::size_t m = m_;

    // Variable linkage on the distance variables.
    std::vector<double> y(x.begin(), x.end());
    const double shift = 10.0 * x[0];
    for (std::size_t j = m - 1; j < d_; ++j) {
        y[j] = linkage_factor(j) * x[j] - shift;
    }

    // Correlated grouping: g_i is the landscape averaged over its subcomponents.
    std::vector<double> g(m, 0.0);
    for (const auto& grp : groups_) {
        double s = 0.0;
        for (std::size_t k = 0; k < grp.subcomponents; ++k) {
            const std::span<const double> sub(y.data() + grp.begin + k * grp.subcomponent_length,
                                              grp.subcomponent_length);
            s += landscape::evaluate(grp.landscape, sub);
        }
        g[grp.objective] = s / static_cast<double>(grp.subcomponent_length * grp.subcomponents);
    }

    ObjectiveVector f(m);
    switch (def_.shape) {
    case FrontShape::linear:
        // f_i = (1 + g_i) * x_1 ... x_{m-i} * (1 - x_{m-i+1})
        for (std::size_t i = 0; i < m; ++i) {
            double h = 1.0;
            for (std::size_t t = 0; t + 1 + i < m; ++t) {
                h *= x[t];
            }
            if (i > 0) {
                h *= 1.0 - x[m - 1 - i];
            }
            f[i] = (1.0 + g[i]) * h;
        }
        break;
    case FrontShape::spherical:
        // f_i = (1 + g_i + g_{i+1}) * cos(.)...cos(.) * sin(.), g_{m+1} = 0
        for (std::size_t i = 0; i < m; ++i) {
            double h = 1.0;
            for (std::size_t t = 0; t + 1 + i < m; ++t) {
                h *= std::cos(0.5 * std::numbers::pi * x[t]);
            }
            if (i > 0) {
                h *= std::sin(0.5 * std::numbers::pi * x[m - 1 - i]);
            }
            const double g_next = i + 1 < m ? g[i + 1] : 0.0;
            f[i] = (1.0 + g[i] + g_next) * h;
        }
        break;
    case FrontShape::disconnected: {
        // f_i = x_i for i < m; f_m = (1 + G) * (m - sum f_i / (1 + G) * (1 + sin(3 pi f_i))),
        // with G = 1 + sum_i g_i.
        double big_g = 1.0;
        for (double v : g) {
            big_g += v;
        }
        double h = static_cast<double>(m);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            f[i] = x[i];
            h -= f[i] / (1.0 + big_g) * (1.0 + std::sin(3.0 * std::numbers::pi * f[i]));
        }
        f[m - 1] = (1.0 + big_g) * h;
        break;
    }
    }
    return f;
}

std::unique_ptr<LsmopProblem> make_problem(int id, std::size_t m, std::size_t d)
{
    return std::make_unique<LsmopProblem>(id, m, d);
}

} // namespace lmoam::lsmop

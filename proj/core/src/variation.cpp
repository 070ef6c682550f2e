#include "lmoam/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmoam::ea {

void VariationConfig::validate() const
{
    auto probability = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(what) + " must be in [0,1]");
        }
    };
    probability(crossover_probability, "crossover_probability");
    if (mutation_probability) {
        probability(*mutation_probability, "mutation_probability");
    }
    if (!(crossover_distribution_index > 0.0)) {
        throw std::invalid_argument("crossover_distribution_index must be positive");
    }
    if (!(mutation_distribution_index > 0.0)) {
        throw std::invalid_argument("mutation_distribution_index must be positive");
    }
}

double VariationConfig::mutation_probability_for(std::size_t d) const
{
    return mutation_probability.value_or(d == 0 ? 0.0 : 1.0 / static_cast<double>(d));
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                                        const VariationConfig& cfg, const Bounds& bounds,
                                                        RngStream& rng)
{
    if (p1.size() != p2.size() || p1.size() != bounds.size()) {
        throw std::invalid_argument("sbx_crossover: dimension mismatch");
    }
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (!rng.bernoulli(cfg.crossover_probability)) {
        return {std::move(c1), std::move(c2)};
    }
    const double eta = cfg.crossover_distribution_index;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (!rng.bernoulli(0.5) || std::abs(p1[i] - p2[i]) <= 1e-14) {
            continue;
        }
        const double y1 = std::min(p1[i], p2[i]);
        const double y2 = std::max(p1[i], p2[i]);
        const double yl = bounds.lower(i);
        const double yu = bounds.upper(i);
        const double u = rng.uniform();

        auto spread = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
            if (u <= 1.0 / alpha) {
                return std::pow(u * alpha, 1.0 / (eta + 1.0));
            }
            return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        };
        const double beta_lo = 1.0 + 2.0 * (y1 - yl) / (y2 - y1);
        const double beta_hi = 1.0 + 2.0 * (yu - y2) / (y2 - y1);
        double child1 = 0.5 * ((y1 + y2) - spread(beta_lo) * (y2 - y1));
        double child2 = 0.5 * ((y1 + y2) + spread(beta_hi) * (y2 - y1));
        child1 = std::clamp(child1, yl, yu);
        child2 = std::clamp(child2, yl, yu);
        if (rng.bernoulli(0.5)) {
            std::swap(child1, child2);
        }
        c1[i] = child1;
        c2[i] = child2;
    }
    return {std::move(c1), std::move(c2)};
}

DecisionVector polynomial_mutation(std::span<const double> x, const VariationConfig& cfg, const Bounds& bounds,
                                   RngStream& rng)
{
    if (x.size() != bounds.size()) {
        throw std::invalid_argument("polynomial_mutation: dimension mismatch");
    }
    DecisionVector y(x.begin(), x.end());
    const double pm = cfg.mutation_probability_for(x.size());
    const double eta = cfg.mutation_distribution_index;
    const double power = 1.0 / (eta + 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!rng.bernoulli(pm)) {
            continue;
        }
        const double yl = bounds.lower(i);
        const double yu = bounds.upper(i);
        const double span = yu - yl;
        const double v = std::clamp(y[i], yl, yu);
        const double delta1 = (v - yl) / span;
        const double delta2 = (yu - v) / span;
        const double u = rng.uniform();
        double deltaq;
        if (u < 0.5) {
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - delta1, eta + 1.0);
            deltaq = std::pow(val, power) - 1.0;
        } else {
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - delta2, eta + 1.0);
            deltaq = 1.0 - std::pow(val, power);
        }
        y[i] = std::clamp(v + deltaq * span, yl, yu);
    }
    return y;
}

} // namespace lmoam::ea

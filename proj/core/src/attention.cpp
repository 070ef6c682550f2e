#include "lmoam/attention.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmoam::attention {

VarianceVector variance_vector(std::span<const DecisionVector> rows)
{
    if (rows.size() < 2) {
        throw std::invalid_argument("variance_vector: need at least 2 individuals");
    }
    const std::size_t n = rows.size();
    const std::size_t d = rows.front().size();
    std::vector<double> mean(d, 0.0);
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw std::invalid_argument("variance_vector: individuals of different dimension");
        }
        for (std::size_t i = 0; i < d; ++i) {
            mean[i] += r[i];
        }
    }
    for (auto& v : mean) {
        v /= static_cast<double>(n);
    }
    VarianceVector out;
    out.raw.assign(d, 0.0);
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < d; ++i) {
            const double dev = r[i] - mean[i];
            out.raw[i] += dev * dev;
        }
    }
    for (auto& v : out.raw) {
        v /= static_cast<double>(n);
    }

    out.normalized.assign(d, 0.0);
    if (d > 0) {
        const auto [lo, hi] = std::minmax_element(out.raw.begin(), out.raw.end());
        const double range = *hi - *lo;
        if (range > 0.0) {
            for (std::size_t i = 0; i < d; ++i) {
                out.normalized[i] = (out.raw[i] - *lo) / range;
            }
        }
    }
    return out;
}

VarianceVector variance_vector(const Population& pop)
{
    std::vector<DecisionVector> rows;
    rows.reserve(pop.size());
    for (const auto& ind : pop) {
        rows.push_back(ind.decision);
    }
    return variance_vector(rows);
}

KeyMatrix::KeyMatrix(std::vector<std::size_t> bucket_of, std::size_t k) : bucket_of_(std::move(bucket_of)), k_(k)
{
    if (k_ == 0) {
        throw std::invalid_argument("KeyMatrix: k must be at least 1");
    }
    for (auto b : bucket_of_) {
        if (b >= k_) {
            throw std::invalid_argument("KeyMatrix: bucket index out of range");
        }
    }
}

std::vector<double> KeyMatrix::project(std::span<const double> x) const
{
    if (x.size() != bucket_of_.size()) {
        throw std::invalid_argument("KeyMatrix::project: dimension mismatch");
    }
    std::vector<double> sums(k_, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sums[bucket_of_[i]] += x[i];
    }
    return sums;
}

std::vector<double> KeyMatrix::expand(std::span<const double> weights) const
{
    if (weights.size() != k_) {
        throw std::invalid_argument("KeyMatrix::expand: query has wrong length");
    }
    std::vector<double> a(bucket_of_.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = weights[bucket_of_[i]];
    }
    return a;
}

std::vector<std::vector<int>> KeyMatrix::dense() const
{
    std::vector<std::vector<int>> out(bucket_of_.size(), std::vector<int>(k_, 0));
    for (std::size_t i = 0; i < bucket_of_.size(); ++i) {
        out[i][bucket_of_[i]] = 1;
    }
    return out;
}

KeyMatrix build_key(const VarianceVector& variance, std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("build_key: k must be at least 1");
    }
    std::vector<std::size_t> bucket(variance.normalized.size());
    const auto kd = static_cast<double>(k);
    for (std::size_t i = 0; i < bucket.size(); ++i) {
        const double scaled = std::floor(variance.normalized[i] * kd);
        bucket[i] = std::min(static_cast<std::size_t>(std::max(scaled, 0.0)), k - 1);
    }
    return KeyMatrix(std::move(bucket), k);
}

std::size_t select_value(const Population& pop, RngStream& rng)
{
    if (pop.empty()) {
        throw std::invalid_argument("select_value: empty population");
    }
    double best = -1.0;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto& ind = pop[i];
        if (!ind.rank || !ind.crowding) {
            throw std::logic_error("select_value: rank/crowding not assigned");
        }
        if (*ind.rank != 0) {
            continue;
        }
        if (*ind.crowding > best) {
            best = *ind.crowding;
            candidates.assign(1, i);
        } else if (*ind.crowding == best) {
            candidates.push_back(i);
        }
    }
    if (candidates.empty()) {
        throw std::logic_error("select_value: population has no rank-0 member");
    }
    return candidates[rng.index(candidates.size())];
}

std::vector<double> query_weights(const KeyMatrix& key, std::span<const double> value, std::span<const double> donor)
{
    const auto value_sums = key.project(value);
    const auto donor_sums = key.project(donor);
    std::vector<double> w(key.buckets());
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] = donor_sums[j] == 0.0 ? 1.0 : value_sums[j] / donor_sums[j];
    }
    return w;
}

std::vector<Query> init_queries(const Population& pop, const KeyMatrix& key, std::span<const double> value,
                                std::size_t g, RngStream& rng)
{
    if (pop.empty()) {
        throw std::invalid_argument("init_queries: empty population");
    }
    std::vector<Query> queries;
    queries.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        const auto& donor = pop[rng.index(pop.size())].decision;
        queries.push_back({query_weights(key, value, donor), std::nullopt});
    }
    return queries;
}

DecisionVector apply_attention(std::span<const double> weights, const KeyMatrix& key, std::span<const double> value,
                               const Bounds& bounds)
{
    if (value.size() != key.variables()) {
        throw std::invalid_argument("apply_attention: value has wrong dimension");
    }
    auto out = key.expand(weights);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= value[i];
    }
    clamp_in_place(out, bounds);
    return out;
}

} // namespace lmoam::attention

#pragma once

#include "lmoam/rng.hpp"
#include "lmoam/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

/// Variable-level attention: variance-driven grouping of decision variables
/// (the Key), per-group weight vectors (Queries) and their application to a
/// chosen Value individual.
namespace lmoam::attention {

/// Per-variable population variance of the n x d decision matrix.
struct VarianceVector {
    std::vector<double> raw;          // divide-by-n variance, >= 0
    std::vector<double> normalized;   // min-max scaled to [0,1]; all zero when max == min
};

/// Throws std::invalid_argument when the population has fewer than 2 members
/// or mixed dimensions.
VarianceVector variance_vector(const Population& pop);
VarianceVector variance_vector(std::span<const DecisionVector> rows);

/// Binary d x k Key matrix, stored as one bucket index per variable.
///
/// Variable i goes to bucket floor(normalized[i] * k), with the top edge
/// normalized[i] == 1 folded into bucket k-1, so every row holds exactly one 1.
class KeyMatrix {
public:
    KeyMatrix(std::vector<std::size_t> bucket_of, std::size_t k);

    std::size_t buckets() const noexcept { return k_; }
    std::size_t variables() const noexcept { return bucket_of_.size(); }
    std::size_t bucket_of(std::size_t i) const { return bucket_of_[i]; }
    const std::vector<std::size_t>& assignment() const noexcept { return bucket_of_; }

    /// x * K: bucket-wise sums of x (length k).
    std::vector<double> project(std::span<const double> x) const;

    /// q * K^T: every variable receives its bucket's weight (length d).
    std::vector<double> expand(std::span<const double> weights) const;

    /// Dense 0/1 form, row-major d x k.
    std::vector<std::vector<int>> dense() const;

private:
    std::vector<std::size_t> bucket_of_;
    std::size_t k_;
};

/// Throws std::invalid_argument for k == 0.
KeyMatrix build_key(const VarianceVector& variance, std::size_t k);

/// Attention weights in bucket space plus the objectives of the solution they
/// produced.
struct Query {
    std::vector<double> weights;
    std::optional<ObjectiveVector> fitness;
};

/// Index of the Value individual: uniform choice among the first-front members
/// with the largest crowding distance. Members must carry rank and crowding.
/// Throws std::invalid_argument on an empty population.
std::size_t select_value(const Population& pop, RngStream& rng);

/// g queries from donors sampled uniformly (with replacement) from `pop`:
/// weights[j] = (v K)[j] / (q K)[j], and 1 where the donor's bucket sum is 0.
std::vector<Query> init_queries(const Population& pop, const KeyMatrix& key, std::span<const double> value,
                                std::size_t g, RngStream& rng);

/// Ratio weights for one donor.
std::vector<double> query_weights(const KeyMatrix& key, std::span<const double> value, std::span<const double> donor);

/// v' = clamp((q K^T) o v).
DecisionVector apply_attention(std::span<const double> weights, const KeyMatrix& key, std::span<const double> value,
                               const Bounds& bounds);

} // namespace lmoam::attention

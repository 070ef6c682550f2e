#pragma once

#include <span>
#include <string>

namespace lmoam::harness {

enum class Direction { lower_is_better, higher_is_better };

struct RankSumResult {
    double rank_sum_a = 0.0;   // sum of the midranks of sample a in the pooled sample
    double p_value = 1.0;      // two-sided
    bool exact = false;        // exact null distribution (min sample size below 8)
};

/// Two-sided Wilcoxon rank-sum test. Uses the exact permutation distribution
/// of the midrank sum when either sample has fewer than 8 values and the
/// normal approximation with tie and continuity correction otherwise.
/// Throws std::invalid_argument for an empty sample.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b);

/// "+" when a is significantly better than b, "-" when significantly worse,
/// "=" otherwise.
std::string wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha,
                              Direction direction = Direction::lower_is_better);

} // namespace lmoam::harness

#include "lmoam/harness/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lmoam::harness {

namespace {

// Midranks (1-based) of the pooled sample, doubled so they stay integral.
std::vector<long> doubled_midranks(const std::vector<double>& pooled)
{
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    std::vector<long> r(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) {
            ++j;
        }
        // ranks i+1..j+1, mean (i+j+2)/2, doubled: i+j+2
        for (std::size_t t = i; t <= j; ++t) {
            r[order[t]] = static_cast<long>(i + j + 2);
        }
        i = j + 1;
    }
    return r;
}

} // namespace

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("rank-sum test needs two nonempty samples");
    }
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto r2 = doubled_midranks(pooled);
    long w2 = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        w2 += r2[i];
    }

    RankSumResult res;
    res.rank_sum_a = static_cast<double>(w2) / 2.0;
    const double mean = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;

    if (std::min(n1, n2) < 8) {
        // Count subsets of size n1 by doubled rank sum: ways[k][s].
        const long total = std::accumulate(r2.begin(), r2.end(), 0L);
        std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(static_cast<std::size_t>(total) + 1, 0.0));
        ways[0][0] = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto ri = static_cast<std::size_t>(r2[i]);
            for (std::size_t k = std::min(i + 1, n1); k >= 1; --k) {
                auto& dst = ways[k];
                const auto& src = ways[k - 1];
                for (std::size_t s = total; s >= ri; --s) {
                    dst[s] += src[s - ri];
                    if (s == ri) break;
                }
            }
        }
        double all = 0, le = 0, ge = 0;
        for (std::size_t s = 0; s < ways[n1].size(); ++s) {
            const double c = ways[n1][s];
            all += c;
            if (static_cast<long>(s) <= w2) le += c;
            if (static_cast<long>(s) >= w2) ge += c;
        }
        res.p_value = std::min(1.0, 2.0 * std::min(le, ge) / all);
        res.exact = true;
        return res;
    }

    // Tie-corrected variance of the rank sum.
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double ties = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sorted[j] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i);
        ties += t * t * t - t;
        i = j;
    }
    const double dn = static_cast<double>(n);
    const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 * ((dn + 1.0) - ties / (dn * (dn - 1.0)));
    if (var <= 0.0) {
        res.p_value = 1.0;
        return res;
    }
    const double dev = std::abs(res.rank_sum_a - mean);
    const double z = std::max(0.0, dev - 0.5) / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return res;
}

std::string wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha,
                              Direction direction)
{
    const auto r = rank_sum_test(a, b);
    if (!(r.p_value < alpha)) {
        return "=";
    }
    const double mean = static_cast<double>(a.size()) * static_cast<double>(a.size() + b.size() + 1) / 2.0;
    const bool a_lower = r.rank_sum_a < mean;
    const bool a_better = direction == Direction::lower_is_better ? a_lower : !a_lower;
    return a_better ? "+" : "-";
}

} // namespace lmoam::harness

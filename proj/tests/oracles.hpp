#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. None of these share code with the library under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

inline bool dominates(const Point& a, const Point& b)
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

/// Repeated filter: peel off the nondominated remainder until nothing is left.
inline std::vector<std::vector<std::size_t>> fronts(const std::vector<Point>& pts)
{
    std::vector<std::size_t> left(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) left[i] = i;
    std::vector<std::vector<std::size_t>> out;
    while (!left.empty()) {
        std::vector<std::size_t> front, rest;
        for (auto i : left) {
            bool dominated = false;
            for (auto j : left) {
                if (dominates(pts[j], pts[i])) {
                    dominated = true;
                    break;
                }
            }
            (dominated ? rest : front).push_back(i);
        }
        out.push_back(front);
        left = rest;
    }
    return out;
}

inline double igd(const std::vector<Point>& front, const std::vector<Point>& reference)
{
    double total = 0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : front) {
            double s = 0;
            for (std::size_t i = 0; i < r.size(); ++i) s += (r[i] - f[i]) * (r[i] - f[i]);
            best = std::min(best, std::sqrt(s));
        }
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

/// Inclusion-exclusion over all nonempty subsets; intersection of boxes
/// [p, ref] is [max p, ref]. Only for small fronts.
inline double hv_inclusion_exclusion(const std::vector<Point>& front, const Point& ref)
{
    const std::size_t n = front.size();
    double total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Point corner(ref.size(), -std::numeric_limits<double>::infinity());
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                ++bits;
                for (std::size_t k = 0; k < ref.size(); ++k) corner[k] = std::max(corner[k], front[i][k]);
            }
        }
        double vol = 1;
        for (std::size_t k = 0; k < ref.size(); ++k) vol *= std::max(0.0, ref[k] - corner[k]);
        total += (bits % 2 ? 1 : -1) * vol;
    }
    return total;
}

struct MonteCarlo {
    double estimate;
    double standard_error;
};

/// Uniform samples in the box [lo, ref]; a sample counts when some front
/// point weakly dominates it.
inline MonteCarlo hv_monte_carlo(std::vector<Point> front, const Point& lo, const Point& ref, std::size_t samples,
                                 std::uint64_t seed)
{
    std::sort(front.begin(), front.end());
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t m = ref.size();
    double box = 1;
    for (std::size_t k = 0; k < m; ++k) box *= ref[k] - lo[k];
    std::size_t hits = 0;
    Point s(m);
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t k = 0; k < m; ++k) s[k] = lo[k] + (ref[k] - lo[k]) * u(gen);
        for (const auto& p : front) {
            if (p[0] > s[0]) break;  // sorted by f1
            bool in = true;
            for (std::size_t k = 1; k < m; ++k) {
                if (p[k] > s[k]) {
                    in = false;
                    break;
                }
            }
            if (in) {
                ++hits;
                break;
            }
        }
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * p, box * std::sqrt(p * (1 - p) / static_cast<double>(samples))};
}

/// Two-sided exact rank-sum p-value by enumerating every split of the pooled
/// sample into groups of |a| and |b|, using midranks.
inline double rank_sum_p_enumerated(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size(), n1 = a.size();
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        double less = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (pooled[j] < pooled[i]) ++less;
            if (pooled[j] == pooled[i]) ++equal;
        }
        rank[i] = less + (equal + 1) / 2;
    }
    double observed = 0;
    for (std::size_t i = 0; i < n1; ++i) observed += rank[i];
    double le = 0, ge = 0, all = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n1) continue;
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += rank[i];
        ++all;
        if (s <= observed + 1e-9) ++le;
        if (s >= observed - 1e-9) ++ge;
    }
    return std::min(1.0, 2 * std::min(le, ge) / all);
}

inline double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

} // namespace oracle

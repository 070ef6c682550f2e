#include "lmoam/sorting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lmoam::ea {

std::vector<std::size_t> FrontPartition::ranks(std::size_t n) const
{
    std::vector<std::size_t> r(n, 0);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (auto i : fronts[f]) {
            r[i] = f;
        }
    }
    return r;
}

namespace {

void check_input(std::span<const ObjectiveVector> objectives)
{
    if (objectives.empty()) {
        throw std::invalid_argument("nondominated_sort: empty input");
    }
    const auto m = objectives.front().size();
    for (const auto& f : objectives) {
        if (f.size() != m) {
            throw std::invalid_argument("nondominated_sort: objective vectors of different length");
        }
    }
}

} // namespace

FrontPartition nondominated_sort(std::span<const ObjectiveVector> objectives)
{
    check_input(objectives);
    const std::size_t n = objectives.size();
    const std::size_t words = (n + 63) / 64;
    // Row i, bit j set when i dominates j.
    std::vector<std::uint64_t> dominance(n * words, 0);
    std::vector<std::size_t> domination_count(n, 0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(objectives[i], objectives[j])) {
                dominance[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
                ++domination_count[j];
            } else if (dominates(objectives[j], objectives[i])) {
                dominance[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
                ++domination_count[i];
            }
        }
    }

    FrontPartition out;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            const std::uint64_t* row = dominance.data() + i * words;
            for (std::size_t w = 0; w < words; ++w) {
                for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
                    const auto j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    if (--domination_count[j] == 0) {
                        next.push_back(j);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return out;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> objectives)
{
    check_input(objectives);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < objectives.size() && !dominated; ++j) {
            dominated = j != i && dominates(objectives[j], objectives[i]);
        }
        if (!dominated) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front)
{
    const std::size_t n = front.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (n == 0) {
        throw std::invalid_argument("crowding_distance: empty front");
    }
    if (n <= 2) {
        return std::vector<double>(n, inf);
    }
    const std::size_t m = front.front().size();
    std::vector<double> distance(n, 0.0);
    std::vector<std::size_t> order(n);
    std::vector<double> values;

    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return front[a][obj] < front[b][obj]; });
        const double lo = front[order.front()][obj];
        const double hi = front[order.back()][obj];
        const double range = hi - lo;
        if (!(range > 0.0)) {
            continue;
        }
        // Distinct values in ascending order.
        values.clear();
        for (auto i : order) {
            if (values.empty() || front[i][obj] > values.back()) {
                values.push_back(front[i][obj]);
            }
        }
        std::size_t pos = 0;
        for (auto i : order) {
            const double v = front[i][obj];
            while (values[pos] < v) {
                ++pos;
            }
            if (v == lo || v == hi) {
                distance[i] = inf;
            } else {
                distance[i] += (values[pos + 1] - values[pos - 1]) / range;
            }
        }
    }
    return distance;
}

FrontPartition assign_rank_and_crowding(Population& pop)
{
    const auto objs = pop.objectives();
    auto partition = nondominated_sort(objs);
    std::vector<ObjectiveVector> front_objs;
    for (std::size_t r = 0; r < partition.fronts.size(); ++r) {
        const auto& front = partition.fronts[r];
        front_objs.clear();
        for (auto i : front) {
            front_objs.push_back(objs[i]);
        }
        const auto cd = crowding_distance(front_objs);
        for (std::size_t k = 0; k < front.size(); ++k) {
            pop[front[k]].rank = r;
            pop[front[k]].crowding = cd[k];
        }
    }
    return partition;
}

} // namespace lmoam::ea

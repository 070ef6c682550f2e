#include "lmoam/selection.hpp"

#include "lmoam/sorting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lmoam::ea {

SurvivorSelection select_survivors(std::span<const ObjectiveVector> objectives, std::size_t target)
{
    SurvivorSelection out;
    if (objectives.empty()) {
        out.underfilled = target > 0;
        return out;
    }
    const auto partition = nondominated_sort(objectives);
    std::vector<ObjectiveVector> front_objs;
    for (std::size_t r = 0; r < partition.fronts.size() && out.indices.size() < target; ++r) {
        const auto& front = partition.fronts[r];
        front_objs.clear();
        for (auto i : front) {
            front_objs.push_back(objectives[i]);
        }
        const auto cd = crowding_distance(front_objs);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const std::size_t room = target - out.indices.size();
        if (front.size() > room) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
            order.resize(room);
        }
        for (auto k : order) {
            out.indices.push_back(front[k]);
            out.ranks.push_back(r);
            out.crowding.push_back(cd[k]);
        }
    }
    out.underfilled = objectives.size() < target;
    return out;
}

EnvironmentalSelection environmental_selection(const Population& pop, std::size_t target)
{
    if (pop.size() < target) {
        return {pop, true};
    }
    const auto sel = select_survivors(pop.objectives(), target);
    Population survivors = pop.subset(sel.indices);
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        survivors[k].rank = sel.ranks[k];
        survivors[k].crowding = sel.crowding[k];
    }
    return {std::move(survivors), false};
}

std::size_t binary_tournament(const Population& pop, RngStream& rng)
{
    if (pop.empty()) {
        throw std::invalid_argument("binary_tournament: empty population");
    }
    const std::size_t a = rng.index(pop.size());
    const std::size_t b = rng.index(pop.size());
    const auto& ia = pop[a];
    const auto& ib = pop[b];
    if (!ia.rank || !ib.rank || !ia.crowding || !ib.crowding) {
        throw std::logic_error("binary_tournament: rank/crowding not assigned");
    }
    if (*ia.rank != *ib.rank) {
        return *ia.rank < *ib.rank ? a : b;
    }
    return *ib.crowding > *ia.crowding ? b : a;
}

} // namespace lmoam::ea

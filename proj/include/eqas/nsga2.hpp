#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eqas/random.hpp"

// Non-dominated sorting and crowding distance. All objectives are maximized.
namespace eqas::nsga2 {

using Objectives = std::vector<double>;

[[nodiscard]] bool dominates(std::span<const double> a, std::span<const double> b);

/// Fronts of point indices, best first; indices within a front ascend.
[[nodiscard]] std::vector<std::vector<std::size_t>> non_dominated_sort(
    std::span<const Objectives> points);

/// Crowding distance of each member of `front` (aligned with `front`);
/// boundary points get +infinity.
[[nodiscard]] std::vector<double> crowding_distance(std::span<const Objectives> points,
                                                    std::span<const std::size_t> front);

struct Ranking {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;

    /// Crowded-comparison: lower rank first, then larger crowding distance.
    [[nodiscard]] bool better(std::size_t a, std::size_t b) const;
};

[[nodiscard]] Ranking rank(std::span<const Objectives> points);

/// Indices of the `count` survivors: whole fronts in order, the last partial
/// front cut by descending crowding distance (ties by index).
[[nodiscard]] std::vector<std::size_t> select_survivors(std::span<const Objectives> points,
                                                        std::size_t count);

/// Binary tournament under the crowded-comparison operator.
[[nodiscard]] std::size_t tournament(const Ranking &ranking, Rng &rng);

} // namespace eqas::nsga2

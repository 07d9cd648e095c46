#include "eqas/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "eqas/errors.hpp"

namespace eqas::nsga2 {

bool dominates(std::span<const double> a, std::span<const double> b) {
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            return false;
        }
        if (a[i] > b[i]) {
            strictly = true;
        }
    }
    return strictly;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const Objectives> points) {
    const auto n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> counter(n, 0);
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) {
                continue;
            }
            if (dominates(points[p], points[q])) {
                dominated[p].push_back(q);
            } else if (dominates(points[q], points[p])) {
                ++counter[p];
            }
        }
        if (counter[p] == 0) {
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto p : current) {
            for (auto q : dominated[p]) {
                if (--counter[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Objectives> points,
                                      std::span<const std::size_t> front) {
    const auto m = front.size();
    std::vector<double> dist(m, 0.0);
    if (m <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    const auto n_obj = points[front[0]].size();
    std::vector<std::size_t> order(m);
    for (std::size_t k = 0; k < n_obj; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
            return points[front[a]][k] < points[front[b]][k];
        });
        const double lo = points[front[order.front()]][k];
        const double hi = points[front[order.back()]][k];
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        if (hi == lo) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < m; ++i) {
            dist[order[i]] += (points[front[order[i + 1]]][k] - points[front[order[i - 1]]][k]) / (hi - lo);
        }
    }
    return dist;
}

bool Ranking::better(std::size_t a, std::size_t b) const {
    if (rank[a] != rank[b]) {
        return rank[a] < rank[b];
    }
    return crowding[a] > crowding[b];
}

Ranking rank(std::span<const Objectives> points) {
    Ranking r;
    r.rank.assign(points.size(), 0);
    r.crowding.assign(points.size(), 0.0);
    const auto fronts = non_dominated_sort(points);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const auto cd = crowding_distance(points, fronts[f]);
        for (std::size_t i = 0; i < fronts[f].size(); ++i) {
            r.rank[fronts[f][i]] = f;
            r.crowding[fronts[f][i]] = cd[i];
        }
    }
    return r;
}

std::vector<std::size_t> select_survivors(std::span<const Objectives> points, std::size_t count) {
    if (count > points.size()) {
        throw UsageError("cannot select more survivors than candidates");
    }
    std::vector<std::size_t> out;
    out.reserve(count);
    for (const auto &front : non_dominated_sort(points)) {
        if (out.size() + front.size() <= count) {
            out.insert(out.end(), front.begin(), front.end());
            continue;
        }
        const auto cd = crowding_distance(points, front);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cd[a] > cd[b]; });
        for (std::size_t i = 0; out.size() < count; ++i) {
            out.push_back(front[order[i]]);
        }
        break;
    }
    return out;
}

std::size_t tournament(const Ranking &ranking, Rng &rng) {
    const auto n = ranking.rank.size();
    if (n == 0) {
        throw UsageError("tournament over an empty population");
    }
    const auto a = static_cast<std::size_t>(uniform_index(rng, n));
    const auto b = static_cast<std::size_t>(uniform_index(rng, n));
    if (ranking.better(b, a)) {
        return b;
    }
    return a;
}

} // namespace eqas::nsga2

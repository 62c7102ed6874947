#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "splitclust/clustering.hpp"
#include "splitclust/graph.hpp"

namespace splitclust {

// Limits for the exhaustive solver. Exceeding max_vertices or node_limit
// throws resource_exhausted; an optimum above max_cost is reported as "no
// clustering within budget".
struct SearchBudget {
    std::size_t max_cost = 6;
    std::uint64_t node_limit = 50'000'000;
    std::size_t max_vertices = 12;
};

/**
 * Minimum-cost overlapping clustering, or std::nullopt if every valid
 * clustering costs more than budget.max_cost.
 *
 * Iterative deepening on the total cost, starting from lower_bound(g) for
 * complete graphs. Each round is a depth-first search that places vertices
 * one at a time: it picks the vertex's multiplicity, then the clusters it
 * joins (existing ones or freshly opened ones, in ascending index order).
 * Pairs are checked as soon as both endpoints are placed.
 */
std::optional<Clustering> solve_exact(const CorrelationGraph& g, const SearchBudget& budget = {});

// True iff some valid clustering of cost <= k exists.
bool decide(const CorrelationGraph& g, std::size_t k, std::uint64_t node_limit = SearchBudget{}.node_limit,
            std::size_t max_vertices = SearchBudget{}.max_vertices);

/**
 * Visits valid clusterings of cost exactly `c`, stopping early when `visit`
 * returns false. Every clustering of cost c in which each vertex lies in at
 * most max(blue degree, 2) clusters (at most max(blue degree, 1) if it has no
 * red neighbor) is visited at least once; every optimal clustering meets that
 * condition. Returns the number of clusterings visited.
 */
std::size_t enumerate_clusterings(const CorrelationGraph& g, std::size_t c,
                                  const std::function<bool(const Clustering&)>& visit,
                                  const SearchBudget& budget = {});

}  // namespace splitclust

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "splitclust/graph.hpp"

namespace splitclust {

// Blue star whose leaves are pairwise red. Weight = leaves - 1.
struct BadStar {
    VertexId center = 0;
    std::vector<VertexId> leaves;  // ascending, at least two

    std::size_t weight() const noexcept { return leaves.empty() ? 0 : leaves.size() - 1; }
    friend bool operator==(const BadStar&, const BadStar&) = default;
};

// Vertex-disjoint bad stars.
struct BadStarForest {
    std::vector<BadStar> stars;

    std::size_t weight() const noexcept;
    // Union of all centers and leaves, ascending.
    VertexSet vertices() const;
    friend bool operator==(const BadStarForest&, const BadStarForest&) = default;
};

// True iff `s` satisfies the bad star color constraints in g.
bool is_bad_star(const CorrelationGraph& g, const BadStar& s);

// (u, v, w) with uv and vw blue and uw red, all inside `within`; the
// lexicographically smallest such triple, so u < w and v is the center.
std::optional<std::tuple<VertexId, VertexId, VertexId>> find_bad_triangle(const CorrelationGraph& g,
                                                                          std::span<const VertexId> within);
std::optional<std::tuple<VertexId, VertexId, VertexId>> find_bad_triangle(const CorrelationGraph& g);

/**
 * Greedy inclusion-maximal bad star forest of a complete graph.
 *
 * Repeatedly takes the smallest bad triangle among the remaining vertices,
 * grows it by adding (ascending) remaining blue neighbors of the center that
 * are red to every leaf so far, and removes the star. Stops when the
 * remaining vertices induce a cluster graph.
 * Throws std::invalid_argument for incomplete graphs.
 */
BadStarForest maximal_bad_star_forest(const CorrelationGraph& g);

// weight(maximal_bad_star_forest(g)); never exceeds the optimal clustering cost.
std::size_t lower_bound(const CorrelationGraph& g);

}  // namespace splitclust

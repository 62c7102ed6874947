#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitclust/clustering.hpp"
#include "splitclust/graph.hpp"

namespace splitclust {

// Bipartite graph given by two vertex lists; edges reference list entries
// by value. The two sides may reuse ids, so covers report them separately.
struct BipartiteGraph {
    std::vector<VertexId> left;
    std::vector<VertexId> right;
    std::vector<std::pair<VertexId, VertexId>> edges;  // (left vertex, right vertex)
};

struct BipartiteCover {
    VertexSet left;
    VertexSet right;

    std::size_t size() const noexcept { return left.size() + right.size(); }
};

// Maximum matching by augmenting paths, then Koenig's construction: with Z
// the vertices reachable from unmatched left vertices along alternating
// paths, the cover is (left \ Z) + (right & Z). Throws std::invalid_argument
// if an edge names an undeclared vertex.
BipartiteCover bipartite_min_vertex_cover(const BipartiteGraph& b);

// Cost breakdown of one assembled simple solution.
struct GuessOutcome {
    std::optional<std::size_t> merged_clique;  // index into `cliques`; nullopt = empty guess
    std::vector<std::size_t> cover_sizes;      // |K_C| per clique, 0 for the merged one
    std::size_t cost = 0;
    Clustering assembled;
};

enum class ApproxPath { AlreadyClustered, Fallback, SimpleSolution };

struct ApproxReport {
    ApproxPath path = ApproxPath::AlreadyClustered;
    VertexSet forest_vertices;     // S
    std::vector<VertexSet> cliques;  // cliques of G - S
    std::vector<GuessOutcome> guesses;  // SimpleSolution path only, evaluation order
    std::size_t chosen = 0;             // index into guesses
    Clustering result;
    std::size_t cost = 0;
};

/**
 * Polynomial-time 7-approximation for complete graphs.
 *
 * S = vertices of a maximal bad star forest, cliques = G - S.
 *  - S empty: the cliques themselves, cost 0.
 *  - at most one clique: {v} for each v in S plus V, cost |S|.
 *  - otherwise, for each guess C* (each clique in order, then no clique):
 *    K_C = minimum vertex cover of the blue S-C edges for C != C*;
 *    X_S = S + C* + (K_C & C), X_C = C + (K_C & S), plus {v} for v in S.
 *    The cheapest guess wins; ties go to the earliest.
 *
 * Throws std::invalid_argument for incomplete or empty graphs.
 */
ApproxReport approximate_detailed(const CorrelationGraph& g);
Clustering approximate(const CorrelationGraph& g);

}  // namespace splitclust

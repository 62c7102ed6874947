#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitclust/clustering.hpp"
#include "splitclust/graph.hpp"

namespace splitclust {

// Multicut with Vertex Splitting instance: graph (n, edges), terminal pairs
// disjoint from the edges, and a split budget k. Pair lists are sorted and
// duplicate-free once validated.
struct MulticutInstance {
    std::size_t n = 0;
    std::vector<VertexPair> edges;
    std::vector<VertexPair> terminals;
    std::size_t k = 0;

    friend bool operator==(const MulticutInstance&, const MulticutInstance&) = default;
};

// Sorts and deduplicates the pair lists; throws std::invalid_argument on
// self-loops, out-of-range ids, or a terminal pair that is also an edge.
MulticutInstance normalized(MulticutInstance i);

// End state of exclusive vertex splits: every split vertex maps to a
// partition of its neighbor set into at least two nonempty parts. Parts are
// sorted and ordered by their smallest neighbor.
struct MulticutSolution {
    std::map<VertexId, std::vector<VertexSet>> splits;

    std::size_t cost() const;
    friend bool operator==(const MulticutSolution&, const MulticutSolution&) = default;
};

// Blue pairs become edges, red pairs terminals; neutral pairs vanish.
MulticutInstance ccvs_to_mcvs(const CorrelationGraph& g, std::size_t k);

// Edges become blue, terminals red, everything else neutral.
std::pair<CorrelationGraph, std::size_t> mcvs_to_ccvs(const MulticutInstance& i);

/**
 * True iff every terminal pair either has a split endpoint (the pair is then
 * dropped) or has its endpoints in different components of the split graph.
 * Throws std::invalid_argument for a malformed partition.
 */
bool verify_multicut_solution(const MulticutInstance& i, const MulticutSolution& sol);

/**
 * Multicut solution for ccvs_to_mcvs(g, cost(f)) with cost <= cost(f).
 *
 * Each split vertex routes every neighbor to the descendant of the first
 * cluster shared with that neighbor. Descendants left without neighbors are
 * dropped; a vertex whose neighbors all land on one descendant is split off
 * one neighbor instead, and a degree-one vertex is isolated by carving it out
 * of its neighbor. Throws std::invalid_argument if f is not valid for g.
 */
MulticutSolution clustering_to_multicut_solution(const CorrelationGraph& g, const Clustering& f);

/**
 * Valid clustering of mcvs_to_ccvs(i) with cost <= sol.cost(), obtained by
 * realizing the split graph as a correlation graph and reading it back with
 * splits_to_clustering. Throws std::invalid_argument if sol does not verify.
 */
Clustering multicut_solution_to_clustering(const MulticutInstance& i, const MulticutSolution& sol);

// ---------------------------------------------------------------------------
// mcvs / mcsol text formats
//
//   mcvs <n> <m> <t> <k>
//   e <u> <v>     (m lines)
//   t <u> <v>     (t lines)
//
//   mcsol <n>
//   s <v> : <part 1 ids> | <part 2 ids> | ...

MulticutInstance parse_multicut_instance(std::istream& in);
MulticutInstance parse_multicut_instance(std::string_view text);
void write_multicut_instance(const MulticutInstance& i, std::ostream& out);
std::string to_mcvs(const MulticutInstance& i);

// If `n` is non-null it receives the vertex count from the header.
MulticutSolution parse_multicut_solution(std::istream& in, std::size_t* n = nullptr);
MulticutSolution parse_multicut_solution(std::string_view text, std::size_t* n = nullptr);
void write_multicut_solution(const MulticutSolution& sol, std::size_t n, std::ostream& out);
std::string to_mcsol(const MulticutSolution& sol, std::size_t n);

}  // namespace splitclust

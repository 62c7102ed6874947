#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "splitclust/clustering.hpp"
#include "splitclust/detect.hpp"
#include "splitclust/graph.hpp"

namespace splitclust {

// One clique C_i of G - S after isolated cliques are gone, split into the
// marked core and the vertices deleted by the shrinking rule.
struct ShrunkCluster {
    VertexSet clique;
    VertexSet marked;
    VertexSet removed;

    friend bool operator==(const ShrunkCluster&, const ShrunkCluster&) = default;
};

// Everything needed to lift a kernel solution back to the input graph.
// All ids are original ids except where noted.
struct KernelTranscript {
    std::size_t original_n = 0;
    std::size_t budget = 0;
    BadStarForest forest;
    std::vector<VertexSet> removed_cliques;  // isolated blue cliques, in removal order
    std::vector<ShrunkCluster> clusters;     // ordered by smallest member
    std::vector<VertexId> id_map;            // kernel vertex -> original vertex

    VertexSet forest_vertices() const { return forest.vertices(); }
    friend bool operator==(const KernelTranscript&, const KernelTranscript&) = default;
};

struct NoInstance {
    BadStarForest witness;  // weight > budget
};

struct Kernel {
    CorrelationGraph graph;
    KernelTranscript transcript;
};

using KernelResult = std::variant<NoInstance, Kernel>;

// Vertex bound of a kernel for budget k: 24k^3 + 24k^2 + 3k.
std::size_t kernel_size_bound(std::size_t k);

// Deletes every blue component that is a clique with only red edges leaving
// it. Returns the reduced graph (vertices renumbered in ascending original
// order), the removed cliques (original ids, ascending by smallest member)
// and the surviving original ids.
struct IsolatedCliqueRemoval {
    CorrelationGraph graph;
    std::vector<VertexSet> removed;
    std::vector<VertexId> kept;
};
IsolatedCliqueRemoval rule_remove_isolated_cliques(const CorrelationGraph& g);

/**
 * Polynomial kernel for complete graphs with budget k.
 *
 *  1. Greedy maximal bad star forest T; NoInstance if weight(T) > k.
 *  2. Remove isolated blue cliques.
 *  3. G - S is a cluster graph; NoInstance if it has 4k+1 or more cliques
 *     (the witness is a forest of weight >= k+1 built from one blue edge per
 *     clique into S).
 *  4. For every clique C_i and every s in S (ascending) mark the k+1 lowest
 *     blue and the k+1 lowest red neighbors of s in C_i.
 *  5. Delete the unmarked vertices of every clique.
 *
 * Throws std::invalid_argument for incomplete graphs.
 */
KernelResult kernelize(const CorrelationGraph& g, std::size_t k);

/**
 * Maps a clustering of the kernel graph (cost <= budget) to a clustering of
 * the original graph with the same cost: every deleted vertex joins the first
 * cluster that holds its clique's marked core, and each isolated clique is
 * appended as its own cluster. Throws std::invalid_argument if no cluster
 * contains a marked core.
 */
Clustering lift_clustering(const Clustering& kernel_solution, const KernelTranscript& t);

// ---------------------------------------------------------------------------
// ktx text format
//
//   ktx <original_n> <k>
//   st <center> <leaves...>                     (one per forest star)
//   S <ids...>                                  (forest vertices)
//   rc <ids...>                                 (one per removed clique)
//   cl <clique ids> | <marked ids> | <removed ids>
//
// The kernel id map is implied: surviving original ids in ascending order.

KernelTranscript parse_transcript(std::istream& in);
KernelTranscript parse_transcript(std::string_view text);
void write_transcript(const KernelTranscript& t, std::ostream& out);
std::string to_ktx(const KernelTranscript& t);

}  // namespace splitclust

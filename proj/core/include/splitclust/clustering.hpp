#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "splitclust/graph.hpp"

namespace splitclust {

/**
 * An overlapping clustering: an ordered list of vertex subsets.
 *
 * The list is a multiset. Two entries with equal contents are still distinct
 * clusters, and a red pair counts as resolved whenever its endpoints sit in
 * clusters with different list indices. Each entry is kept sorted.
 */
struct Clustering {
    std::vector<VertexSet> clusters;

    std::size_t size() const noexcept { return clusters.size(); }
    friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Sorts every cluster; throws std::invalid_argument on an empty cluster or a
// vertex repeated inside one cluster.
Clustering normalized(Clustering f);

// sum over v < n of (#clusters containing v - 1). Throws std::invalid_argument
// if some vertex < n is in no cluster or a cluster holds an id >= n.
std::size_t cost(const Clustering& f, std::size_t n);

struct ValidationReport {
    std::vector<VertexPair> uncovered_blue;
    std::vector<VertexPair> unresolved_red;
    std::vector<VertexId> noncovering;

    bool ok() const noexcept { return uncovered_blue.empty() && unresolved_red.empty() && noncovering.empty(); }
};

// Checks covering, blue coverage and red resolution. Neutral pairs are never
// flagged. Throws std::invalid_argument for out-of-range ids.
ValidationReport verify_clustering(const CorrelationGraph& g, const Clustering& f);

// Human-readable violation list, one per line; empty for a valid clustering.
std::string describe(const ValidationReport& report);

/**
 * A graph obtained from an original graph by vertex splits, kept as its end
 * state: `base` is over descendants and `ancestor[d]` names the original
 * vertex of descendant d.
 */
struct RealizedGraph {
    CorrelationGraph base;
    std::vector<VertexId> ancestor;
    std::size_t original_n = 0;
    std::size_t split_count = 0;
};

// True iff some red pair has both endpoints in one blue component.
bool has_erroneous_cycle(const CorrelationGraph& g);

/**
 * Realizes a valid clustering as a split graph: one descendant per
 * (vertex, containing cluster) pair, numbered by vertex then cluster index.
 * Descendants assigned to a common cluster are joined blue, descendants in
 * different clusters red. For incomplete inputs, pairs of unsplit vertices
 * keep their original label and cross-cluster pairs of split descendants are
 * red only where the ancestor pair is red. Throws std::invalid_argument if
 * `f` is not a valid clustering of `g`.
 */
RealizedGraph clustering_to_splits(const CorrelationGraph& g, const Clustering& f);

/**
 * Reads a clustering back from a split graph without erroneous cycles: one
 * cluster per blue component (ancestor sets, identical sets kept once), then
 * a singleton {u} for every red ancestor pair that is still unresolved, placed
 * on the smaller split endpoint. Cost never exceeds r.split_count.
 * Throws std::invalid_argument if r.base has an erroneous cycle.
 */
Clustering splits_to_clustering(const RealizedGraph& r);

// ---------------------------------------------------------------------------
// clu text format
//
//   clustering <t>
//   c <v1> <v2> ...        (t lines, ids strictly increasing)

Clustering parse_clustering(std::istream& in);
Clustering parse_clustering(std::string_view text);
void write_clustering(const Clustering& f, std::ostream& out);
std::string to_clu(const Clustering& f);

}  // namespace splitclust

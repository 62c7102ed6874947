#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitclust {

using VertexId = std::uint32_t;

// Hard cap on the vertex count accepted by the parser and the builder.
inline constexpr std::size_t kMaxVertices = 100'000;

enum class EdgeColor : std::uint8_t { Neutral = 0, Blue = 1, Red = 2 };

char to_char(EdgeColor c);

// Unordered vertex pair, stored with u < v.
struct VertexPair {
    VertexId u = 0;
    VertexId v = 0;

    static VertexPair of(VertexId a, VertexId b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using VertexSet = std::vector<VertexId>;  // sorted, no duplicates unless stated otherwise

/**
 * A correlation graph G = (V, B, R) on dense vertex ids [0, n).
 *
 * Every unordered pair of distinct vertices carries exactly one label. In a
 * complete graph no pair is Neutral. Complete graphs keep a dense n*n label
 * table next to the adjacency lists; incomplete graphs keep only the sorted
 * blue/red adjacency lists and answer color() by binary search.
 *
 * Instances are immutable once built (see GraphBuilder).
 */
class CorrelationGraph {
public:
    CorrelationGraph() = default;

    std::size_t size() const noexcept { return blue_.size(); }
    bool is_complete() const noexcept { return complete_; }

    // Neutral for u == v.
    EdgeColor color(VertexId u, VertexId v) const;
    bool is_blue(VertexId u, VertexId v) const { return color(u, v) == EdgeColor::Blue; }
    bool is_red(VertexId u, VertexId v) const { return color(u, v) == EdgeColor::Red; }

    std::span<const VertexId> blue_neighbors(VertexId v) const { return blue_[v]; }
    std::span<const VertexId> red_neighbors(VertexId v) const { return red_[v]; }

    std::size_t blue_count() const noexcept { return blue_edges_; }
    std::size_t red_count() const noexcept { return red_edges_; }
    std::size_t neutral_count() const noexcept;

    // All Blue and Red pairs, sorted by (u, v).
    std::vector<std::pair<VertexPair, EdgeColor>> labeled_pairs() const;

    friend bool operator==(const CorrelationGraph& a, const CorrelationGraph& b) {
        return a.complete_ == b.complete_ && a.blue_ == b.blue_ && a.red_ == b.red_;
    }

private:
    friend class GraphBuilder;

    bool complete_ = true;
    std::vector<std::vector<VertexId>> blue_;
    std::vector<std::vector<VertexId>> red_;
    std::vector<EdgeColor> dense_;  // complete graphs only, row-major n*n
    std::size_t blue_edges_ = 0;
    std::size_t red_edges_ = 0;
};

/**
 * Collects labels and produces a validated CorrelationGraph.
 *
 * For complete graphs pairs that are never set default to Red; for incomplete
 * graphs they default to Neutral. Setting the same pair twice with different
 * colors, a self-loop, an out-of-range vertex, or Neutral on a complete graph
 * throws std::invalid_argument.
 */
class GraphBuilder {
public:
    GraphBuilder(std::size_t n, bool complete);

    GraphBuilder& set(VertexId u, VertexId v, EdgeColor c);
    GraphBuilder& blue(VertexId u, VertexId v) { return set(u, v, EdgeColor::Blue); }
    GraphBuilder& red(VertexId u, VertexId v) { return set(u, v, EdgeColor::Red); }

    CorrelationGraph build() const;

private:
    std::size_t n_;
    bool complete_;
    std::map<VertexPair, EdgeColor> labels_;
};

// Complete graph with the given blue pairs; every other pair red.
CorrelationGraph make_complete(std::size_t n, std::span<const VertexPair> blue_pairs);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
CorrelationGraph induced_subgraph(const CorrelationGraph& g, std::span<const VertexId> vertices);

// ---------------------------------------------------------------------------
// Blue-component structure

// Connected components of the blue subgraph. Each component is sorted and
// components are ordered by their smallest member.
std::vector<VertexSet> blue_components(const CorrelationGraph& g);

// Blue components of the subgraph induced by `restrict_to`, provided every
// one of them is a blue clique; std::nullopt otherwise. For complete graphs
// this is exactly "the induced subgraph is a cluster graph".
// Throws std::invalid_argument for out-of-range ids.
std::optional<std::vector<VertexSet>> cluster_decomposition(const CorrelationGraph& g,
                                                            std::span<const VertexId> restrict_to);

std::vector<VertexId> all_vertices(const CorrelationGraph& g);

// ---------------------------------------------------------------------------
// ccg text format
//
//   ccg <n> complete|incomplete
//   e <u> <v> b|r
//
// '#' starts a comment line; blank lines are ignored. Output is canonical:
// u < v, lines sorted by (u, v), complete graphs list only blue pairs.

CorrelationGraph parse_graph(std::istream& in);
CorrelationGraph parse_graph(std::string_view text);
void write_graph(const CorrelationGraph& g, std::ostream& out);
std::string to_ccg(const CorrelationGraph& g);

}  // namespace splitclust

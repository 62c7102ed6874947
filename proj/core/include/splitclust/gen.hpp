#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "splitclust/graph.hpp"
#include "splitclust/reduce.hpp"

namespace splitclust {

// Simple undirected graph, the source instance of the hardness gadgets.
struct PlainGraph {
    std::size_t n = 0;
    std::vector<VertexPair> edges;  // normalized, sorted, duplicate-free

    friend bool operator==(const PlainGraph&, const PlainGraph&) = default;
};

// Validates ids and self-loops, normalizes and sorts the edge list.
PlainGraph make_plain_graph(std::size_t n, std::vector<VertexPair> edges);

// DIMACS edge format, 1-based:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>
PlainGraph parse_dimacs(std::istream& in);
PlainGraph parse_dimacs(std::string_view text);
void write_dimacs(const PlainGraph& g, std::ostream& out);

// Complete graph on the vertices of g plus k+1 new vertices n..n+k: red on the
// edges of g, blue everywhere else. Solvable with budget k iff g has a vertex
// cover of size at most k.
CorrelationGraph gen_vertex_cover_gadget(const PlainGraph& g, std::size_t k);

// Apex a = n joined to every vertex; terminals are the edges of g; budget
// k-1. Yes iff g is k-colorable. Throws std::invalid_argument for k < 3.
MulticutInstance gen_coloring_gadget(const PlainGraph& g, std::size_t k);

// Every pair, in lexicographic order, draws one uniform double from a
// splitmix64 stream: below p_blue is blue, below p_blue + p_red is red,
// otherwise neutral (red when complete). Throws std::invalid_argument for
// probabilities outside [0,1], p_blue + p_red > 1, or a complete graph whose
// probabilities do not sum to 1.
CorrelationGraph gen_random(std::size_t n, double p_blue, double p_red, bool complete, std::uint64_t seed);

}  // namespace splitclust

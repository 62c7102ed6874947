#pragma once

#include <cstdint>
#include <vector>

#include "splitclust/gen.hpp"
#include "splitclust/graph.hpp"

namespace corpus {

// Seeded complete graphs with 3..max_n vertices, cycling through blue
// densities so that sparse, balanced and dense instances all appear.
inline std::vector<splitclust::CorrelationGraph> complete_graphs(std::size_t count, std::size_t max_n,
                                                                 std::uint64_t base_seed) {
    static constexpr double kDensities[] = {0.25, 0.4, 0.5, 0.6, 0.75};
    std::vector<splitclust::CorrelationGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 3 + i % (max_n - 2);
        const double p = kDensities[(i / (max_n - 2)) % 5];
        out.push_back(splitclust::gen_random(n, p, 1.0 - p, true, base_seed + i));
    }
    return out;
}

// Planted cluster graph with a few flipped pairs: a disjoint union of blue
// cliques, then `flips` pairs toggled between blue and red.
inline splitclust::CorrelationGraph planted(std::size_t n, std::size_t flips, std::uint64_t seed) {
    auto noise = splitclust::gen_random(n, 0.5, 0.5, true, seed);
    std::vector<std::size_t> label(n);
    for (std::size_t v = 0; v < n; ++v) label[v] = (v * 7 + seed) % (1 + n / 3);
    std::vector<splitclust::VertexPair> blue;
    std::size_t flipped = 0;
    for (splitclust::VertexId u = 0; u < n; ++u) {
        for (splitclust::VertexId v = u + 1; v < n; ++v) {
            bool b = label[u] == label[v];
            if (flipped < flips && noise.is_blue(u, v) && (u + v + seed) % 3 == 0) {
                b = !b;
                ++flipped;
            }
            if (b) blue.push_back({u, v});
        }
    }
    return splitclust::make_complete(n, blue);
}

// Seeded incomplete graphs with 3..max_n vertices.
inline std::vector<splitclust::CorrelationGraph> incomplete_graphs(std::size_t count, std::size_t max_n,
                                                                   std::uint64_t base_seed) {
    std::vector<splitclust::CorrelationGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 3 + i % (max_n - 2);
        const double pb = (i % 3 == 0) ? 0.5 : 0.4;
        const double pr = (i % 2 == 0) ? 0.3 : 0.4;
        out.push_back(splitclust::gen_random(n, pb, pr, false, base_seed + i));
    }
    return out;
}

}  // namespace corpus

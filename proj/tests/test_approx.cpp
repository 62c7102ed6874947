#include <gtest/gtest.h>

#include "splitclust/approx.hpp"
#include "splitclust/detect.hpp"
#include "splitclust/exact.hpp"
#include "splitclust/gen.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace splitclust;

TEST(Koenig, Examples) {
    // Left ids 10.., right ids 20.. to keep sides apart.
    EXPECT_EQ(bipartite_min_vertex_cover({{10}, {20, 21}, {{10, 20}, {10, 21}}}).left, (VertexSet{10}));
    EXPECT_EQ(bipartite_min_vertex_cover({{10, 11}, {20, 21}, {{10, 20}, {11, 21}}}).size(), 2u);
    const auto c = bipartite_min_vertex_cover({{10, 11}, {20, 21}, {{10, 20}, {10, 21}, {11, 21}}});
    EXPECT_EQ(c.size(), 2u);
}

TEST(Koenig, SidesMayShareIds) {
    const auto c = bipartite_min_vertex_cover({{0, 1}, {0, 1, 2}, {{0, 0}, {0, 1}, {0, 2}, {1, 1}}});
    EXPECT_EQ(c.size(), 2u);
    EXPECT_THROW(bipartite_min_vertex_cover({{0}, {1}, {{0, 2}}}), std::invalid_argument);
}

TEST(Koenig, MatchesBruteForce) {
    std::uint64_t state = 99;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int round = 0; round < 300; ++round) {
        const std::size_t l = 1 + next() % 6, r = 1 + next() % 6;
        BipartiteGraph b;
        for (VertexId i = 0; i < l; ++i) b.left.push_back(i);
        for (VertexId j = 0; j < r; ++j) b.right.push_back(100 + j);
        std::vector<std::pair<std::size_t, std::size_t>> raw;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (next() % 3 == 0) {
                    raw.emplace_back(i, j);
                    b.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(100 + j));
                }
        const auto cover = bipartite_min_vertex_cover(b);
        EXPECT_EQ(cover.size(), oracle::bipartite_min_cover_size(l, r, raw));
        for (const auto& [x, y] : b.edges)
            EXPECT_TRUE(std::binary_search(cover.left.begin(), cover.left.end(), x) ||
                        std::binary_search(cover.right.begin(), cover.right.end(), y));
    }
}

TEST(Approximate, Examples) {
    EXPECT_EQ(approximate(oracle::all_blue(4)).clusters, (std::vector<VertexSet>{{0, 1, 2, 3}}));

    const auto tri = oracle::bad_triangle();
    const auto f = approximate(tri);
    EXPECT_TRUE(verify_clustering(tri, f).ok());
    EXPECT_LE(cost(f, 3), 7u);

    const auto star = oracle::bad_star(3);
    const auto s = approximate(star);
    EXPECT_TRUE(verify_clustering(star, s).ok());
    EXPECT_LE(cost(s, 4), 14u);
}

TEST(Approximate, FallbackCostsExactlyS) {
    const auto star = oracle::bad_star(3);
    const auto report = approximate_detailed(star);
    EXPECT_EQ(report.path, ApproxPath::Fallback);
    EXPECT_EQ(report.cost, report.forest_vertices.size());
    EXPECT_EQ(cost(report.result, 4), report.forest_vertices.size());
    EXPECT_EQ(report.result.clusters.back(), (VertexSet{0, 1, 2, 3}));
}

TEST(Approximate, SimpleSolutionBookkeeping) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = gen_random(4 + seed % 8, 0.4, 0.6, true, seed);
        const auto report = approximate_detailed(g);
        EXPECT_TRUE(verify_clustering(g, report.result).ok()) << to_ccg(g);
        EXPECT_EQ(cost(report.result, g.size()), report.cost);
        if (report.path != ApproxPath::SimpleSolution) continue;
        ASSERT_EQ(report.guesses.size(), report.cliques.size() + 1);
        EXPECT_FALSE(report.guesses.back().merged_clique.has_value());
        for (const auto& guess : report.guesses) {
            std::size_t expected = report.forest_vertices.size();
            for (auto c : guess.cover_sizes) expected += c;
            EXPECT_EQ(guess.cost, expected);
            EXPECT_EQ(cost(guess.assembled, g.size()), guess.cost);
            EXPECT_TRUE(verify_clustering(g, guess.assembled).ok());
            EXPECT_GE(guess.cost, report.cost);
        }
        for (std::size_t i = 0; i < report.chosen; ++i) EXPECT_GT(report.guesses[i].cost, report.cost);
    }
}

TEST(Approximate, WithinFactorSevenOnSmallGraphs) {
    for (const auto& g : corpus::complete_graphs(150, 7, 4242)) {
        const auto opt = solve_exact(g);
        ASSERT_TRUE(opt);
        const auto f = approximate(g);
        EXPECT_TRUE(verify_clustering(g, f).ok());
        EXPECT_LE(cost(f, g.size()), 7 * cost(*opt, g.size()));
    }
}

TEST(Approximate, RejectsIncompleteOrEmpty) {
    EXPECT_THROW(approximate(GraphBuilder(2, false).build()), std::invalid_argument);
    EXPECT_THROW(approximate(GraphBuilder(0, true).build()), std::invalid_argument);
}

TEST(Approximate, SingleVertex) {
    EXPECT_EQ(approximate(GraphBuilder(1, true).build()).clusters, (std::vector<VertexSet>{{0}}));
}

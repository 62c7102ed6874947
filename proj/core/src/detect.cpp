#include "splitclust/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitclust {

std::size_t BadStarForest::weight() const noexcept {
    std::size_t w = 0;
    for (const auto& s : stars) w += s.weight();
    return w;
}

VertexSet BadStarForest::vertices() const {
    VertexSet out;
    for (const auto& s : stars) {
        out.push_back(s.center);
        out.insert(out.end(), s.leaves.begin(), s.leaves.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_bad_star(const CorrelationGraph& g, const BadStar& s) {
    if (s.leaves.size() < 2) return false;
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        if (!g.is_blue(s.center, s.leaves[i])) return false;
        for (std::size_t j = i + 1; j < s.leaves.size(); ++j)
            if (!g.is_red(s.leaves[i], s.leaves[j])) return false;
    }
    return true;
}

namespace {

std::optional<std::tuple<VertexId, VertexId, VertexId>> smallest_bad_triangle(const CorrelationGraph& g,
                                                                              const std::vector<char>& member) {
    for (VertexId u = 0; u < g.size(); ++u) {
        if (!member[u]) continue;
        for (VertexId v : g.blue_neighbors(u)) {
            if (!member[v]) continue;
            // Neighbor lists are sorted, so the first hit is the smallest w.
            for (VertexId w : g.blue_neighbors(v)) {
                if (w > u && member[w] && g.is_red(u, w)) return std::make_tuple(u, v, w);
            }
        }
    }
    return std::nullopt;
}

std::vector<char> membership(const CorrelationGraph& g, std::span<const VertexId> within) {
    std::vector<char> member(g.size(), 0);
    for (VertexId v : within) {
        if (v >= g.size()) throw std::invalid_argument("find_bad_triangle: vertex id out of range");
        member[v] = 1;
    }
    return member;
}

}  // namespace

std::optional<std::tuple<VertexId, VertexId, VertexId>> find_bad_triangle(const CorrelationGraph& g,
                                                                          std::span<const VertexId> within) {
    return smallest_bad_triangle(g, membership(g, within));
}

std::optional<std::tuple<VertexId, VertexId, VertexId>> find_bad_triangle(const CorrelationGraph& g) {
    return smallest_bad_triangle(g, std::vector<char>(g.size(), 1));
}

BadStarForest maximal_bad_star_forest(const CorrelationGraph& g) {
    if (!g.is_complete()) throw std::invalid_argument("maximal_bad_star_forest: graph must be complete");
    std::vector<char> remaining(g.size(), 1);
    BadStarForest forest;
    while (auto tri = smallest_bad_triangle(g, remaining)) {
        const auto [u, center, w] = *tri;
        BadStar star{center, {u, w}};
        for (VertexId x : g.blue_neighbors(center)) {
            if (!remaining[x] || x == u || x == w) continue;
            const bool red_to_all =
                std::all_of(star.leaves.begin(), star.leaves.end(), [&](VertexId l) { return g.is_red(l, x); });
            if (red_to_all) star.leaves.push_back(x);
        }
        std::sort(star.leaves.begin(), star.leaves.end());
        remaining[center] = 0;
        for (VertexId l : star.leaves) remaining[l] = 0;
        forest.stars.push_back(std::move(star));
    }
    return forest;
}

std::size_t lower_bound(const CorrelationGraph& g) { return maximal_bad_star_forest(g).weight(); }

}  // namespace splitclust

#include "splitclust/approx.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "splitclust/detect.hpp"

namespace splitclust {

namespace {

class Matcher {
public:
    explicit Matcher(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count)
        : adj_(adj), match_left_(adj.size(), kNone), match_right_(right_count, kNone) {}

    void run() {
        for (std::size_t x = 0; x < adj_.size(); ++x) {
            seen_.assign(match_right_.size(), 0);
            augment(x);
        }
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    const std::vector<std::size_t>& left_partner() const { return match_left_; }
    const std::vector<std::size_t>& right_partner() const { return match_right_; }

private:
    bool augment(std::size_t x) {
        for (std::size_t y : adj_[x]) {
            if (seen_[y]) continue;
            seen_[y] = 1;
            if (match_right_[y] == kNone || augment(match_right_[y])) {
                match_left_[x] = y;
                match_right_[y] = x;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<char> seen_;
};

}  // namespace

BipartiteCover bipartite_min_vertex_cover(const BipartiteGraph& b) {
    std::map<VertexId, std::size_t> left_index, right_index;
    for (std::size_t i = 0; i < b.left.size(); ++i) left_index.emplace(b.left[i], i);
    for (std::size_t i = 0; i < b.right.size(); ++i) right_index.emplace(b.right[i], i);

    std::vector<std::vector<std::size_t>> adj(b.left.size());
    for (const auto& [l, r] : b.edges) {
        auto li = left_index.find(l);
        auto ri = right_index.find(r);
        if (li == left_index.end() || ri == right_index.end())
            throw std::invalid_argument("bipartite_min_vertex_cover: edge references an undeclared vertex");
        adj[li->second].push_back(ri->second);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    Matcher matcher(adj, b.right.size());
    matcher.run();

    // Alternating reachability from unmatched left vertices.
    std::vector<char> left_reached(b.left.size(), 0), right_reached(b.right.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < b.left.size(); ++x) {
        if (matcher.left_partner()[x] == Matcher::kNone) {
            left_reached[x] = 1;
            stack.push_back(x);
        }
    }
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : adj[x]) {
            if (right_reached[y]) continue;
            right_reached[y] = 1;
            const std::size_t partner = matcher.right_partner()[y];
            if (partner != Matcher::kNone && !left_reached[partner]) {
                left_reached[partner] = 1;
                stack.push_back(partner);
            }
        }
    }

    BipartiteCover cover;
    for (std::size_t x = 0; x < b.left.size(); ++x)
        if (!left_reached[x]) cover.left.push_back(b.left[x]);
    for (std::size_t y = 0; y < b.right.size(); ++y)
        if (right_reached[y]) cover.right.push_back(b.right[y]);
    std::sort(cover.left.begin(), cover.left.end());
    std::sort(cover.right.begin(), cover.right.end());
    cover.left.erase(std::unique(cover.left.begin(), cover.left.end()), cover.left.end());
    cover.right.erase(std::unique(cover.right.begin(), cover.right.end()), cover.right.end());
    return cover;
}

namespace {

VertexSet sorted_union(VertexSet a, const VertexSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

ApproxReport approximate_detailed(const CorrelationGraph& g) {
    if (!g.is_complete()) throw std::invalid_argument("approximate: graph must be complete");
    if (g.size() == 0) throw std::invalid_argument("approximate: graph has no vertices");

    ApproxReport report;
    report.forest_vertices = maximal_bad_star_forest(g).vertices();
    const VertexSet& s = report.forest_vertices;

    std::vector<char> in_s(g.size(), 0);
    for (VertexId v : s) in_s[v] = 1;
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.size(); ++v)
        if (!in_s[v]) rest.push_back(v);
    auto cliques = cluster_decomposition(g, rest);
    if (!cliques) throw std::logic_error("approximate: G - S is not a cluster graph; forest is not maximal");
    report.cliques = std::move(*cliques);

    if (s.empty()) {
        report.path = ApproxPath::AlreadyClustered;
        report.result.clusters = report.cliques;
        report.cost = 0;
        return report;
    }

    if (report.cliques.size() <= 1) {
        report.path = ApproxPath::Fallback;
        for (VertexId v : s) report.result.clusters.push_back({v});
        report.result.clusters.push_back(all_vertices(g));
        report.cost = s.size();
        return report;
    }

    // Vertex cover of the blue edges between S and each clique.
    std::vector<BipartiteCover> covers;
    covers.reserve(report.cliques.size());
    for (const auto& clique : report.cliques) {
        BipartiteGraph b{s, clique, {}};
        for (VertexId sv : s)
            for (VertexId c : clique)
                if (g.is_blue(sv, c)) b.edges.emplace_back(sv, c);
        covers.push_back(bipartite_min_vertex_cover(b));
    }

    report.path = ApproxPath::SimpleSolution;
    const std::size_t p = report.cliques.size();
    for (std::size_t guess = 0; guess <= p; ++guess) {
        GuessOutcome outcome;
        if (guess < p) outcome.merged_clique = guess;

        VertexSet x_s = s;
        if (guess < p) x_s = sorted_union(x_s, report.cliques[guess]);
        std::vector<VertexSet> x_c;
        outcome.cover_sizes.assign(p, 0);
        std::size_t total = s.size();
        for (std::size_t i = 0; i < p; ++i) {
            if (i == guess) continue;
            outcome.cover_sizes[i] = covers[i].size();
            total += covers[i].size();
            x_s = sorted_union(std::move(x_s), covers[i].right);
            x_c.push_back(sorted_union(report.cliques[i], covers[i].left));
        }
        outcome.assembled.clusters.push_back(std::move(x_s));
        for (auto& c : x_c) outcome.assembled.clusters.push_back(std::move(c));
        for (VertexId v : s) outcome.assembled.clusters.push_back({v});
        outcome.cost = total;
        report.guesses.push_back(std::move(outcome));
    }

    report.chosen = 0;
    for (std::size_t i = 1; i < report.guesses.size(); ++i)
        if (report.guesses[i].cost < report.guesses[report.chosen].cost) report.chosen = i;
    report.result = report.guesses[report.chosen].assembled;
    report.cost = report.guesses[report.chosen].cost;
    return report;
}

Clustering approximate(const CorrelationGraph& g) { return approximate_detailed(g).result; }

}  // namespace splitclust

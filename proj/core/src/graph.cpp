#include "splitclust/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "splitclust/errors.hpp"
#include "splitclust/union_find.hpp"
#include "text_io.hpp"

namespace splitclust {

char to_char(EdgeColor c) {
    switch (c) {
        case EdgeColor::Blue: return 'b';
        case EdgeColor::Red: return 'r';
        case EdgeColor::Neutral: return 'n';
    }
    return '?';
}

EdgeColor CorrelationGraph::color(VertexId u, VertexId v) const {
    if (u == v) return EdgeColor::Neutral;
    if (complete_) return dense_[static_cast<std::size_t>(u) * size() + v];
    const auto& b = blue_[u];
    if (std::binary_search(b.begin(), b.end(), v)) return EdgeColor::Blue;
    const auto& r = red_[u];
    if (std::binary_search(r.begin(), r.end(), v)) return EdgeColor::Red;
    return EdgeColor::Neutral;
}

std::size_t CorrelationGraph::neutral_count() const noexcept {
    const std::size_t n = size();
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    return pairs - blue_edges_ - red_edges_;
}

std::vector<std::pair<VertexPair, EdgeColor>> CorrelationGraph::labeled_pairs() const {
    std::vector<std::pair<VertexPair, EdgeColor>> out;
    out.reserve(blue_edges_ + red_edges_);
    for (VertexId u = 0; u < size(); ++u) {
        // Merge the two sorted lists so the output stays ordered by v.
        auto b = blue_[u].begin();
        auto r = red_[u].begin();
        b = std::upper_bound(b, blue_[u].end(), u);
        r = std::upper_bound(r, red_[u].end(), u);
        while (b != blue_[u].end() || r != red_[u].end()) {
            if (r == red_[u].end() || (b != blue_[u].end() && *b < *r)) {
                out.push_back({{u, *b++}, EdgeColor::Blue});
            } else {
                out.push_back({{u, *r++}, EdgeColor::Red});
            }
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n, bool complete) : n_(n), complete_(complete) {
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kMaxVertices));
}

GraphBuilder& GraphBuilder::set(VertexId u, VertexId v, EdgeColor c) {
    if (u >= n_ || v >= n_)
        throw std::invalid_argument("vertex id out of range in pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (complete_ && c == EdgeColor::Neutral)
        throw std::invalid_argument("neutral pair {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} in a complete graph");
    auto [it, inserted] = labels_.emplace(VertexPair::of(u, v), c);
    if (!inserted && it->second != c)
        throw std::invalid_argument("conflicting colors for pair {" + std::to_string(it->first.u) + "," +
                                    std::to_string(it->first.v) + "}");
    return *this;
}

CorrelationGraph GraphBuilder::build() const {
    CorrelationGraph g;
    g.complete_ = complete_;
    g.blue_.assign(n_, {});
    g.red_.assign(n_, {});
    if (complete_) {
        g.dense_.assign(n_ * n_, EdgeColor::Red);
        for (std::size_t i = 0; i < n_; ++i) g.dense_[i * n_ + i] = EdgeColor::Neutral;
        for (const auto& [p, c] : labels_) {
            g.dense_[static_cast<std::size_t>(p.u) * n_ + p.v] = c;
            g.dense_[static_cast<std::size_t>(p.v) * n_ + p.u] = c;
        }
        for (VertexId u = 0; u < n_; ++u) {
            for (VertexId v = 0; v < n_; ++v) {
                if (u == v) continue;
                (g.dense_[static_cast<std::size_t>(u) * n_ + v] == EdgeColor::Blue ? g.blue_ : g.red_)[u].push_back(v);
            }
        }
    } else {
        for (const auto& [p, c] : labels_) {
            if (c == EdgeColor::Neutral) continue;
            auto& lists = c == EdgeColor::Blue ? g.blue_ : g.red_;
            lists[p.u].push_back(p.v);
            lists[p.v].push_back(p.u);
        }
        for (auto& l : g.blue_) std::sort(l.begin(), l.end());
        for (auto& l : g.red_) std::sort(l.begin(), l.end());
    }
    for (const auto& l : g.blue_) g.blue_edges_ += l.size();
    for (const auto& l : g.red_) g.red_edges_ += l.size();
    g.blue_edges_ /= 2;
    g.red_edges_ /= 2;
    return g;
}

CorrelationGraph make_complete(std::size_t n, std::span<const VertexPair> blue_pairs) {
    GraphBuilder b(n, true);
    for (const auto& p : blue_pairs) b.blue(p.u, p.v);
    return b.build();
}

CorrelationGraph induced_subgraph(const CorrelationGraph& g, std::span<const VertexId> vertices) {
    GraphBuilder b(vertices.size(), g.is_complete());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.size()) throw std::invalid_argument("induced_subgraph: vertex id out of range");
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const EdgeColor c = g.color(vertices[i], vertices[j]);
            if (c != EdgeColor::Neutral) b.set(static_cast<VertexId>(i), static_cast<VertexId>(j), c);
        }
    }
    return b.build();
}

std::vector<VertexId> all_vertices(const CorrelationGraph& g) {
    std::vector<VertexId> v(g.size());
    for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

namespace {

std::vector<VertexSet> components_within(const CorrelationGraph& g, std::span<const VertexId> subset,
                                         const std::vector<char>& member) {
    DisjointSets sets(g.size());
    for (VertexId u : subset)
        for (VertexId v : g.blue_neighbors(u))
            if (member[v]) sets.unite(u, v);

    std::vector<VertexSet> comps;
    std::vector<std::size_t> slot(g.size(), SIZE_MAX);
    std::vector<VertexId> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted) {
        const std::size_t root = sets.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].push_back(v);
    }
    return comps;
}

}  // namespace

std::vector<VertexSet> blue_components(const CorrelationGraph& g) {
    const auto all = all_vertices(g);
    return components_within(g, all, std::vector<char>(g.size(), 1));
}

std::optional<std::vector<VertexSet>> cluster_decomposition(const CorrelationGraph& g,
                                                            std::span<const VertexId> restrict_to) {
    std::vector<char> member(g.size(), 0);
    for (VertexId v : restrict_to) {
        if (v >= g.size()) throw std::invalid_argument("cluster_decomposition: vertex id out of range");
        member[v] = 1;
    }
    std::vector<VertexId> unique;
    for (VertexId v = 0; v < g.size(); ++v)
        if (member[v]) unique.push_back(v);

    auto comps = components_within(g, unique, member);
    for (const auto& c : comps) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.is_blue(c[i], c[j])) return std::nullopt;
    }
    return comps;
}

// ---------------------------------------------------------------------------
// ccg

CorrelationGraph parse_graph(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw format_error(0, "empty input, expected 'ccg <n> complete|incomplete'");
    if (tok.size() != 3 || tok[0] != "ccg") reader.fail("malformed header, expected 'ccg <n> complete|incomplete'");
    const std::uint64_t n = reader.parse_uint(tok[1], "vertex count");
    if (n > kMaxVertices) reader.fail("vertex count exceeds cap of " + std::to_string(kMaxVertices));
    bool complete = false;
    if (tok[2] == "complete") {
        complete = true;
    } else if (tok[2] != "incomplete") {
        reader.fail("expected 'complete' or 'incomplete', got '" + std::string(tok[2]) + "'");
    }

    GraphBuilder builder(n, complete);
    while (reader.next(tok)) {
        if (tok[0] != "e" || tok.size() != 4) reader.fail("expected 'e <u> <v> b|r'");
        const std::uint64_t u = reader.parse_uint(tok[1], "vertex");
        const std::uint64_t v = reader.parse_uint(tok[2], "vertex");
        if (u >= n || v >= n) reader.fail("vertex index out of range (n = " + std::to_string(n) + ")");
        if (u == v) reader.fail("self-loop on vertex " + std::to_string(u));
        EdgeColor c{};
        if (tok[3] == "b") {
            c = EdgeColor::Blue;
        } else if (tok[3] == "r") {
            c = EdgeColor::Red;
        } else if (tok[3] == "n") {
            if (complete) reader.fail("neutral pair listed in a complete graph");
            c = EdgeColor::Neutral;
        } else {
            reader.fail("unknown color '" + std::string(tok[3]) + "'");
        }
        try {
            builder.set(static_cast<VertexId>(u), static_cast<VertexId>(v), c);
        } catch (const std::invalid_argument& e) {
            reader.fail(e.what());
        }
    }
    return builder.build();
}

CorrelationGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void write_graph(const CorrelationGraph& g, std::ostream& out) {
    out << "ccg " << g.size() << (g.is_complete() ? " complete" : " incomplete") << '\n';
    for (const auto& [p, c] : g.labeled_pairs()) {
        if (g.is_complete() && c == EdgeColor::Red) continue;
        out << "e " << p.u << ' ' << p.v << ' ' << to_char(c) << '\n';
    }
}

std::string to_ccg(const CorrelationGraph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

}  // namespace splitclust

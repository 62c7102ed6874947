#include "splitclust/gen.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "text_io.hpp"

namespace splitclust {

namespace {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace

PlainGraph make_plain_graph(std::size_t n, std::vector<VertexPair> edges) {
    if (n > kMaxVertices) throw std::invalid_argument("plain graph: vertex count exceeds cap");
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("plain graph: self-loop on vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n) throw std::invalid_argument("plain graph: vertex id out of range");
        e = VertexPair::of(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlainGraph{n, std::move(edges)};
}

PlainGraph parse_dimacs(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    bool header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<VertexPair> edges;
    while (reader.next(tok)) {
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (header) reader.fail("duplicate problem line");
            if (tok.size() != 4 || tok[1] != "edge") reader.fail("expected 'p edge <n> <m>'");
            n = reader.parse_uint(tok[2], "vertex count");
            m = reader.parse_uint(tok[3], "edge count");
            if (n > kMaxVertices) reader.fail("vertex count exceeds cap");
            header = true;
        } else if (tok[0] == "e") {
            if (!header) reader.fail("edge before problem line");
            if (tok.size() != 3) reader.fail("expected 'e <u> <v>'");
            const auto u = reader.parse_uint(tok[1], "vertex");
            const auto v = reader.parse_uint(tok[2], "vertex");
            if (u < 1 || v < 1 || u > n || v > n) reader.fail("vertex index out of range (ids are 1-based)");
            if (u == v) reader.fail("self-loop");
            edges.push_back(VertexPair::of(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)));
        } else {
            reader.fail("unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) throw format_error(0, "missing 'p edge <n> <m>' line");
    if (edges.size() != m)
        throw format_error(0, "problem line declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
    return make_plain_graph(n, std::move(edges));
}

PlainGraph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

void write_dimacs(const PlainGraph& g, std::ostream& out) {
    out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

CorrelationGraph gen_vertex_cover_gadget(const PlainGraph& g, std::size_t k) {
    const PlainGraph src = make_plain_graph(g.n, g.edges);
    if (src.n + k + 1 > kMaxVertices) throw std::invalid_argument("vertex cover gadget: too many vertices");
    const std::size_t total = src.n + k + 1;
    GraphBuilder b(total, true);
    for (VertexId u = 0; u < total; ++u)
        for (VertexId v = u + 1; v < total; ++v)
            if (!std::binary_search(src.edges.begin(), src.edges.end(), VertexPair{u, v})) b.blue(u, v);
    return b.build();
}

MulticutInstance gen_coloring_gadget(const PlainGraph& g, std::size_t k) {
    if (k < 3) throw std::invalid_argument("coloring gadget: k must be at least 3");
    const PlainGraph src = make_plain_graph(g.n, g.edges);
    MulticutInstance i;
    i.n = src.n + 1;
    i.k = k - 1;
    const auto apex = static_cast<VertexId>(src.n);
    for (VertexId v = 0; v < src.n; ++v) i.edges.push_back(VertexPair::of(v, apex));
    i.terminals = src.edges;
    return normalized(std::move(i));
}

CorrelationGraph gen_random(std::size_t n, double p_blue, double p_red, bool complete, std::uint64_t seed) {
    auto valid = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
    if (!valid(p_blue) || !valid(p_red)) throw std::invalid_argument("gen_random: probabilities must lie in [0,1]");
    if (p_blue + p_red > 1.0 + 1e-12) throw std::invalid_argument("gen_random: p_blue + p_red exceeds 1");
    if (complete && std::abs(p_blue + p_red - 1.0) > 1e-12)
        throw std::invalid_argument("gen_random: complete graphs need p_blue + p_red = 1");
    if (n > kMaxVertices) throw std::invalid_argument("gen_random: vertex count exceeds cap");

    SplitMix64 rng(seed);
    GraphBuilder b(n, complete);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const double x = rng.uniform();
            if (x < p_blue)
                b.blue(u, v);
            else if (x < p_blue + p_red || complete)
                b.red(u, v);
        }
    }
    return b.build();
}

}  // namespace splitclust

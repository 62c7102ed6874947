#include "splitclust/clustering.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "splitclust/union_find.hpp"
#include "text_io.hpp"

namespace splitclust {

namespace {

// memberships[v] = ascending list indices of the clusters containing v.
std::vector<std::vector<std::size_t>> memberships(const Clustering& f, std::size_t n) {
    std::vector<std::vector<std::size_t>> in(n);
    for (std::size_t i = 0; i < f.clusters.size(); ++i) {
        for (VertexId v : f.clusters[i]) {
            if (v >= n)
                throw std::invalid_argument("cluster " + std::to_string(i) + " contains vertex " + std::to_string(v) +
                                            " outside [0, " + std::to_string(n) + ")");
            if (!in[v].empty() && in[v].back() == i)
                throw std::invalid_argument("cluster " + std::to_string(i) + " repeats vertex " + std::to_string(v));
            in[v].push_back(i);
        }
    }
    return in;
}

bool shares_cluster(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        *i < *j ? ++i : ++j;
    }
    return false;
}

bool resolves(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.empty() || b.empty()) return false;
    return !(a.size() == 1 && b.size() == 1 && a[0] == b[0]);
}

}  // namespace

Clustering normalized(Clustering f) {
    for (std::size_t i = 0; i < f.clusters.size(); ++i) {
        auto& c = f.clusters[i];
        if (c.empty()) throw std::invalid_argument("cluster " + std::to_string(i) + " is empty");
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw std::invalid_argument("cluster " + std::to_string(i) + " repeats a vertex");
    }
    return f;
}

std::size_t cost(const Clustering& f, std::size_t n) {
    const auto in = memberships(f, n);
    std::size_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v].empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no cluster");
        total += in[v].size() - 1;
    }
    return total;
}

ValidationReport verify_clustering(const CorrelationGraph& g, const Clustering& f) {
    const auto in = memberships(f, g.size());
    ValidationReport report;
    for (VertexId v = 0; v < g.size(); ++v)
        if (in[v].empty()) report.noncovering.push_back(v);
    for (const auto& [p, c] : g.labeled_pairs()) {
        if (c == EdgeColor::Blue) {
            if (!shares_cluster(in[p.u], in[p.v])) report.uncovered_blue.push_back(p);
        } else if (!resolves(in[p.u], in[p.v])) {
            report.unresolved_red.push_back(p);
        }
    }
    return report;
}

std::string describe(const ValidationReport& report) {
    std::ostringstream out;
    for (VertexId v : report.noncovering) out << "uncovered-vertex " << v << '\n';
    for (const auto& p : report.uncovered_blue) out << "uncovered-blue " << p.u << ' ' << p.v << '\n';
    for (const auto& p : report.unresolved_red) out << "unresolved-red " << p.u << ' ' << p.v << '\n';
    return out.str();
}

bool has_erroneous_cycle(const CorrelationGraph& g) {
    DisjointSets sets(g.size());
    for (VertexId u = 0; u < g.size(); ++u)
        for (VertexId v : g.blue_neighbors(u))
            if (u < v) sets.unite(u, v);
    for (VertexId u = 0; u < g.size(); ++u)
        for (VertexId v : g.red_neighbors(u))
            if (u < v && sets.same(u, v)) return true;
    return false;
}

RealizedGraph clustering_to_splits(const CorrelationGraph& g, const Clustering& f) {
    const auto report = verify_clustering(g, f);
    if (!report.ok()) throw std::invalid_argument("clustering_to_splits: invalid clustering\n" + describe(report));
    const auto in = memberships(f, g.size());

    RealizedGraph r;
    r.original_n = g.size();
    std::vector<std::size_t> assigned;  // cluster index of each descendant
    for (VertexId v = 0; v < g.size(); ++v) {
        for (std::size_t idx : in[v]) {
            r.ancestor.push_back(v);
            assigned.push_back(idx);
        }
    }
    const std::size_t d = r.ancestor.size();
    r.split_count = d - g.size();

    const bool complete = g.is_complete();
    GraphBuilder builder(d, complete);
    for (VertexId x = 0; x < d; ++x) {
        const VertexId a = r.ancestor[x];
        const bool a_split = in[a].size() > 1;
        for (VertexId y = x + 1; y < d; ++y) {
            const VertexId b = r.ancestor[y];
            const bool b_split = in[b].size() > 1;
            const EdgeColor original = g.color(a, b);
            if (assigned[x] == assigned[y]) {
                if (complete || a_split || b_split || original == EdgeColor::Blue) builder.blue(x, y);
            } else if (complete || original == EdgeColor::Red) {
                builder.red(x, y);
            }
        }
    }
    r.base = builder.build();
    return r;
}

Clustering splits_to_clustering(const RealizedGraph& r) {
    const std::size_t d = r.base.size();
    if (r.ancestor.size() != d) throw std::invalid_argument("splits_to_clustering: ancestor map size mismatch");
    std::vector<std::size_t> descendants(r.original_n, 0);
    for (VertexId a : r.ancestor) {
        if (a >= r.original_n) throw std::invalid_argument("splits_to_clustering: ancestor id out of range");
        ++descendants[a];
    }
    for (std::size_t v = 0; v < r.original_n; ++v)
        if (descendants[v] == 0)
            throw std::invalid_argument("splits_to_clustering: vertex " + std::to_string(v) + " has no descendant");
    if (has_erroneous_cycle(r.base))
        throw std::invalid_argument("splits_to_clustering: realized graph contains an erroneous cycle");

    Clustering f;
    std::set<VertexSet> seen;
    for (const auto& comp : blue_components(r.base)) {
        VertexSet ancestors;
        ancestors.reserve(comp.size());
        for (VertexId x : comp) ancestors.push_back(r.ancestor[x]);
        std::sort(ancestors.begin(), ancestors.end());
        ancestors.erase(std::unique(ancestors.begin(), ancestors.end()), ancestors.end());
        if (seen.insert(ancestors).second) f.clusters.push_back(std::move(ancestors));
    }

    std::set<VertexPair> red_ancestor_pairs;
    for (const auto& [p, c] : r.base.labeled_pairs()) {
        if (c != EdgeColor::Red) continue;
        const VertexId a = r.ancestor[p.u];
        const VertexId b = r.ancestor[p.v];
        if (a != b) red_ancestor_pairs.insert(VertexPair::of(a, b));
    }

    auto in = memberships(f, r.original_n);
    for (const auto& p : red_ancestor_pairs) {
        if (resolves(in[p.u], in[p.v])) continue;
        // Both endpoints sit in the same single cluster; one of them must have
        // been split, otherwise the red pair would close an erroneous cycle.
        VertexId target = p.u;
        if (descendants[p.u] < 2) {
            if (descendants[p.v] < 2)
                throw std::logic_error("splits_to_clustering: unresolved red pair between unsplit vertices");
            target = p.v;
        }
        in[target].push_back(f.clusters.size());
        f.clusters.push_back({target});
    }
    return f;
}

// ---------------------------------------------------------------------------
// clu

Clustering parse_clustering(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw format_error(0, "empty input, expected 'clustering <t>'");
    if (tok.size() != 2 || tok[0] != "clustering") reader.fail("malformed header, expected 'clustering <t>'");
    const std::uint64_t t = reader.parse_uint(tok[1], "cluster count");

    Clustering f;
    while (reader.next(tok)) {
        if (tok[0] != "c") reader.fail("expected 'c <v1> <v2> ...'");
        if (tok.size() < 2) reader.fail("empty cluster");
        VertexSet cluster;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const std::uint64_t v = reader.parse_uint(tok[i], "vertex");
            if (v >= kMaxVertices) reader.fail("vertex id exceeds cap");
            if (!cluster.empty() && v <= cluster.back()) reader.fail("vertex ids must be strictly increasing");
            cluster.push_back(static_cast<VertexId>(v));
        }
        f.clusters.push_back(std::move(cluster));
        if (f.clusters.size() > t) reader.fail("more clusters than declared");
    }
    if (f.clusters.size() != t)
        throw format_error(0, "declared " + std::to_string(t) + " clusters, found " + std::to_string(f.clusters.size()));
    return f;
}

Clustering parse_clustering(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_clustering(in);
}

void write_clustering(const Clustering& f, std::ostream& out) {
    out << "clustering " << f.clusters.size() << '\n';
    for (const auto& c : f.clusters) {
        out << 'c';
        for (VertexId v : c) out << ' ' << v;
        out << '\n';
    }
}

std::string to_clu(const Clustering& f) {
    std::ostringstream out;
    write_clustering(f, out);
    return out.str();
}

}  // namespace splitclust

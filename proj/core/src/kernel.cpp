#include "splitclust/kernel.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "text_io.hpp"

namespace splitclust {

std::size_t kernel_size_bound(std::size_t k) { return 24 * k * k * k + 24 * k * k + 3 * k; }

IsolatedCliqueRemoval rule_remove_isolated_cliques(const CorrelationGraph& g) {
    if (!g.is_complete()) throw std::invalid_argument("rule_remove_isolated_cliques: graph must be complete");
    IsolatedCliqueRemoval out;
    std::vector<char> gone(g.size(), 0);
    // A blue component has no blue edge leaving it, so in a complete graph it
    // is removable exactly when it is a blue clique.
    for (auto& comp : blue_components(g)) {
        bool clique = true;
        for (std::size_t i = 0; i < comp.size() && clique; ++i)
            if (g.blue_neighbors(comp[i]).size() != comp.size() - 1) clique = false;
        if (!clique) continue;
        for (VertexId v : comp) gone[v] = 1;
        out.removed.push_back(std::move(comp));
    }
    for (VertexId v = 0; v < g.size(); ++v)
        if (!gone[v]) out.kept.push_back(v);
    out.graph = induced_subgraph(g, out.kept);
    return out;
}

namespace {

// One blue edge from each clique into S; the edges grouped by their S
// endpoint form bad stars whenever a group has two or more leaves.
BadStarForest clique_count_witness(const CorrelationGraph& g, const std::vector<VertexSet>& cliques,
                                   const std::vector<char>& in_s) {
    std::map<VertexId, std::vector<VertexId>> leaves_by_center;
    for (const auto& clique : cliques) {
        bool picked = false;
        for (VertexId v : clique) {
            for (VertexId s : g.blue_neighbors(v)) {
                if (!in_s[s]) continue;
                leaves_by_center[s].push_back(v);
                picked = true;
                break;
            }
            if (picked) break;
        }
        if (!picked) throw std::logic_error("kernelize: clique without a blue edge into S survived rule 1");
    }
    BadStarForest witness;
    for (auto& [center, leaves] : leaves_by_center) {
        if (leaves.size() < 2) continue;
        std::sort(leaves.begin(), leaves.end());
        witness.stars.push_back({center, std::move(leaves)});
    }
    return witness;
}

}  // namespace

KernelResult kernelize(const CorrelationGraph& g, std::size_t k) {
    if (!g.is_complete()) throw std::invalid_argument("kernelize: graph must be complete");

    BadStarForest forest = maximal_bad_star_forest(g);
    if (forest.weight() > k) return NoInstance{std::move(forest)};

    const VertexSet s = forest.vertices();
    std::vector<char> in_s(g.size(), 0);
    for (VertexId v : s) in_s[v] = 1;

    auto isolated = rule_remove_isolated_cliques(g);
    std::vector<char> alive(g.size(), 0);
    for (VertexId v : isolated.kept) alive[v] = 1;

    std::vector<VertexId> outside_s;
    for (VertexId v : isolated.kept)
        if (!in_s[v]) outside_s.push_back(v);
    auto cliques = cluster_decomposition(g, outside_s);
    if (!cliques) throw std::logic_error("kernelize: G - S is not a cluster graph; forest is not maximal");

    if (cliques->size() >= 4 * k + 1) {
        BadStarForest witness = clique_count_witness(g, *cliques, in_s);
        if (witness.weight() <= k) throw std::logic_error("kernelize: clique-count witness too light");
        return NoInstance{std::move(witness)};
    }

    KernelTranscript t;
    t.original_n = g.size();
    t.budget = k;
    t.forest = std::move(forest);
    t.removed_cliques = std::move(isolated.removed);

    const std::size_t quota = k + 1;
    for (auto& clique : *cliques) {
        std::vector<char> in_clique(g.size(), 0);
        for (VertexId v : clique) in_clique[v] = 1;
        std::vector<char> marked(g.size(), 0);
        for (VertexId sv : s) {
            for (auto nbrs : {g.blue_neighbors(sv), g.red_neighbors(sv)}) {
                std::size_t taken = 0;
                for (VertexId v : nbrs) {
                    if (taken == quota) break;
                    if (!in_clique[v]) continue;
                    marked[v] = 1;
                    ++taken;
                }
            }
        }
        ShrunkCluster entry;
        for (VertexId v : clique) (marked[v] ? entry.marked : entry.removed).push_back(v);
        for (VertexId v : entry.removed) alive[v] = 0;
        entry.clique = std::move(clique);
        t.clusters.push_back(std::move(entry));
    }

    for (VertexId v = 0; v < g.size(); ++v)
        if (alive[v]) t.id_map.push_back(v);
    CorrelationGraph reduced = induced_subgraph(g, t.id_map);
    return Kernel{std::move(reduced), std::move(t)};
}

Clustering lift_clustering(const Clustering& kernel_solution, const KernelTranscript& t) {
    const std::size_t kernel_n = t.id_map.size();
    Clustering lifted;
    lifted.clusters.reserve(kernel_solution.clusters.size() + t.removed_cliques.size());
    for (const auto& c : kernel_solution.clusters) {
        VertexSet mapped;
        mapped.reserve(c.size());
        for (VertexId v : c) {
            if (v >= kernel_n) throw std::invalid_argument("lift_clustering: kernel vertex id out of range");
            mapped.push_back(t.id_map[v]);
        }
        std::sort(mapped.begin(), mapped.end());
        lifted.clusters.push_back(std::move(mapped));
    }

    const std::size_t kernel_clusters = lifted.clusters.size();
    for (const auto& entry : t.clusters) {
        if (entry.removed.empty()) continue;
        if (entry.marked.empty()) throw std::invalid_argument("lift_clustering: shrunk cluster without marked core");
        std::size_t host = kernel_clusters;
        for (std::size_t i = 0; i < kernel_clusters; ++i) {
            const auto& c = lifted.clusters[i];
            if (std::includes(c.begin(), c.end(), entry.marked.begin(), entry.marked.end())) {
                host = i;
                break;
            }
        }
        if (host == kernel_clusters)
            throw std::invalid_argument("lift_clustering: no cluster contains the marked core of the clique at vertex " +
                                        std::to_string(entry.clique.front()) +
                                        " (kernel solution invalid or over budget)");
        auto& c = lifted.clusters[host];
        c.insert(c.end(), entry.removed.begin(), entry.removed.end());
        std::sort(c.begin(), c.end());
    }
    for (const auto& clique : t.removed_cliques) lifted.clusters.push_back(clique);
    return lifted;
}

// ---------------------------------------------------------------------------
// ktx

namespace {

void write_ids(std::ostream& out, const VertexSet& ids) {
    for (VertexId v : ids) out << ' ' << v;
}

}  // namespace

void write_transcript(const KernelTranscript& t, std::ostream& out) {
    out << "ktx " << t.original_n << ' ' << t.budget << '\n';
    for (const auto& star : t.forest.stars) {
        out << "st " << star.center;
        write_ids(out, star.leaves);
        out << '\n';
    }
    out << 'S';
    write_ids(out, t.forest.vertices());
    out << '\n';
    for (const auto& rc : t.removed_cliques) {
        out << "rc";
        write_ids(out, rc);
        out << '\n';
    }
    for (const auto& cl : t.clusters) {
        out << "cl";
        write_ids(out, cl.clique);
        out << " |";
        write_ids(out, cl.marked);
        out << " |";
        write_ids(out, cl.removed);
        out << '\n';
    }
}

std::string to_ktx(const KernelTranscript& t) {
    std::ostringstream out;
    write_transcript(t, out);
    return out.str();
}

KernelTranscript parse_transcript(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw format_error(0, "empty input, expected 'ktx <original_n> <k>'");
    if (tok.size() != 3 || tok[0] != "ktx") reader.fail("malformed header, expected 'ktx <original_n> <k>'");

    KernelTranscript t;
    t.original_n = reader.parse_uint(tok[1], "original vertex count");
    t.budget = reader.parse_uint(tok[2], "budget");
    if (t.original_n > kMaxVertices) reader.fail("vertex count exceeds cap");

    std::vector<char> used(t.original_n, 0);
    auto read_id = [&](std::string_view token) {
        const auto v = reader.parse_uint(token, "vertex");
        if (v >= t.original_n) reader.fail("vertex id out of range");
        return static_cast<VertexId>(v);
    };
    auto read_set = [&](std::size_t from, std::size_t to) {
        VertexSet ids;
        for (std::size_t i = from; i < to; ++i) ids.push_back(read_id(tok[i]));
        if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            reader.fail("vertex ids must be strictly increasing");
        return ids;
    };
    auto claim = [&](const VertexSet& ids) {
        for (VertexId v : ids) {
            if (used[v]) reader.fail("vertex " + std::to_string(v) + " appears in two transcript entries");
            used[v] = 1;
        }
    };

    bool saw_s = false;
    while (reader.next(tok)) {
        if (tok[0] == "st") {
            if (tok.size() < 4) reader.fail("bad star needs a center and at least two leaves");
            BadStar star{read_id(tok[1]), read_set(2, tok.size())};
            t.forest.stars.push_back(std::move(star));
        } else if (tok[0] == "S") {
            if (saw_s) reader.fail("duplicate S line");
            saw_s = true;
            if (read_set(1, tok.size()) != t.forest.vertices()) reader.fail("S does not match the listed stars");
            claim(t.forest.vertices());
        } else if (tok[0] == "rc") {
            auto ids = read_set(1, tok.size());
            if (ids.empty()) reader.fail("empty removed clique");
            claim(ids);
            t.removed_cliques.push_back(std::move(ids));
        } else if (tok[0] == "cl") {
            std::vector<std::size_t> bars;
            for (std::size_t i = 1; i < tok.size(); ++i)
                if (tok[i] == "|") bars.push_back(i);
            if (bars.size() != 2) reader.fail("expected 'cl <clique> | <marked> | <removed>'");
            ShrunkCluster cl{read_set(1, bars[0]), read_set(bars[0] + 1, bars[1]), read_set(bars[1] + 1, tok.size())};
            VertexSet merged;
            std::set_union(cl.marked.begin(), cl.marked.end(), cl.removed.begin(), cl.removed.end(),
                           std::back_inserter(merged));
            if (merged != cl.clique || merged.size() != cl.marked.size() + cl.removed.size())
                reader.fail("marked and removed sets must partition the clique");
            claim(cl.clique);
            t.clusters.push_back(std::move(cl));
        } else {
            reader.fail("unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (!saw_s) throw format_error(0, "missing S line");

    std::vector<char> dropped(t.original_n, 0);
    for (const auto& rc : t.removed_cliques)
        for (VertexId v : rc) dropped[v] = 1;
    for (const auto& cl : t.clusters)
        for (VertexId v : cl.removed) dropped[v] = 1;
    for (VertexId v = 0; v < t.original_n; ++v)
        if (!dropped[v]) t.id_map.push_back(v);
    return t;
}

KernelTranscript parse_transcript(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_transcript(in);
}

}  // namespace splitclust

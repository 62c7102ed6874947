#include "splitclust/reduce.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "splitclust/union_find.hpp"
#include "text_io.hpp"

namespace splitclust {

namespace {

void normalize_pairs(std::vector<VertexPair>& pairs, std::size_t n, const char* what) {
    for (auto& p : pairs) {
        if (p.u == p.v) throw std::invalid_argument(std::string(what) + ": self-loop on vertex " + std::to_string(p.u));
        if (p.u >= n || p.v >= n) throw std::invalid_argument(std::string(what) + ": vertex id out of range");
        p = VertexPair::of(p.u, p.v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<VertexSet> adjacency(const MulticutInstance& i) {
    std::vector<VertexSet> adj(i.n);
    for (const auto& e : i.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

void order_parts(std::vector<VertexSet>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
}

// The graph after all splits. Unsplit vertex v owns node first_node[v];
// split vertex v owns first_node[v] + part index.
class SplitGraph {
public:
    SplitGraph(const MulticutInstance& i, const MulticutSolution& sol) : adj_(adjacency(i)) {
        first_node_.resize(i.n);
        part_of_.resize(i.n);
        std::size_t next = 0;
        for (VertexId v = 0; v < i.n; ++v) {
            first_node_[v] = next;
            auto it = sol.splits.find(v);
            if (it == sol.splits.end()) {
                ++next;
                continue;
            }
            check_partition(v, it->second);
            for (std::size_t p = 0; p < it->second.size(); ++p)
                for (VertexId u : it->second[p]) part_of_[v].emplace_back(u, p);
            std::sort(part_of_[v].begin(), part_of_[v].end());
            next += it->second.size();
        }
        node_count_ = next;
        for (auto& [v, parts] : sol.splits)
            if (v >= i.n) throw std::invalid_argument("multicut solution splits vertex " + std::to_string(v) + " >= n");
    }

    std::size_t node_count() const noexcept { return node_count_; }
    bool is_split(VertexId v) const { return !part_of_[v].empty(); }

    std::size_t node_count_of(VertexId v) const {
        const std::size_t end = v + 1 < first_node_.size() ? first_node_[v + 1] : node_count_;
        return end - first_node_[v];
    }

    // Node of v that carries the edge towards neighbor u.
    std::size_t node_towards(VertexId v, VertexId u) const {
        if (part_of_[v].empty()) return first_node_[v];
        auto it = std::lower_bound(part_of_[v].begin(), part_of_[v].end(), std::make_pair(u, std::size_t{0}));
        return first_node_[v] + it->second;
    }

    std::size_t first_node(VertexId v) const { return first_node_[v]; }

private:
    void check_partition(VertexId v, const std::vector<VertexSet>& parts) const {
        const std::string who = "split of vertex " + std::to_string(v);
        if (v >= adj_.size()) throw std::invalid_argument(who + ": vertex out of range");
        if (parts.size() < 2) throw std::invalid_argument(who + ": needs at least two parts");
        VertexSet all;
        for (const auto& p : parts) {
            if (p.empty()) throw std::invalid_argument(who + ": empty part");
            all.insert(all.end(), p.begin(), p.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument(who + ": parts overlap");
        if (all != adj_[v]) throw std::invalid_argument(who + ": parts do not partition the neighbor set");
    }

    std::vector<VertexSet> adj_;
    std::vector<std::size_t> first_node_;
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> part_of_;
    std::size_t node_count_ = 0;
};

}  // namespace

MulticutInstance normalized(MulticutInstance i) {
    normalize_pairs(i.edges, i.n, "multicut edges");
    normalize_pairs(i.terminals, i.n, "multicut terminals");
    std::vector<VertexPair> overlap;
    std::set_intersection(i.edges.begin(), i.edges.end(), i.terminals.begin(), i.terminals.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
        throw std::invalid_argument("terminal pair {" + std::to_string(overlap.front().u) + "," +
                                    std::to_string(overlap.front().v) + "} is also an edge");
    return i;
}

std::size_t MulticutSolution::cost() const {
    std::size_t total = 0;
    for (const auto& [v, parts] : splits) total += parts.empty() ? 0 : parts.size() - 1;
    return total;
}

MulticutInstance ccvs_to_mcvs(const CorrelationGraph& g, std::size_t k) {
    MulticutInstance i;
    i.n = g.size();
    i.k = k;
    for (const auto& [p, c] : g.labeled_pairs()) (c == EdgeColor::Blue ? i.edges : i.terminals).push_back(p);
    return i;
}

std::pair<CorrelationGraph, std::size_t> mcvs_to_ccvs(const MulticutInstance& i) {
    const MulticutInstance checked = normalized(i);
    GraphBuilder b(checked.n, false);
    for (const auto& e : checked.edges) b.blue(e.u, e.v);
    for (const auto& t : checked.terminals) b.red(t.u, t.v);
    return {b.build(), checked.k};
}

bool verify_multicut_solution(const MulticutInstance& i, const MulticutSolution& sol) {
    SplitGraph split(i, sol);
    DisjointSets sets(split.node_count());
    for (const auto& e : i.edges) sets.unite(split.node_towards(e.u, e.v), split.node_towards(e.v, e.u));
    for (const auto& t : i.terminals) {
        if (split.is_split(t.u) || split.is_split(t.v)) continue;
        if (sets.same(split.first_node(t.u), split.first_node(t.v))) return false;
    }
    return true;
}

MulticutSolution clustering_to_multicut_solution(const CorrelationGraph& g, const Clustering& f) {
    const auto report = verify_clustering(g, f);
    if (!report.ok())
        throw std::invalid_argument("clustering_to_multicut_solution: invalid clustering\n" + describe(report));

    std::vector<std::vector<std::size_t>> in(g.size());
    for (std::size_t idx = 0; idx < f.clusters.size(); ++idx)
        for (VertexId v : f.clusters[idx]) in[v].push_back(idx);

    auto first_shared = [&](VertexId a, VertexId b) {
        for (std::size_t x : in[a])
            if (std::binary_search(in[b].begin(), in[b].end(), x)) return x;
        throw std::logic_error("blue pair without a shared cluster");
    };

    MulticutSolution sol;
    std::vector<VertexId> isolate;  // degree-one split vertices
    for (VertexId v = 0; v < g.size(); ++v) {
        if (in[v].size() < 2) continue;
        const auto nbrs = g.blue_neighbors(v);
        std::map<std::size_t, VertexSet> groups;
        for (VertexId u : nbrs) groups[first_shared(v, u)].push_back(u);
        if (groups.size() >= 2) {
            auto& parts = sol.splits[v];
            for (auto& [idx, part] : groups) parts.push_back(std::move(part));
        } else if (nbrs.size() >= 2) {
            sol.splits[v] = {VertexSet{nbrs.front()}, VertexSet(nbrs.begin() + 1, nbrs.end())};
        } else if (nbrs.size() == 1) {
            isolate.push_back(v);
        }
    }
    for (VertexId v : isolate) {
        const VertexId a = g.blue_neighbors(v).front();
        auto it = sol.splits.find(a);
        if (it != sol.splits.end()) {
            for (auto& part : it->second) {
                auto pos = std::find(part.begin(), part.end(), v);
                if (pos == part.end()) continue;
                if (part.size() >= 2) {
                    part.erase(pos);
                    it->second.push_back({v});
                }
                break;
            }
        } else if (g.blue_neighbors(a).size() >= 2) {
            VertexSet rest;
            for (VertexId u : g.blue_neighbors(a))
                if (u != v) rest.push_back(u);
            sol.splits[a] = {VertexSet{v}, std::move(rest)};
        }
    }
    for (auto& [v, parts] : sol.splits) order_parts(parts);
    return sol;
}

Clustering multicut_solution_to_clustering(const MulticutInstance& i, const MulticutSolution& sol) {
    const MulticutInstance inst = normalized(i);
    if (!verify_multicut_solution(inst, sol))
        throw std::invalid_argument("multicut_solution_to_clustering: solution does not separate all terminal pairs");

    SplitGraph split(inst, sol);
    const std::size_t nodes = split.node_count();

    DisjointSets before(nodes);
    for (const auto& e : inst.edges) before.unite(split.node_towards(e.u, e.v), split.node_towards(e.v, e.u));

    // A split vertex whose descendants all ended up in one component keeps a
    // single descendant carrying every edge; the others stay isolated and
    // take its red pairs. Connectivity of everything else is unchanged.
    std::vector<char> collapsed(inst.n, 0);
    for (const auto& [v, parts] : sol.splits) {
        const std::size_t first = split.first_node(v);
        bool together = true;
        for (std::size_t p = 1; p < parts.size(); ++p) together = together && before.same(first, first + p);
        collapsed[v] = together;
    }
    auto node_towards = [&](VertexId v, VertexId u) {
        return collapsed[v] ? split.first_node(v) : split.node_towards(v, u);
    };

    RealizedGraph r;
    r.original_n = inst.n;
    r.ancestor.resize(nodes);
    for (VertexId v = 0; v < inst.n; ++v)
        for (std::size_t p = 0; p < split.node_count_of(v); ++p) r.ancestor[split.first_node(v) + p] = v;
    r.split_count = nodes - inst.n;

    GraphBuilder b(nodes, false);
    DisjointSets comps(nodes);
    for (const auto& e : inst.edges) {
        const auto x = node_towards(e.u, e.v);
        const auto y = node_towards(e.v, e.u);
        b.blue(static_cast<VertexId>(x), static_cast<VertexId>(y));
        comps.unite(x, y);
    }
    for (const auto& t : inst.terminals) {
        bool placed = false;
        for (std::size_t a = 0; a < split.node_count_of(t.u) && !placed; ++a) {
            for (std::size_t c = 0; c < split.node_count_of(t.v) && !placed; ++c) {
                const std::size_t x = split.first_node(t.u) + a;
                const std::size_t y = split.first_node(t.v) + c;
                if (comps.same(x, y)) continue;
                b.red(static_cast<VertexId>(x), static_cast<VertexId>(y));
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("multicut_solution_to_clustering: no separated descendant pair");
    }
    r.base = b.build();
    return splits_to_clustering(r);
}

// ---------------------------------------------------------------------------
// mcvs / mcsol

MulticutInstance parse_multicut_instance(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw format_error(0, "empty input, expected 'mcvs <n> <m> <t> <k>'");
    if (tok.size() != 5 || tok[0] != "mcvs") reader.fail("malformed header, expected 'mcvs <n> <m> <t> <k>'");
    MulticutInstance i;
    i.n = reader.parse_uint(tok[1], "vertex count");
    const std::uint64_t m = reader.parse_uint(tok[2], "edge count");
    const std::uint64_t t = reader.parse_uint(tok[3], "terminal count");
    i.k = reader.parse_uint(tok[4], "budget");
    if (i.n > kMaxVertices) reader.fail("vertex count exceeds cap");

    while (reader.next(tok)) {
        if (tok.size() != 3 || (tok[0] != "e" && tok[0] != "t")) reader.fail("expected 'e <u> <v>' or 't <u> <v>'");
        const auto u = reader.parse_uint(tok[1], "vertex");
        const auto v = reader.parse_uint(tok[2], "vertex");
        if (u >= i.n || v >= i.n) reader.fail("vertex index out of range");
        if (u == v) reader.fail("self-loop");
        (tok[0] == "e" ? i.edges : i.terminals).push_back(VertexPair::of(static_cast<VertexId>(u), static_cast<VertexId>(v)));
    }
    if (i.edges.size() != m || i.terminals.size() != t)
        throw format_error(0, "header declares " + std::to_string(m) + " edges and " + std::to_string(t) +
                                  " terminal pairs, found " + std::to_string(i.edges.size()) + " and " +
                                  std::to_string(i.terminals.size()));
    try {
        return normalized(std::move(i));
    } catch (const std::invalid_argument& e) {
        throw format_error(0, e.what());
    }
}

MulticutInstance parse_multicut_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_multicut_instance(in);
}

void write_multicut_instance(const MulticutInstance& i, std::ostream& out) {
    out << "mcvs " << i.n << ' ' << i.edges.size() << ' ' << i.terminals.size() << ' ' << i.k << '\n';
    for (const auto& e : i.edges) out << "e " << e.u << ' ' << e.v << '\n';
    for (const auto& t : i.terminals) out << "t " << t.u << ' ' << t.v << '\n';
}

std::string to_mcvs(const MulticutInstance& i) {
    std::ostringstream out;
    write_multicut_instance(i, out);
    return out.str();
}

MulticutSolution parse_multicut_solution(std::istream& in, std::size_t* n_out) {
    detail::LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok)) throw format_error(0, "empty input, expected 'mcsol <n>'");
    if (tok.size() != 2 || tok[0] != "mcsol") reader.fail("malformed header, expected 'mcsol <n>'");
    const std::uint64_t n = reader.parse_uint(tok[1], "vertex count");
    if (n > kMaxVertices) reader.fail("vertex count exceeds cap");

    MulticutSolution sol;
    while (reader.next(tok)) {
        if (tok.size() < 3 || tok[0] != "s" || tok[2] != ":") reader.fail("expected 's <v> : <ids> | <ids> ...'");
        const auto v = reader.parse_uint(tok[1], "vertex");
        if (v >= n) reader.fail("vertex index out of range");
        if (sol.splits.count(static_cast<VertexId>(v))) reader.fail("vertex split twice");
        std::vector<VertexSet> parts(1);
        for (std::size_t j = 3; j < tok.size(); ++j) {
            if (tok[j] == "|") {
                parts.emplace_back();
                continue;
            }
            const auto u = reader.parse_uint(tok[j], "neighbor");
            if (u >= n) reader.fail("neighbor index out of range");
            parts.back().push_back(static_cast<VertexId>(u));
        }
        for (const auto& p : parts)
            if (p.empty()) reader.fail("empty part");
        order_parts(parts);
        sol.splits.emplace(static_cast<VertexId>(v), std::move(parts));
    }
    if (n_out) *n_out = n;
    return sol;
}

MulticutSolution parse_multicut_solution(std::string_view text, std::size_t* n) {
    std::istringstream in{std::string(text)};
    return parse_multicut_solution(in, n);
}

void write_multicut_solution(const MulticutSolution& sol, std::size_t n, std::ostream& out) {
    out << "mcsol " << n << '\n';
    for (const auto& [v, parts] : sol.splits) {
        out << "s " << v << " :";
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (p > 0) out << " |";
            for (VertexId u : parts[p]) out << ' ' << u;
        }
        out << '\n';
    }
}

std::string to_mcsol(const MulticutSolution& sol, std::size_t n) {
    std::ostringstream out;
    write_multicut_solution(sol, n, out);
    return out.str();
}

}  // namespace splitclust

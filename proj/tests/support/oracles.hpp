#pragma once

// Brute-force reference implementations used by the tests. Everything here is
// written from the problem definitions directly and shares no code with the
// library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "splitclust/clustering.hpp"
#include "splitclust/gen.hpp"
#include "splitclust/graph.hpp"
#include "splitclust/reduce.hpp"

namespace oracle {

using splitclust::Clustering;
using splitclust::CorrelationGraph;
using splitclust::EdgeColor;
using splitclust::MulticutInstance;
using splitclust::MulticutSolution;
using splitclust::PlainGraph;
using splitclust::VertexId;
using splitclust::VertexPair;
using splitclust::VertexSet;

// ---------------------------------------------------------------------------
// Clustering validity straight from the definitions.

inline bool valid_clustering(const CorrelationGraph& g, const Clustering& f) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> where(n);
    for (std::size_t i = 0; i < f.clusters.size(); ++i) {
        if (f.clusters[i].empty()) return false;
        for (VertexId v : f.clusters[i]) {
            if (v >= n) return false;
            where[v].push_back(i);
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (where[v].empty()) return false;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const EdgeColor c = g.color(u, v);
            if (c == EdgeColor::Blue) {
                bool shared = false;
                for (auto i : where[u])
                    for (auto j : where[v]) shared = shared || i == j;
                if (!shared) return false;
            } else if (c == EdgeColor::Red) {
                bool apart = false;
                for (auto i : where[u])
                    for (auto j : where[v]) apart = apart || i != j;
                if (!apart) return false;
            }
        }
    }
    return true;
}

inline std::size_t clustering_cost(const Clustering& f, std::size_t n) {
    std::size_t total = 0;
    for (const auto& c : f.clusters) total += c.size();
    return total - n;
}

// Minimum cost over all multisets of nonempty subsets whose sizes sum to
// n + c, for increasing c. Only practical for n <= 5 and small costs.
inline std::optional<std::size_t> naive_min_cost(const CorrelationGraph& g, std::size_t max_cost) {
    const std::size_t n = g.size();
    std::vector<VertexSet> subsets;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        VertexSet s;
        for (VertexId v = 0; v < n; ++v)
            if (m >> v & 1) s.push_back(v);
        subsets.push_back(s);
    }
    for (std::size_t c = 0; c <= max_cost; ++c) {
        const std::size_t target = n + c;
        Clustering f;
        bool found = false;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t total) {
            if (found) return;
            if (total == target) {
                found = valid_clustering(g, f);
                return;
            }
            for (std::size_t i = from; i < subsets.size() && !found; ++i) {
                if (total + subsets[i].size() > target) continue;
                f.clusters.push_back(subsets[i]);
                rec(i, total + subsets[i].size());
                f.clusters.pop_back();
            }
        };
        rec(0, 0);
        if (found) return c;
    }
    return std::nullopt;
}

// Every valid clustering of cost exactly c as a sorted list of clusters
// (multisets of subsets, so each appears once). n <= 5.
inline std::set<std::vector<VertexSet>> naive_clusterings_of_cost(const CorrelationGraph& g, std::size_t c) {
    const std::size_t n = g.size();
    std::vector<VertexSet> subsets;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        VertexSet s;
        for (VertexId v = 0; v < n; ++v)
            if (m >> v & 1) s.push_back(v);
        subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end());
    std::set<std::vector<VertexSet>> out;
    Clustering f;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t total) {
        if (total == n + c) {
            if (valid_clustering(g, f)) out.insert(f.clusters);
            return;
        }
        for (std::size_t i = from; i < subsets.size(); ++i) {
            if (total + subsets[i].size() > n + c) continue;
            f.clusters.push_back(subsets[i]);
            rec(i, total + subsets[i].size());
            f.clusters.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Plain graph problems.

inline std::size_t min_vertex_cover(const PlainGraph& g) {
    std::size_t best = g.n;
    for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
        bool ok = true;
        for (const auto& e : g.edges) ok = ok && ((m >> e.u & 1) || (m >> e.v & 1));
        if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
    }
    return best;
}

inline bool colorable(const PlainGraph& g, std::size_t k) {
    std::vector<std::size_t> color(g.n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) {
        if (v == g.n) return true;
        for (std::size_t c = 0; c < k; ++c) {
            bool ok = true;
            for (const auto& e : g.edges) {
                const std::size_t other = e.u == v ? e.v : e.v == v ? e.u : g.n;
                if (other < v && color[other] == c) ok = false;
            }
            if (!ok) continue;
            color[v] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// Every non-isomorphic simple graph on n vertices (n <= 5), as the lexically
// smallest edge mask of its isomorphism class.
inline std::vector<PlainGraph> nonisomorphic_graphs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::vector<VertexId>> perms;
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == a && pairs[i].second == b) return i;
        return pairs.size();
    };
    std::set<std::uint32_t> canon;
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        std::uint32_t best = m;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (m >> i & 1) image |= 1u << index_of(perm[pairs[i].first], perm[pairs[i].second]);
            best = std::min(best, image);
        }
        canon.insert(best);
    }
    std::vector<PlainGraph> out;
    for (std::uint32_t m : canon) {
        PlainGraph g{n, {}};
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1) g.edges.push_back(VertexPair{pairs[i].first, pairs[i].second});
        out.push_back(g);
    }
    return out;
}

inline PlainGraph complete_plain(std::size_t n) {
    PlainGraph g{n, {}};
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.edges.push_back(VertexPair{u, v});
    return g;
}

inline PlainGraph cycle_plain(std::size_t n) {
    PlainGraph g{n, {}};
    for (VertexId v = 0; v < n; ++v) g.edges.push_back(VertexPair::of(v, static_cast<VertexId>((v + 1) % n)));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// ---------------------------------------------------------------------------
// Bipartite vertex cover by subset enumeration.

inline std::size_t bipartite_min_cover_size(std::size_t left, std::size_t right,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const std::size_t total = left + right;
    std::size_t best = total;
    for (std::uint32_t m = 0; m < (1u << total); ++m) {
        bool ok = true;
        for (const auto& [l, r] : edges) ok = ok && ((m >> l & 1) || (m >> (left + r) & 1));
        if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Multicut with vertex splitting, straight from the problem statement.

// Visits every partition of `items` into nonempty blocks.
inline void set_partitions(const VertexSet& items, const std::function<void(const std::vector<VertexSet>&)>& visit) {
    std::vector<VertexSet> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == items.size()) {
            visit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(items[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({items[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

inline bool multicut_separates(const MulticutInstance& inst, const std::map<VertexId, std::vector<VertexSet>>& splits) {
    // Node ids: unsplit vertex v -> (v, 0); split vertex v -> (v, part).
    std::map<std::pair<VertexId, std::size_t>, std::size_t> id;
    auto node = [&](VertexId v, VertexId towards) {
        std::size_t part = 0;
        auto it = splits.find(v);
        if (it != splits.end())
            for (std::size_t p = 0; p < it->second.size(); ++p)
                if (std::find(it->second[p].begin(), it->second[p].end(), towards) != it->second[p].end()) part = p;
        auto key = std::make_pair(v, part);
        auto [pos, fresh] = id.emplace(key, id.size());
        return pos->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (const auto& e : inst.edges) links.emplace_back(node(e.u, e.v), node(e.v, e.u));
    for (VertexId v = 0; v < inst.n; ++v) node(v, static_cast<VertexId>(inst.n));  // own node even if isolated
    std::vector<std::size_t> comp(id.size());
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : links) {
            const auto m = std::min(comp[a], comp[b]);
            if (comp[a] != m || comp[b] != m) {
                comp[a] = comp[b] = m;
                changed = true;
            }
        }
    }
    for (const auto& t : inst.terminals) {
        if (splits.count(t.u) || splits.count(t.v)) continue;
        if (comp[id.at({t.u, 0})] == comp[id.at({t.v, 0})]) return false;
    }
    return true;
}

// A minimum set of exclusive splits (parts nonempty) separating all terminal
// pairs, searched up to max_cost; nullopt if more are needed.
inline std::optional<MulticutSolution> multicut_optimum(const MulticutInstance& inst, std::size_t max_cost) {
    std::vector<VertexSet> nbrs(inst.n);
    for (const auto& e : inst.edges) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    for (auto& a : nbrs) std::sort(a.begin(), a.end());
    std::vector<std::vector<std::vector<VertexSet>>> options(inst.n);
    for (VertexId v = 0; v < inst.n; ++v)
        set_partitions(nbrs[v], [&](const std::vector<VertexSet>& p) {
            if (p.size() >= 2) options[v].push_back(p);
        });

    for (std::size_t c = 0; c <= max_cost; ++c) {
        std::map<VertexId, std::vector<VertexSet>> splits;
        bool found = false;
        std::function<void(VertexId, std::size_t)> rec = [&](VertexId v, std::size_t left) {
            if (found) return;
            if (v == inst.n) {
                if (left == 0) found = multicut_separates(inst, splits);
                return;
            }
            rec(v + 1, left);
            for (const auto& p : options[v]) {
                if (found) return;
                if (p.size() - 1 > left) continue;
                splits[v] = p;
                rec(v + 1, left - (p.size() - 1));
                if (!found) splits.erase(v);
            }
        };
        rec(0, c);
        if (found) {
            MulticutSolution sol;
            for (auto& [v, parts] : splits) {
                for (auto& part : parts) std::sort(part.begin(), part.end());
                std::sort(parts.begin(), parts.end());
                sol.splits[v] = parts;
            }
            return sol;
        }
    }
    return std::nullopt;
}

inline std::optional<std::size_t> multicut_min_cost(const MulticutInstance& inst, std::size_t max_cost) {
    const auto sol = multicut_optimum(inst, max_cost);
    if (!sol) return std::nullopt;
    std::size_t c = 0;
    for (const auto& [v, parts] : sol->splits) c += parts.size() - 1;
    return c;
}

// ---------------------------------------------------------------------------
// Small graph fixtures.

inline CorrelationGraph complete_from(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> blue) {
    std::vector<VertexPair> pairs;
    for (auto [u, v] : blue) pairs.push_back(VertexPair::of(u, v));
    return splitclust::make_complete(n, pairs);
}

inline CorrelationGraph bad_triangle() { return complete_from(3, {{0, 1}, {1, 2}}); }

// Center 0, leaves 1..leaves.
inline CorrelationGraph bad_star(std::size_t leaves) {
    std::vector<VertexPair> pairs;
    for (VertexId v = 1; v <= leaves; ++v) pairs.push_back(VertexPair{0, v});
    return splitclust::make_complete(leaves + 1, pairs);
}

inline CorrelationGraph all_blue(std::size_t n) {
    std::vector<VertexPair> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back(VertexPair{u, v});
    return splitclust::make_complete(n, pairs);
}

// Largest blue cliques by exhaustive search over subsets (n <= 12).
inline std::vector<VertexSet> maximal_blue_cliques(const CorrelationGraph& g, std::size_t min_size) {
    const std::size_t n = g.size();
    std::vector<VertexSet> out;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (static_cast<std::size_t>(__builtin_popcount(m)) < min_size) continue;
        VertexSet s;
        for (VertexId v = 0; v < n; ++v)
            if (m >> v & 1) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.is_blue(s[i], s[j]);
        if (!clique) continue;
        bool maximal = true;
        for (VertexId v = 0; v < n && maximal; ++v) {
            if (m >> v & 1) continue;
            bool extends = true;
            for (VertexId u : s) extends = extends && g.is_blue(u, v);
            if (extends) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace oracle

#include "splitclust/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitclust/detect.hpp"
#include "splitclust/errors.hpp"

namespace splitclust {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

// Placement order: greedily take the vertex with the most labeled pairs
// towards already placed vertices, so pair checks fire early.
std::vector<VertexId> placement_order(const CorrelationGraph& g) {
    const std::size_t n = g.size();
    std::vector<VertexId> order;
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> towards(n, 0), blue_towards(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId best = 0;
        bool have = false;
        for (VertexId v = 0; v < n; ++v) {
            if (placed[v]) continue;
            auto key = [&](VertexId x) {
                const std::size_t degree = g.blue_neighbors(x).size() + g.red_neighbors(x).size();
                return std::make_tuple(towards[x], blue_towards[x], degree);
            };
            if (!have || key(v) > key(best)) {
                best = v;
                have = true;
            }
        }
        placed[best] = 1;
        order.push_back(best);
        for (VertexId u : g.blue_neighbors(best)) {
            ++towards[u];
            ++blue_towards[u];
        }
        for (VertexId u : g.red_neighbors(best)) ++towards[u];
    }
    return order;
}

// Cluster indices live in a 64-bit mask, so n + cost <= 64.
std::size_t searchable_cost(std::size_t n, const SearchBudget& budget) {
    return n >= kMaskBits ? 0 : std::min(budget.max_cost, kMaskBits - n);
}

class Search {
public:
    using Visitor = std::function<bool(const Clustering&)>;

    Search(const CorrelationGraph& g, const SearchBudget& budget) : g_(g), limit_(budget.node_limit) {
        const std::size_t n = g.size();
        if (n > budget.max_vertices)
            throw resource_exhausted("exact solver: " + std::to_string(n) + " vertices exceed the cap of " +
                                     std::to_string(budget.max_vertices));
        if (n + searchable_cost(n, budget) > kMaskBits)
            throw std::invalid_argument("exact solver: vertex count plus cost must stay within 64");

        order_ = placement_order(g);
        position_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
        cap_.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            const std::size_t blue = g.blue_neighbors(v).size();
            cap_[v] = g.red_neighbors(v).empty() ? std::max<std::size_t>(blue, 1) : std::max<std::size_t>(blue, 2);
        }
        earlier_blue_.resize(n);
        earlier_red_.resize(n);
        later_.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : g.blue_neighbors(v))
                (position_[u] < position_[v] ? earlier_blue_[v] : later_[v]).push_back(u);
            for (VertexId u : g.red_neighbors(v))
                (position_[u] < position_[v] ? earlier_red_[v] : later_[v]).push_back(u);
        }
    }

    // Runs one depth-first search with total cost at most `max_cost`
    // (exactly `max_cost` when `exact_cost` is set). Returns false if the
    // visitor stopped the search.
    bool run(std::size_t max_cost, bool exact_cost, const Visitor& visit) {
        const std::size_t n = g_.size();
        members_.assign(n + max_cost + 1, 0);
        clusters_of_.assign(n, 0);
        multiplicity_.assign(n, 0);
        cluster_count_ = 0;
        exact_cost_ = exact_cost;
        visit_ = &visit;
        stopped_ = false;
        place(0, max_cost);
        return !stopped_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void tick() {
        if (++nodes_ > limit_)
            throw resource_exhausted("exact solver: node limit of " + std::to_string(limit_) + " exceeded");
    }

    // Clusters every not-yet-placed vertex is forced into by its placed
    // single-cluster blue neighbors; summed excess is a cost lower bound.
    std::size_t forced_excess(std::size_t from) const {
        std::size_t excess = 0;
        for (std::size_t i = from; i < order_.size(); ++i) {
            const VertexId w = order_[i];
            Mask forced = 0, red_single = 0;
            for (VertexId u : g_.blue_neighbors(w))
                if (multiplicity_[u] == 1) forced |= clusters_of_[u];
            for (VertexId u : g_.red_neighbors(w))
                if (multiplicity_[u] == 1) red_single |= clusters_of_[u];
            std::size_t need = std::max<std::size_t>(1, std::popcount(forced));
            if (need == 1 && (forced & red_single)) need = 2;
            excess += need - 1;
        }
        return excess;
    }

    void place(std::size_t pos, std::size_t budget_left) {
        if (stopped_) return;
        if (pos == order_.size()) {
            if (exact_cost_ && budget_left != 0) return;
            emit();
            return;
        }
        if (forced_excess(pos) > budget_left) return;

        const VertexId v = order_[pos];
        Mask forced = 0;
        for (VertexId u : earlier_blue_[v])
            if (multiplicity_[u] == 1) forced |= clusters_of_[u];
        const std::size_t forced_count = std::popcount(forced);
        const std::size_t max_m = std::min(cap_[v], budget_left + 1);
        for (std::size_t m = std::max<std::size_t>(1, forced_count); m <= max_m && !stopped_; ++m) {
            multiplicity_[v] = static_cast<unsigned>(m);
            choose(pos, v, m, 0, 0, forced, budget_left - (m - 1));
        }
        multiplicity_[v] = 0;
    }

    // Picks `remaining` more cluster indices >= `next` for v. Indices equal to
    // cluster_count_ open a new cluster.
    void choose(std::size_t pos, VertexId v, std::size_t remaining, std::size_t next, Mask chosen, Mask forced,
                std::size_t budget_left) {
        if (stopped_) return;
        tick();
        if (remaining == 0) {
            if ((forced & ~chosen) != 0) return;
            if (!pairs_ok(v, chosen)) return;
            clusters_of_[v] = chosen;
            place(pos + 1, budget_left);
            clusters_of_[v] = 0;
            return;
        }
        // Skipping a forced index can never be repaired later.
        const Mask forced_ahead = forced & ~chosen & (next >= kMaskBits ? 0 : ~Mask{0} << next);
        const std::size_t last = forced_ahead ? static_cast<std::size_t>(std::countr_zero(forced_ahead))
                                              : cluster_count_;
        const bool single = multiplicity_[v] == 1;
        for (std::size_t idx = next; idx <= std::min(last, cluster_count_) && !stopped_; ++idx) {
            const Mask bit = Mask{1} << idx;
            if (idx == cluster_count_) {
                ++cluster_count_;
                members_[idx] |= Mask{1} << v;
                choose(pos, v, remaining - 1, idx + 1, chosen | bit, forced, budget_left);
                members_[idx] &= ~(Mask{1} << v);
                --cluster_count_;
            } else {
                if (single && red_single_in(v, idx)) continue;
                members_[idx] |= Mask{1} << v;
                choose(pos, v, remaining - 1, idx + 1, chosen | bit, forced, budget_left);
                members_[idx] &= ~(Mask{1} << v);
            }
        }
    }

    bool red_single_in(VertexId v, std::size_t idx) const {
        for (VertexId u : earlier_red_[v])
            if (multiplicity_[u] == 1 && (clusters_of_[u] >> idx & 1)) return true;
        return false;
    }

    bool pairs_ok(VertexId v, Mask chosen) const {
        for (VertexId u : earlier_blue_[v])
            if ((clusters_of_[u] & chosen) == 0) return false;
        if (multiplicity_[v] == 1) {
            for (VertexId u : earlier_red_[v])
                if (multiplicity_[u] == 1 && clusters_of_[u] == chosen) return false;
        }
        return true;
    }

    void emit() {
        Clustering f;
        f.clusters.reserve(cluster_count_);
        for (std::size_t i = 0; i < cluster_count_; ++i) {
            VertexSet c;
            for (Mask m = members_[i]; m; m &= m - 1) c.push_back(static_cast<VertexId>(std::countr_zero(m)));
            f.clusters.push_back(std::move(c));
        }
        if (!(*visit_)(f)) stopped_ = true;
    }

    const CorrelationGraph& g_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;

    std::vector<VertexId> order_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> cap_;
    std::vector<std::vector<VertexId>> earlier_blue_, earlier_red_, later_;

    std::vector<Mask> members_;      // per cluster index: vertex bitmask
    std::vector<Mask> clusters_of_;  // per vertex: cluster-index bitmask
    std::vector<unsigned> multiplicity_;
    std::size_t cluster_count_ = 0;
    bool exact_cost_ = false;
    bool stopped_ = false;
    const Visitor* visit_ = nullptr;
};

}  // namespace

std::optional<Clustering> solve_exact(const CorrelationGraph& g, const SearchBudget& budget) {
    Search search(g, budget);
    const std::size_t start = g.is_complete() ? lower_bound(g) : 0;
    const std::size_t reachable = searchable_cost(g.size(), budget);
    for (std::size_t c = start; c <= reachable; ++c) {
        std::optional<Clustering> found;
        search.run(c, false, [&](const Clustering& f) {
            found = f;
            return false;
        });
        if (found) return found;
    }
    if (reachable < budget.max_cost && start <= budget.max_cost)
        throw resource_exhausted("exact solver: cost above " + std::to_string(reachable) + " is not searchable");
    return std::nullopt;
}

bool decide(const CorrelationGraph& g, std::size_t k, std::uint64_t node_limit, std::size_t max_vertices) {
    SearchBudget budget{k, node_limit, max_vertices};
    return solve_exact(g, budget).has_value();
}

std::size_t enumerate_clusterings(const CorrelationGraph& g, std::size_t c,
                                  const std::function<bool(const Clustering&)>& visit,
                                  const SearchBudget& budget) {
    SearchBudget b = budget;
    b.max_cost = c;
    if (g.size() + c > kMaskBits) throw std::invalid_argument("enumerate_clusterings: n + c must stay within 64");
    Search search(g, b);
    std::size_t count = 0;
    search.run(c, true, [&](const Clustering& f) {
        ++count;
        return visit(f);
    });
    return count;
}

}  // namespace splitclust

// Degree-bounded orientation construction. Feasibility of "every p-set has
// unordered degree at most k at positions 1..p" reduces to a bipartite
// flow: edges on the left (supply 1), occurring p-sets on the right
// (capacity k), adjacency by containment. A saturating flow yields the
// orientation; otherwise the p-sets reachable in the residual network form
// a family violating the Hall-type counting condition.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperorient/combinatorics.hpp"
#include "hyperorient/hypergraph.hpp"
#include "hyperorient/maxflow.hpp"

namespace hyperorient {

struct HallCertificate {
    bool feasible;
    std::optional<Orientation> orientation;
    std::optional<std::vector<std::vector<int>>> witness;
    std::uint64_t witness_edges = 0;
    std::uint64_t witness_bound = 0;
};

struct HallCheck {
    bool holds;
    std::optional<std::vector<std::vector<int>>> witness;
    std::uint64_t witness_edges = 0;
    std::uint64_t witness_bound = 0;
};

// The bipartite network behind every solve. Right nodes are created in
// first-occurrence order (edges in input order, each edge's p-subsets in
// colex order), which fixes node numbering and hence all tie-breaking.
class MatchingNetwork {
public:
    MatchingNetwork(const UniformHypergraph& G, int p, std::int64_t right_capacity)
        : graph_(&G), p_(p) {
        if (p < 1 || p > G.r()) throw std::invalid_argument("p must satisfy 1 <= p <= r");
        if (right_capacity < 0) throw std::invalid_argument("negative capacity");
        const int m = G.m();
        edge_psets_.resize(m);
        for (int i = 0; i < m; ++i) {
            for (const auto& sub : psubsets(G.edge(i), p)) {
                auto it = pset_index_.find(sub);
                int id;
                if (it == pset_index_.end()) {
                    id = static_cast<int>(psets_.size());
                    pset_index_.emplace(sub, id);
                    psets_.push_back(sub);
                } else {
                    id = it->second;
                }
                edge_psets_[i].push_back(id);
            }
        }
        const int R = static_cast<int>(psets_.size());
        source_ = 0;
        sink_ = 1 + m + R;
        flow_.emplace(2 + m + R);
        arcs_.resize(m);
        for (int i = 0; i < m; ++i) {
            flow_->add_edge(source_, left_node(i), 1);
            for (int id : edge_psets_[i])
                arcs_[i].push_back(flow_->add_edge(left_node(i), right_node(id), 1));
        }
        for (int id = 0; id < R; ++id)
            flow_->add_edge(right_node(id), sink_, right_capacity);
    }

    // Total flow after augmenting to the maximum; equals the number of
    // matched edges.
    std::int64_t solve() { return flow_->max_flow(source_, sink_); }

    int left_count() const { return graph_->m(); }
    const std::vector<std::vector<int>>& right_psets() const { return psets_; }

    // Index into right_psets() of the p-set edge i was matched to.
    std::optional<int> matched_pset_of(int edge) const {
        for (std::size_t j = 0; j < arcs_[edge].size(); ++j)
            if (flow_->flow_on(arcs_[edge][j]) > 0)
                return edge_psets_[edge][j];
        return std::nullopt;
    }

    // Right p-sets reachable from the source in the residual network.
    std::vector<std::vector<int>> reachable_right() const {
        auto seen = flow_->min_cut_reachable(source_);
        std::vector<std::vector<int>> out;
        for (std::size_t id = 0; id < psets_.size(); ++id)
            if (seen[right_node(static_cast<int>(id))]) out.push_back(psets_[id]);
        return out;
    }

private:
    int left_node(int edge) const { return 1 + edge; }
    int right_node(int pset_id) const { return 1 + graph_->m() + pset_id; }

    const UniformHypergraph* graph_;
    int p_;
    std::vector<std::vector<int>> psets_;
    std::map<std::vector<int>, int> pset_index_;
    std::vector<std::vector<int>> edge_psets_;
    std::vector<std::vector<MaxFlow::EdgeRef>> arcs_;
    std::optional<MaxFlow> flow_;
    int source_ = 0;
    int sink_ = 0;
};

namespace orient_detail {

// Count edges all of whose p-subsets lie in U, and check the violation
// strictly exceeds the capacity bound.
inline std::pair<std::uint64_t, std::uint64_t> witness_counts(
    const UniformHypergraph& G, int p, const std::vector<std::vector<int>>& U,
    std::uint64_t per_set_capacity) {
    std::set<std::vector<int>> family(U.begin(), U.end());
    std::uint64_t inside = 0;
    for (const auto& e : G.edges()) {
        bool all_in = true;
        for (const auto& sub : psubsets(e, p))
            if (!family.count(sub)) {
                all_in = false;
                break;
            }
        if (all_in) ++inside;
    }
    return {inside, per_set_capacity * U.size()};
}

inline std::vector<int> ordered_row(const std::vector<int>& edge,
                                    const std::vector<int>& front) {
    std::vector<int> row = front;
    for (int v : edge)
        if (std::find(front.begin(), front.end(), v) == front.end()) row.push_back(v);
    return row;
}

inline HallCertificate infeasible_certificate(const UniformHypergraph& G, int p,
                                              MatchingNetwork& net,
                                              std::uint64_t per_set_capacity) {
    HallCertificate cert;
    cert.feasible = false;
    auto U = net.reachable_right();
    auto [inside, bound] = witness_counts(G, p, U, per_set_capacity);
    if (inside <= bound)
        throw std::logic_error("residual cut did not produce a violating family");
    cert.witness = std::move(U);
    cert.witness_edges = inside;
    cert.witness_bound = bound;
    return cert;
}

}  // namespace orient_detail

// Orientation with degree_unordered(D, A, {1..p}) <= k for every p-set A,
// or a family U with more than k|U| edges inside it.
inline HallCertificate orient_bounded(const UniformHypergraph& G, int p, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    MatchingNetwork net(G, p, k);
    const std::int64_t value = net.solve();
    if (value < G.m())
        return orient_detail::infeasible_certificate(G, p, net, k);
    std::vector<std::vector<int>> order;
    order.reserve(G.m());
    for (int i = 0; i < G.m(); ++i) {
        auto matched = net.matched_pset_of(i);
        if (!matched) throw std::logic_error("saturated edge without a matched p-set");
        order.push_back(orient_detail::ordered_row(G.edge(i), net.right_psets()[*matched]));
    }
    HallCertificate cert;
    cert.feasible = true;
    cert.orientation = Orientation(G, std::move(order));
    return cert;
}

// Feasibility only; same flow, no orientation materialized.
inline HallCheck check_hall(const UniformHypergraph& G, int p, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    MatchingNetwork net(G, p, k);
    HallCheck result;
    result.holds = net.solve() == G.m();
    if (!result.holds) {
        auto U = net.reachable_right();
        auto [inside, bound] = orient_detail::witness_counts(G, p, U, k);
        if (inside <= bound)
            throw std::logic_error("residual cut did not produce a violating family");
        result.witness = std::move(U);
        result.witness_edges = inside;
        result.witness_bound = bound;
    }
    return result;
}

// Orientation with degree_ordered(D, A, (1..p)) <= k for every p-tuple A.
// Runs the unordered flow at capacity k*p!, then distributes each p-set's
// matched edges round-robin over the p! orderings of that p-set.
inline HallCertificate orient_bounded_ordered(const UniformHypergraph& G, int p, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (p < 1 || p > G.r()) throw std::invalid_argument("p must satisfy 1 <= p <= r");
    const std::int64_t cap = static_cast<std::int64_t>(k) *
                             static_cast<std::int64_t>(factorial(p));
    MatchingNetwork net(G, p, cap);
    const std::int64_t value = net.solve();
    if (value < G.m())
        return orient_detail::infeasible_certificate(
            G, p, net, static_cast<std::uint64_t>(cap));

    // Orderings of each matched p-set, assigned in edge order.
    std::vector<std::uint64_t> next_ordering(net.right_psets().size(), 0);
    const std::uint64_t pfact = factorial(p);
    std::vector<std::vector<int>> order;
    order.reserve(G.m());
    for (int i = 0; i < G.m(); ++i) {
        auto matched = net.matched_pset_of(i);
        if (!matched) throw std::logic_error("saturated edge without a matched p-set");
        std::vector<int> front = net.right_psets()[*matched];
        std::uint64_t turn = next_ordering[*matched]++ % pfact;
        for (std::uint64_t t = 0; t < turn; ++t)
            std::next_permutation(front.begin(), front.end());
        order.push_back(orient_detail::ordered_row(G.edge(i), front));
    }
    HallCertificate cert;
    cert.feasible = true;
    cert.orientation = Orientation(G, std::move(order));
    return cert;
}

// Every edge in ascending order; gives each p-tuple a guaranteed zero
// ordered degree (descending positions for ascending tuples, ascending
// positions otherwise).
inline Orientation orient_increasing(const UniformHypergraph& G) {
    return Orientation(G, G.edges());
}

}  // namespace hyperorient

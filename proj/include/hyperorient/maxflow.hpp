// Dinic max-flow on an explicit residual graph. Deterministic: arcs are
// explored in insertion order, so repeated runs produce identical flows and
// identical residual reachability.
#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hyperorient {

class MaxFlow {
public:
    struct EdgeRef {
        int from;
        int index;
    };

    explicit MaxFlow(int node_count) : adj_(node_count) {
        if (node_count < 2) throw std::invalid_argument("network needs at least 2 nodes");
    }

    int node_count() const { return static_cast<int>(adj_.size()); }

    EdgeRef add_edge(int from, int to, std::int64_t cap) {
        check_node(from);
        check_node(to);
        if (cap < 0) throw std::invalid_argument("negative capacity");
        adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
        adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
        return {from, static_cast<int>(adj_[from].size()) - 1};
    }

    std::int64_t flow_on(EdgeRef e) const {
        const Arc& arc = adj_.at(e.from).at(e.index);
        return adj_[arc.to][arc.rev].cap;
    }

    std::int64_t max_flow(int source, int sink) {
        check_node(source);
        check_node(sink);
        if (source == sink) throw std::invalid_argument("source equals sink");
        std::int64_t total = 0;
        while (bfs(source, sink)) {
            iter_.assign(adj_.size(), 0);
            while (std::int64_t pushed = dfs(source, sink, INT64_MAX)) total += pushed;
        }
        return total;
    }

    // Nodes reachable from `source` along residual arcs with remaining
    // capacity; after max_flow this is the source side of a minimum cut.
    std::vector<char> min_cut_reachable(int source) const {
        check_node(source);
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> queue;
        seen[source] = 1;
        queue.push(source);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (const Arc& a : adj_[u]) {
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
        int rev;
    };

    void check_node(int v) const {
        if (v < 0 || v >= static_cast<int>(adj_.size()))
            throw std::invalid_argument("node id out of range");
    }

    bool bfs(int source, int sink) {
        level_.assign(adj_.size(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (const Arc& a : adj_[u]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[u] + 1;
                    queue.push(a.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    std::int64_t dfs(int u, int sink, std::int64_t limit) {
        if (u == sink) return limit;
        for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            Arc& a = adj_[u][i];
            if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
            std::int64_t pushed = dfs(a.to, sink, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                adj_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace hyperorient

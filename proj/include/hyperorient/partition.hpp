// Per-edge ordering under forbidden position assignments, and the two
// partition-to-orientation pipelines built on top of it: the zero-degree
// pipeline (every labeled p-set ends with degree 0 at its label) and the
// bounded pipeline (pure-label subgraphs solved by flow, the rest by
// order-avoiding search).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperorient/combinatorics.hpp"
#include "hyperorient/errors.hpp"
#include "hyperorient/hypergraph.hpp"
#include "hyperorient/orient.hpp"

namespace hyperorient {

// Total map from p-subsets A of [r] to forbidden position sets I_A.
class ForbiddenAssignment {
public:
    ForbiddenAssignment(int r, int p, std::vector<std::vector<int>> labels_by_rank)
        : r_(r), p_(p), labels_(std::move(labels_by_rank)) {
        if (p_ < 1 || p_ > r_) throw std::invalid_argument("p must satisfy 1 <= p <= r");
        if (labels_.size() != binomial(r_, p_))
            throw std::invalid_argument("assignment must cover all " +
                                        std::to_string(binomial(r_, p_)) + " p-subsets");
        for (auto& label : labels_) {
            if (static_cast<int>(label.size()) != p_)
                throw std::invalid_argument("label size differs from p");
            std::sort(label.begin(), label.end());
            if (!all_distinct(label) || label.front() < 1 || label.back() > r_)
                throw std::invalid_argument("label is not a p-subset of [r]");
        }
    }

    static ForbiddenAssignment from_pairs(
        int r, int p,
        const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
        std::vector<std::vector<int>> by_rank(binomial(r, p));
        std::vector<char> filled(by_rank.size(), 0);
        for (auto [domain, label] : pairs) {
            std::sort(domain.begin(), domain.end());
            auto rank = colex_rank(domain);
            if (rank >= by_rank.size() || domain.back() > r ||
                static_cast<int>(domain.size()) != p || !all_distinct(domain) ||
                domain.front() < 1)
                throw std::invalid_argument("domain entry is not a p-subset of [r]");
            if (filled[rank]) throw std::invalid_argument("duplicate domain entry");
            filled[rank] = 1;
            by_rank[rank] = std::move(label);
        }
        for (char f : filled)
            if (!f) throw std::invalid_argument("assignment leaves some p-subset unmapped");
        return ForbiddenAssignment(r, p, std::move(by_rank));
    }

    int r() const { return r_; }
    int p() const { return p_; }
    const std::vector<std::vector<int>>& labels() const { return labels_; }

    const std::vector<int>& label_of(std::vector<int> A) const {
        std::sort(A.begin(), A.end());
        return labels_.at(colex_rank(A));
    }

    bool constant() const {
        for (const auto& label : labels_)
            if (label != labels_.front()) return false;
        return true;
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> as_pairs() const {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        auto domains = all_psubsets(r_, p_);
        for (std::size_t i = 0; i < domains.size(); ++i)
            out.emplace_back(domains[i], labels_[i]);
        return out;
    }

private:
    int r_;
    int p_;
    std::vector<std::vector<int>> labels_;
};

struct OrderAvoidingResult {
    std::optional<std::vector<int>> sigma;
    bool all_equal;
};

namespace partition_detail {

// p-subsets of [r] whose maximum is exactly v, with their colex ranks;
// checking these right after sigma(v) is assigned covers each subset once.
inline std::vector<std::vector<std::pair<std::vector<int>, std::size_t>>>
psubsets_by_max(int r, int p) {
    std::vector<std::vector<std::pair<std::vector<int>, std::size_t>>> by_max(r + 1);
    auto domains = all_psubsets(r, p);
    for (std::size_t i = 0; i < domains.size(); ++i)
        by_max[domains[i].back()].emplace_back(domains[i], i);
    return by_max;
}

inline bool extend_sigma(const ForbiddenAssignment& f, std::vector<int>& sigma,
                         std::vector<char>& used, int v,
                         const std::vector<std::vector<std::pair<std::vector<int>, std::size_t>>>&
                             by_max) {
    const int r = f.r();
    if (v > r) return true;
    for (int pos = 1; pos <= r; ++pos) {
        if (used[pos]) continue;
        sigma[v - 1] = pos;
        used[pos] = 1;
        bool ok = true;
        for (const auto& [domain, rank] : by_max[v]) {
            std::vector<int> image;
            image.reserve(domain.size());
            for (int a : domain) image.push_back(sigma[a - 1]);
            std::sort(image.begin(), image.end());
            if (image == f.labels()[rank]) {
                ok = false;
                break;
            }
        }
        if (ok && extend_sigma(f, sigma, used, v + 1, by_max)) return true;
        used[pos] = 0;
    }
    sigma[v - 1] = 0;
    return false;
}

}  // namespace partition_detail

// Lexicographically least permutation sigma of [r] with sigma(A) != I_A for
// every p-subset A, searched depth-first with partial pruning; absent when
// no permutation works.
inline OrderAvoidingResult order_avoiding(const ForbiddenAssignment& f) {
    OrderAvoidingResult result;
    result.all_equal = f.constant();
    std::vector<int> sigma(f.r(), 0);
    std::vector<char> used(f.r() + 1, 0);
    auto by_max = partition_detail::psubsets_by_max(f.r(), f.p());
    if (partition_detail::extend_sigma(f, sigma, used, 1, by_max))
        result.sigma = std::move(sigma);
    return result;
}

// Labels for p-sets of vertices, drawn from the p-subsets of [r].
class PSetPartition {
public:
    PSetPartition(int r, int p,
                  std::map<std::vector<int>, std::vector<int>> labels)
        : r_(r), p_(p), labels_(std::move(labels)) {
        if (p_ < 1 || p_ > r_) throw std::invalid_argument("p must satisfy 1 <= p <= r");
        for (auto& [pset, label] : labels_) {
            if (static_cast<int>(pset.size()) != p_ || !all_distinct(pset) ||
                !std::is_sorted(pset.begin(), pset.end()) || pset.front() < 1)
                throw std::invalid_argument("partition key is not a sorted p-set");
            if (static_cast<int>(label.size()) != p_)
                throw std::invalid_argument("label size differs from p");
            if (!std::is_sorted(label.begin(), label.end()) || !all_distinct(label) ||
                label.front() < 1 || label.back() > r_)
                throw std::invalid_argument("label is not a p-subset of [r]");
        }
    }

    int r() const { return r_; }
    int p() const { return p_; }
    const std::map<std::vector<int>, std::vector<int>>& labels() const { return labels_; }

    const std::vector<int>* label_of(std::vector<int> A) const {
        std::sort(A.begin(), A.end());
        auto it = labels_.find(A);
        return it == labels_.end() ? nullptr : &it->second;
    }

private:
    int r_;
    int p_;
    std::map<std::vector<int>, std::vector<int>> labels_;
};

namespace partition_detail {

inline ForbiddenAssignment induced_assignment(const UniformHypergraph& G,
                                              const PSetPartition& P, int edge_index) {
    const auto& e = G.edge(edge_index);
    const int r = G.r();
    const int p = P.p();
    std::vector<std::vector<int>> by_rank(binomial(r, p));
    auto position_sets = all_psubsets(r, p);
    for (std::size_t i = 0; i < position_sets.size(); ++i) {
        std::vector<int> A;
        A.reserve(p);
        for (int pos : position_sets[i]) A.push_back(e[pos - 1]);
        const auto* label = P.label_of(A);
        if (!label)
            throw std::invalid_argument("edge " + std::to_string(edge_index + 1) +
                                        " has an unlabeled p-subset");
        by_rank[i] = *label;
    }
    return ForbiddenAssignment(r, p, std::move(by_rank));
}

// Place vertex e[a-1] at position sigma(a); positions labeled I then carry
// the vertex set e[sigma^{-1}(I)], which the search kept different from
// every forbidden target.
inline std::vector<int> row_from_sigma(const std::vector<int>& e,
                                       const std::vector<int>& sigma) {
    std::vector<int> row(e.size());
    for (std::size_t a = 0; a < e.size(); ++a) row[sigma[a] - 1] = e[a];
    return row;
}

inline std::vector<int> row_with_front_at(const std::vector<int>& e,
                                          std::vector<int> front,
                                          const std::vector<int>& positions) {
    std::vector<int> rest;
    std::sort(front.begin(), front.end());
    for (int v : e)
        if (std::find(front.begin(), front.end(), v) == front.end()) rest.push_back(v);
    std::vector<char> taken(e.size() + 1, 0);
    for (int pos : positions) taken[pos] = 1;
    std::vector<int> row(e.size());
    std::size_t fi = 0, ri = 0;
    for (std::size_t pos = 1; pos <= e.size(); ++pos)
        row[pos - 1] = taken[pos] ? front[fi++] : rest[ri++];
    return row;
}

}  // namespace partition_detail

// Zero-degree pipeline: orientation where every labeled p-set A has
// degree_unordered(D, A, label(A)) = 0.
inline Orientation orient_from_partition(const UniformHypergraph& G,
                                         const PSetPartition& P) {
    if (P.r() != G.r())
        throw std::invalid_argument("partition r differs from hypergraph arity");
    std::vector<std::vector<int>> order;
    order.reserve(G.m());
    for (int i = 0; i < G.m(); ++i) {
        auto assignment = partition_detail::induced_assignment(G, P, i);
        if (assignment.constant()) throw HypothesisViolated(i, G.edge(i));
        auto found = order_avoiding(assignment);
        if (!found.sigma)
            throw NoOrderingFound(i, G.edge(i), assignment.as_pairs());
        order.push_back(partition_detail::row_from_sigma(G.edge(i), *found.sigma));
    }
    return Orientation(G, std::move(order));
}

// Bounded pipeline: pure-label subgraphs are oriented by the flow solver
// with the matched p-set placed at the label's positions; mixed-label edges
// go through order-avoiding search and contribute zero everywhere.
inline Orientation orient_from_partition_bounded(const UniformHypergraph& G,
                                                 const PSetPartition& P, int k) {
    if (P.r() != G.r())
        throw std::invalid_argument("partition r differs from hypergraph arity");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const int p = P.p();

    std::vector<std::optional<std::vector<int>>> rows(G.m());

    // Pure edges: every p-subset carries the same label.
    std::map<std::vector<int>, std::vector<int>> pure_by_label;
    std::vector<ForbiddenAssignment> assignments;
    assignments.reserve(G.m());
    for (int i = 0; i < G.m(); ++i) {
        assignments.push_back(partition_detail::induced_assignment(G, P, i));
        if (assignments.back().constant())
            pure_by_label[assignments.back().labels().front()].push_back(i);
    }
    for (const auto& [label, edge_indices] : pure_by_label) {
        std::vector<std::vector<int>> edges;
        for (int i : edge_indices) edges.push_back(G.edge(i));
        UniformHypergraph sub(G.r(), G.n(), std::move(edges), true);
        auto cert = orient_bounded(sub, p, k);
        if (!cert.feasible)
            throw HallViolated(label, *cert.witness, cert.witness_edges,
                               cert.witness_bound);
        for (std::size_t j = 0; j < edge_indices.size(); ++j) {
            const auto& solved = cert.orientation->order_of(static_cast<int>(j));
            std::vector<int> matched(solved.begin(), solved.begin() + p);
            rows[edge_indices[j]] = partition_detail::row_with_front_at(
                G.edge(edge_indices[j]), std::move(matched), label);
        }
    }

    for (int i = 0; i < G.m(); ++i) {
        if (rows[i]) continue;
        auto found = order_avoiding(assignments[i]);
        if (!found.sigma)
            throw NoOrderingFound(i, G.edge(i), assignments[i].as_pairs());
        rows[i] = partition_detail::row_from_sigma(G.edge(i), *found.sigma);
    }

    std::vector<std::vector<int>> order;
    order.reserve(G.m());
    for (auto& row : rows) order.push_back(std::move(*row));
    return Orientation(G, std::move(order));
}

}  // namespace hyperorient

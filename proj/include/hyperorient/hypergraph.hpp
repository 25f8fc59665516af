// Core data model: r-uniform hypergraphs, per-edge orientations, position
// sets, and the unordered / ordered I-degree computations.
//
// All types are immutable after construction; p-sets and edges are stored
// sorted ascending, which is the equality contract throughout.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperorient/combinatorics.hpp"

namespace hyperorient {

class UniformHypergraph {
public:
    UniformHypergraph(int r, int n, std::vector<std::vector<int>> edges,
                      bool allow_multiset = false)
        : r_(r), n_(n), edges_(std::move(edges)) {
        if (r_ < 1) throw std::invalid_argument("edge arity must be at least 1");
        if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
        for (auto& e : edges_) {
            if (static_cast<int>(e.size()) != r_)
                throw std::invalid_argument("edge {" + detail_join(e) + "} has size " +
                                            std::to_string(e.size()) + ", expected " +
                                            std::to_string(r_));
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("edge {" + detail_join(e) + "} repeats a vertex");
            if (e.front() < 1 || e.back() > n_)
                throw std::invalid_argument("edge {" + detail_join(e) + "} leaves 1.." +
                                            std::to_string(n_));
        }
        if (!allow_multiset) {
            std::set<std::vector<int>> seen;
            for (const auto& e : edges_)
                if (!seen.insert(e).second)
                    throw std::invalid_argument("duplicate edge {" + detail_join(e) + "}");
        }
    }

    int r() const { return r_; }
    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_.at(i); }

    bool operator==(const UniformHypergraph& other) const {
        return r_ == other.r_ && n_ == other.n_ && edges_ == other.edges_;
    }

private:
    static std::string detail_join(const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(v[i]);
        }
        return s;
    }

    int r_;
    int n_;
    std::vector<std::vector<int>> edges_;
};

// One chosen vertex ordering per edge.
class Orientation {
public:
    Orientation(UniformHypergraph host, std::vector<std::vector<int>> order)
        : host_(std::move(host)), order_(std::move(order)) {
        if (static_cast<int>(order_.size()) != host_.m())
            throw std::invalid_argument("orientation has " + std::to_string(order_.size()) +
                                        " rows for " + std::to_string(host_.m()) + " edges");
        for (int i = 0; i < host_.m(); ++i)
            if (!is_permutation_of(order_[i], host_.edge(i)))
                throw std::invalid_argument("row " + std::to_string(i + 1) +
                                            " is not a permutation of its edge");
    }

    const UniformHypergraph& host() const { return host_; }
    const std::vector<std::vector<int>>& order() const { return order_; }
    const std::vector<int>& order_of(int i) const { return order_.at(i); }

    bool operator==(const Orientation& other) const {
        return host_ == other.host_ && order_ == other.order_;
    }

private:
    UniformHypergraph host_;
    std::vector<std::vector<int>> order_;
};

// A p-subset of positions [r] (set flavour) or a p-tuple of distinct
// positions (tuple flavour, order significant).
class PositionSet {
public:
    enum class Kind { Set, Tuple };

    static PositionSet set_of(std::vector<int> positions, int r) {
        validate(positions, r);
        std::sort(positions.begin(), positions.end());
        return PositionSet(Kind::Set, std::move(positions));
    }

    static PositionSet tuple_of(std::vector<int> positions, int r) {
        validate(positions, r);
        return PositionSet(Kind::Tuple, std::move(positions));
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& elements() const { return elements_; }
    int p() const { return static_cast<int>(elements_.size()); }

private:
    static void validate(const std::vector<int>& positions, int r) {
        if (positions.empty()) throw std::invalid_argument("empty position set");
        if (!all_distinct(positions))
            throw std::invalid_argument("positions must be distinct");
        for (int x : positions)
            if (x < 1 || x > r) throw std::invalid_argument("position out of range 1..r");
    }

    PositionSet(Kind kind, std::vector<int> elements)
        : kind_(kind), elements_(std::move(elements)) {}

    Kind kind_;
    std::vector<int> elements_;
};

namespace degree_detail {

inline void check_args(const Orientation& D, const std::vector<int>& A,
                       const std::vector<int>& I) {
    const int r = D.host().r();
    const int n = D.host().n();
    if (A.size() != I.size())
        throw std::invalid_argument("vertex set and position set sizes differ");
    if (A.empty() || static_cast<int>(A.size()) > r)
        throw std::invalid_argument("p must satisfy 1 <= p <= r");
    if (!all_distinct(A) || !all_distinct(I))
        throw std::invalid_argument("vertices and positions must be distinct");
    for (int v : A)
        if (v < 1 || v > n) throw std::invalid_argument("vertex out of range 1..n");
    for (int i : I)
        if (i < 1 || i > r) throw std::invalid_argument("position out of range 1..r");
}

}  // namespace degree_detail

// d_I(A): edges whose positions I carry exactly the vertex set A.
inline std::uint64_t degree_unordered(const Orientation& D, const std::vector<int>& A,
                                      const std::vector<int>& I) {
    degree_detail::check_args(D, A, I);
    std::vector<int> target = A;
    std::sort(target.begin(), target.end());
    std::uint64_t count = 0;
    std::vector<int> carried(I.size());
    for (const auto& tuple : D.order()) {
        for (std::size_t j = 0; j < I.size(); ++j) carried[j] = tuple[I[j] - 1];
        std::sort(carried.begin(), carried.end());
        if (carried == target) ++count;
    }
    return count;
}

// Ordered degree: edges with the vertex A[j] exactly at position I[j] for
// every component j.
inline std::uint64_t degree_ordered(const Orientation& D, const std::vector<int>& A,
                                    const std::vector<int>& I) {
    degree_detail::check_args(D, A, I);
    std::uint64_t count = 0;
    for (const auto& tuple : D.order()) {
        bool match = true;
        for (std::size_t j = 0; j < I.size(); ++j) {
            if (tuple[I[j] - 1] != A[j]) {
                match = false;
                break;
            }
        }
        if (match) ++count;
    }
    return count;
}

inline std::uint64_t degree_unordered(const Orientation& D, const std::vector<int>& A,
                                      const PositionSet& I) {
    if (I.kind() != PositionSet::Kind::Set)
        throw std::invalid_argument("unordered degree needs a set-flavoured position set");
    return degree_unordered(D, A, I.elements());
}

inline std::uint64_t degree_ordered(const Orientation& D, const std::vector<int>& A,
                                    const PositionSet& I) {
    if (I.kind() != PositionSet::Kind::Tuple)
        throw std::invalid_argument("ordered degree needs a tuple-flavoured position set");
    return degree_ordered(D, A, I.elements());
}

// All p-subsets of the r-set e, in colexicographic order.
inline std::vector<std::vector<int>> psubsets(const std::vector<int>& e, int p) {
    return psubsets_of(e, p);
}

// Keep only the edges whose p-subsets all lie in W; same vertex set.
inline UniformHypergraph induced_by_pset_family(const UniformHypergraph& G,
                                                const std::vector<std::vector<int>>& W) {
    std::set<std::vector<int>> family;
    std::size_t p = 0;
    for (auto pset : W) {
        std::sort(pset.begin(), pset.end());
        if (p == 0) p = pset.size();
        if (pset.size() != p)
            throw std::invalid_argument("family mixes set sizes");
        family.insert(std::move(pset));
    }
    std::vector<std::vector<int>> kept;
    if (!family.empty() && static_cast<int>(p) <= G.r()) {
        for (const auto& e : G.edges()) {
            bool all_in = true;
            for (const auto& sub : psubsets(e, static_cast<int>(p))) {
                if (!family.count(sub)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) kept.push_back(e);
        }
    }
    return UniformHypergraph(G.r(), G.n(), std::move(kept), true);
}

}  // namespace hyperorient

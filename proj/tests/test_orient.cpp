#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperorient/orient.hpp"
#include "oracles.hpp"

using namespace hyperorient;

namespace {

UniformHypergraph k4_graph() {
    return UniformHypergraph(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

std::vector<int> first_positions(int p) {
    std::vector<int> I(p);
    for (int i = 0; i < p; ++i) I[i] = i + 1;
    return I;
}

// Largest unordered degree at positions {1..p} over all p-sets.
std::uint64_t max_degree(const Orientation& D, int p) {
    std::uint64_t best = 0;
    auto I = first_positions(p);
    for (const auto& A : all_psubsets(D.host().n(), p))
        best = std::max(best, degree_unordered(D, A, I));
    return best;
}

// Largest ordered degree at the tuple (1..p) over all vertex p-tuples.
std::uint64_t max_ordered_degree(const Orientation& D, int p) {
    std::uint64_t best = 0;
    auto I = first_positions(p);
    for (const auto& A : all_psubsets(D.host().n(), p)) {
        std::vector<int> perm = A;
        do {
            best = std::max(best, degree_ordered(D, perm, I));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

void check_witness(const UniformHypergraph& G, int p, const HallCertificate& cert) {
    REQUIRE(cert.witness.has_value());
    CHECK_FALSE(cert.orientation.has_value());
    CHECK(cert.witness_edges > cert.witness_bound);
    std::set<std::vector<int>> family(cert.witness->begin(), cert.witness->end());
    CHECK(family.size() == cert.witness->size());
    std::uint64_t inside = 0;
    for (const auto& e : G.edges()) {
        bool all_in = true;
        for (const auto& sub : psubsets(e, p))
            if (!family.count(sub)) all_in = false;
        if (all_in) ++inside;
    }
    CHECK(inside == cert.witness_edges);
}

}  // namespace

TEST_CASE("any edge makes k=0 infeasible", "[orient]") {
    UniformHypergraph g(3, 5, {{1, 2, 3}});
    for (int p = 1; p <= 3; ++p) {
        auto cert = orient_bounded(g, p, 0);
        REQUIRE_FALSE(cert.feasible);
        check_witness(g, p, cert);
        // A single edge's violating family is exactly its own p-subsets.
        CHECK(*cert.witness == psubsets(g.edge(0), p));
    }
}

TEST_CASE("triangle orients with all head-degrees one", "[orient]") {
    UniformHypergraph g(2, 3, {{1, 2}, {1, 3}, {2, 3}});
    auto cert = orient_bounded(g, 1, 1);
    REQUIRE(cert.feasible);
    REQUIRE(cert.orientation.has_value());
    CHECK(max_degree(*cert.orientation, 1) == 1);
    for (int v = 1; v <= 3; ++v)
        CHECK(degree_unordered(*cert.orientation, {v}, {1}) == 1);
}

TEST_CASE("K4 at p=1 k=1 is infeasible with the full vertex family", "[orient]") {
    auto g = k4_graph();
    auto cert = orient_bounded(g, 1, 1);
    REQUIRE_FALSE(cert.feasible);
    check_witness(g, 1, cert);
    CHECK(cert.witness->size() == 4);
    CHECK(cert.witness_edges == 6);
    CHECK(cert.witness_bound == 4);
}

TEST_CASE("single triple at p=2 k=1 leaves one loaded pair", "[orient]") {
    UniformHypergraph g(3, 3, {{1, 2, 3}});
    auto cert = orient_bounded(g, 2, 1);
    REQUIRE(cert.feasible);
    int loaded = 0;
    for (const auto& A : all_psubsets(3, 2)) {
        auto d = degree_unordered(*cert.orientation, A, {1, 2});
        CHECK(d <= 1);
        if (d == 1) ++loaded;
    }
    CHECK(loaded == 1);
}

TEST_CASE("check_hall matches the solver", "[orient]") {
    UniformHypergraph empty(2, 3, {});
    CHECK(check_hall(empty, 1, 0).holds);
    auto g = k4_graph();
    CHECK(check_hall(g, 1, 2).holds);
    CHECK(oracles::orientation_exists(g, 1, 2));
    auto zero = check_hall(g, 2, 0);
    REQUIRE_FALSE(zero.holds);
    CHECK(zero.witness_edges > zero.witness_bound);
}

TEST_CASE("solver argument validation", "[orient]") {
    UniformHypergraph g(2, 3, {{1, 2}});
    CHECK_THROWS_AS(orient_bounded(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(orient_bounded(g, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(orient_bounded(g, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(orient_bounded_ordered(g, 1, -1), std::invalid_argument);
}

TEST_CASE("matched p-set leads the row ascending, remainder ascending", "[orient]") {
    UniformHypergraph g(4, 6, {{6, 5, 2, 1}});
    auto cert = orient_bounded(g, 2, 1);
    REQUIRE(cert.feasible);
    const auto& row = cert.orientation->order_of(0);
    std::vector<int> front(row.begin(), row.begin() + 2);
    std::vector<int> back(row.begin() + 2, row.end());
    CHECK(std::is_sorted(front.begin(), front.end()));
    CHECK(std::is_sorted(back.begin(), back.end()));
}

TEST_CASE("ordered mode on two triples sharing a pair", "[orient]") {
    UniformHypergraph g(3, 4, {{1, 2, 3}, {1, 2, 4}});
    auto cert = orient_bounded_ordered(g, 2, 1);
    REQUIRE(cert.feasible);
    CHECK(max_ordered_degree(*cert.orientation, 2) <= 1);
}

TEST_CASE("ordered mode with k=0 is infeasible on any edge", "[orient]") {
    UniformHypergraph g(3, 3, {{1, 2, 3}});
    auto cert = orient_bounded_ordered(g, 2, 0);
    REQUIRE_FALSE(cert.feasible);
    CHECK(cert.witness_edges > cert.witness_bound);
}

TEST_CASE("single triple satisfies the ordered bound at k=1", "[orient]") {
    UniformHypergraph g(3, 3, {{1, 2, 3}});
    auto cert = orient_bounded_ordered(g, 2, 1);
    REQUIRE(cert.feasible);
    CHECK(max_ordered_degree(*cert.orientation, 2) <= 1);
}

TEST_CASE("increasing orientation sorts every edge", "[orient]") {
    UniformHypergraph g(3, 5, {{3, 1, 2}, {5, 4, 1}});
    auto D = orient_increasing(g);
    CHECK(D.order_of(0) == std::vector<int>{1, 2, 3});
    CHECK(D.order_of(1) == std::vector<int>{1, 4, 5});
}

TEST_CASE("increasing orientation zeroes the designated tuple degrees", "[orient]") {
    std::mt19937 rng(40991);
    for (int iter = 0; iter < 12; ++iter) {
        int r = 2 + static_cast<int>(rng() % 3);
        int n = r + 1 + static_cast<int>(rng() % 3);
        auto G = oracles::random_hypergraph(rng, r, n, 1 + static_cast<int>(rng() % 8));
        auto D = orient_increasing(G);
        for (int p = 2; p <= r; ++p) {
            std::vector<int> asc(p), desc(p);
            for (int i = 0; i < p; ++i) {
                asc[i] = i + 1;
                desc[i] = p - i;
            }
            for (const auto& A : all_psubsets(n, p)) {
                std::vector<int> perm = A;
                do {
                    bool ascending = std::is_sorted(perm.begin(), perm.end());
                    if (ascending)
                        CHECK(degree_ordered(D, perm, desc) == 0);
                    else
                        CHECK(degree_ordered(D, perm, asc) == 0);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
}

TEST_CASE("solver agrees with exhaustive orientation search", "[orient]") {
    std::mt19937 rng(52711);
    int checked = 0;
    for (int iter = 0; iter < 160; ++iter) {
        int r = 2 + static_cast<int>(rng() % 2);
        int n = r + 1 + static_cast<int>(rng() % (5 - r));
        int m = 1 + static_cast<int>(rng() % 4);
        auto G = oracles::random_hypergraph(rng, r, n, m);
        for (int p = 1; p <= std::min(2, r); ++p) {
            for (int k = 0; k <= 2; ++k) {
                auto cert = orient_bounded(G, p, k);
                bool oracle = oracles::orientation_exists(G, p, k);
                REQUIRE(cert.feasible == oracle);
                if (cert.feasible) {
                    CHECK(max_degree(*cert.orientation, p) <= static_cast<std::uint64_t>(k));
                } else {
                    check_witness(G, p, cert);
                }
                ++checked;
            }
        }
    }
    CHECK(checked >= 900);
}

TEST_CASE("ordered solver agrees with exhaustive search", "[orient]") {
    std::mt19937 rng(52712);
    for (int iter = 0; iter < 60; ++iter) {
        int r = 2 + static_cast<int>(rng() % 2);
        int n = r + 1 + static_cast<int>(rng() % 2);
        int m = 1 + static_cast<int>(rng() % 4);
        auto G = oracles::random_hypergraph(rng, r, n, m);
        for (int p = 1; p <= std::min(2, r); ++p) {
            for (int k = 0; k <= 1; ++k) {
                auto cert = orient_bounded_ordered(G, p, k);
                bool oracle = oracles::ordered_orientation_exists(G, p, k);
                REQUIRE(cert.feasible == oracle);
                if (cert.feasible)
                    CHECK(max_ordered_degree(*cert.orientation, p) <=
                          static_cast<std::uint64_t>(k));
            }
        }
    }
}

TEST_CASE("feasibility is monotone in k", "[orient]") {
    std::mt19937 rng(52713);
    for (int iter = 0; iter < 60; ++iter) {
        int r = 2 + static_cast<int>(rng() % 2);
        int n = r + 1 + static_cast<int>(rng() % 2);
        auto G = oracles::random_hypergraph(rng, r, n, 1 + static_cast<int>(rng() % 5));
        int p = 1 + static_cast<int>(rng() % r);
        bool prev = false;
        for (int k = 0; k <= 3; ++k) {
            bool now = check_hall(G, p, k).holds;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

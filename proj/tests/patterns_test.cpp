#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/patterns.hpp"

using namespace turanlab;

TEST(Patterns, AutomorphismOrders) {
    EXPECT_EQ(make_path(0).aut_order, 1U);
    EXPECT_EQ(make_path(3).aut_order, 2U);
    EXPECT_EQ(make_cycle(5).aut_order, 10U);
    EXPECT_EQ(make_star(1).aut_order, 2U);
    EXPECT_EQ(make_star(4).aut_order, 24U);
    EXPECT_EQ(make_clique(4).aut_order, 24U);
    EXPECT_THROW(make_cycle(2), std::invalid_argument);
    EXPECT_THROW(make_matching_structure(MatchingVariant::two_triangles, 1), std::invalid_argument);
    EXPECT_THROW(make_matching_structure(MatchingVariant::triangle, 0), std::invalid_argument);
}

TEST(Patterns, MatchingStructureShapes) {
    const Pattern m1 = make_matching_structure(MatchingVariant::triangle, 3);
    EXPECT_EQ(m1.graph.vertex_count(), 7);
    EXPECT_EQ(m1.graph.edge_count(), 5);
    const Pattern m2 = make_matching_structure(MatchingVariant::k4, 2);
    EXPECT_EQ(m2.graph.vertex_count(), 6);
    EXPECT_EQ(m2.graph.edge_count(), 7);
    const Pattern m3 = make_matching_structure(MatchingVariant::two_triangles, 2);
    EXPECT_EQ(m3.graph.vertex_count(), 6);
    EXPECT_EQ(m3.graph.edge_count(), 6);
    for (const Pattern& p : {m1, m2, m3}) EXPECT_EQ(p.aut_order, oracle::automorphisms(p.graph));
}

TEST(Patterns, ParseRoundTrip) {
    for (const std::string s : {"path:3", "cycle:5", "star:4", "clique:3", "m1:2", "m2:1", "m3:2", "g6:Bw"}) {
        EXPECT_EQ(parse_pattern(s).name(), s);
    }
    EXPECT_THROW(parse_pattern("path"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("wheel:5"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("path:x"), std::invalid_argument);
}

TEST(Patterns, AutomorphismsMatchOracle) {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + rep % 7;
        const Graph g = oracle::random_graph(n, 0.5, rng);
        EXPECT_EQ(automorphism_order(g), oracle::automorphisms(g));
    }
}

TEST(Patterns, EmbeddingsMatchOracle) {
    std::mt19937_64 rng(11);
    const std::vector<Pattern> patterns{make_path(2), make_path(3), make_cycle(4), make_star(3), make_clique(3),
                                        make_matching_structure(MatchingVariant::triangle, 2),
                                        make_pattern(parse_graph6("Dhc"))};
    for (int rep = 0; rep < 25; ++rep) {
        const Graph host = oracle::random_graph(5 + rep % 3, 0.55, rng);
        for (const auto& p : patterns) {
            EXPECT_EQ(count_embeddings(p.graph, host), oracle::embeddings(p.graph, host)) << p.name();
            EXPECT_EQ(count_copies(p, host), oracle::copies(p.graph, host)) << p.name();
            EXPECT_EQ(contains_copy(p.graph, host), oracle::embeddings(p.graph, host) > 0);
        }
    }
}

TEST(Patterns, SpecializedCountersAgreeWithGeneric) {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g = oracle::random_graph(6 + rep % 5, 0.3 + 0.01 * rep, rng);
        for (int l = 1; l <= 6; ++l) EXPECT_EQ(count_paths(l, g), count_copies(make_path(l), g)) << "l=" << l;
        for (int l = 3; l <= 7; ++l) EXPECT_EQ(count_cycles(l, g), count_copies(make_cycle(l), g)) << "l=" << l;
        for (int r = 1; r <= 5; ++r) EXPECT_EQ(count_cliques(r, g), count_copies(make_clique(r), g)) << "r=" << r;
        for (int r = 1; r <= 5; ++r) EXPECT_EQ(count_stars(r, g), count_copies(make_star(r), g)) << "r=" << r;
    }
}

TEST(Patterns, PathZeroCountsVertices) {
    EXPECT_EQ(count_paths(0, cycle_graph(7)), 7U);
    EXPECT_EQ(count_paths(1, cycle_graph(7)), 7U);
}

TEST(Patterns, CliqueNeighborhoodIdentity) {
    // r N(K_r, G) = sum over v of N(K_{r-1}, G[N(v)])
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = oracle::random_graph(9, 0.6, rng);
        for (int r = 2; r <= 5; ++r) {
            Count sum = 0;
            for (int v = 0; v < g.vertex_count(); ++v) sum += count_cliques(r - 1, g.induced_subgraph(g.neighbors(v)));
            EXPECT_EQ(static_cast<Count>(r) * count_cliques(r, g), sum);
        }
    }
}

TEST(Patterns, StarDegreeIdentity) {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = oracle::random_graph(10, 0.4, rng);
        for (int r = 2; r <= 4; ++r) {
            Count sum = 0;
            for (int v = 0; v < g.vertex_count(); ++v) sum += choose(static_cast<Count>(g.degree(v)), static_cast<Count>(r));
            EXPECT_EQ(count_stars(r, g), sum);
        }
    }
}

TEST(Patterns, IndependenceNumber) {
    EXPECT_EQ(independence_number(build_gnka(10, 5, 2)), 8);
    EXPECT_EQ(independence_number(cycle_graph(7)), 3);
    EXPECT_EQ(independence_number(complete_graph(6)), 1);
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = oracle::random_graph(12, 0.3, rng);
        EXPECT_EQ(independence_number(g), oracle::independence(g));
    }
    EXPECT_THROW(independence_number(Graph(41)), std::invalid_argument);
}

TEST(Patterns, TrianglesInConstruction) {
    EXPECT_EQ(count_cliques(3, build_gnka(10, 5, 2)), 8U);
}

TEST(Patterns, PatternSizeCap) {
    EXPECT_THROW(make_pattern(Graph(13)), std::invalid_argument);
}

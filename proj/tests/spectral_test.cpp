#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/spectral.hpp"

using namespace turanlab;

namespace {

double eigen_radius(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g.has_edge(i, j) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Spectral, ClosedForms) {
    EXPECT_NEAR(spectral_radius(complete_graph(10)), 9.0, 1e-6);
    EXPECT_NEAR(spectral_radius(star_graph(4)), 2.0, 1e-6);
    EXPECT_NEAR(spectral_radius(cycle_graph(5)), 2.0, 1e-6);
    for (int n = 2; n <= 20; ++n) EXPECT_NEAR(spectral_radius(complete_graph(n)), n - 1.0, 1e-6);
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            EXPECT_NEAR(spectral_radius(complete_bipartite_graph(a, b)), std::sqrt(a * b), 1e-6);
    for (int n = 3; n <= 30; ++n) EXPECT_NEAR(spectral_radius(cycle_graph(n)), 2.0, 1e-6);
    for (int m = 1; m <= 30; ++m) EXPECT_NEAR(spectral_radius(star_graph(m)), std::sqrt(m), 1e-6);
    EXPECT_EQ(spectral_radius(Graph(5)), 0.0);
    EXPECT_THROW(spectral_radius(cycle_graph(4), 0.0), std::invalid_argument);
}

TEST(Spectral, MatchesDenseSolver) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 100; ++rep) {
        const Graph g = oracle::random_graph(2 + rep % 20, 0.1 + 0.008 * rep, rng);
        EXPECT_NEAR(spectral_radius(g), eigen_radius(g), 1e-6);
    }
    for (int k = 3; k <= 8; ++k)
        for (int n = k; n <= 30; n += 3) {
            const Graph g = build(ConstructionParams::gnkt(n, k));
            EXPECT_NEAR(spectral_radius(g), eigen_radius(g), 1e-6);
        }
}

TEST(Spectral, NikiforovBound) {
    EXPECT_NEAR(nikiforov_bound(50, 5), std::sqrt(150.0), 1e-12);
    EXPECT_NEAR(nikiforov_bound(17, 3), std::sqrt(34.0), 1e-12);
    EXPECT_NEAR(nikiforov_bound(12, 5), 6.0, 1e-12);
    EXPECT_LT(spectral_radius(build_gnka(12, 5, 2)), nikiforov_bound(12, 5));
    EXPECT_THROW(nikiforov_bound(0, 5), std::invalid_argument);
    EXPECT_THROW(nikiforov_bound(5, 1), std::invalid_argument);
}

TEST(Spectral, WalkCounts) {
    EXPECT_EQ(walk_count(cycle_graph(7), 0), 7);
    EXPECT_EQ(walk_count(complete_graph(3), 2), 12);
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g = oracle::random_graph(1 + rep % 12, 0.4, rng);
        EXPECT_EQ(walk_count(g, 1), 2 * g.edge_count());
        for (int m = 0; m <= 6; ++m) EXPECT_EQ(walk_count(g, m), oracle::walks(g, m));
    }
    EXPECT_THROW(walk_count(cycle_graph(3), -1), std::invalid_argument);
}

TEST(Spectral, ChainExamples) {
    const SpectralChainReport c5 = check_spectral_path_chain(cycle_graph(5), 1);
    EXPECT_EQ(c5.twice_paths, 10);
    EXPECT_EQ(c5.walks, 20);
    EXPECT_NEAR(c5.walk_bound, 20.0, 1e-3);
    EXPECT_TRUE(c5.pass());
    const SpectralChainReport k4 = check_spectral_path_chain(complete_graph(4), 1);
    EXPECT_EQ(k4.twice_paths, 24);
    EXPECT_EQ(k4.walks, 36);
    EXPECT_TRUE(k4.pass());
    const SpectralChainReport empty = check_spectral_path_chain(Graph(4), 2);
    EXPECT_EQ(empty.twice_paths, 0);
    EXPECT_EQ(empty.walks, 0);
    EXPECT_EQ(empty.walk_bound, 0.0);
    EXPECT_TRUE(empty.pass());
    EXPECT_THROW(check_spectral_path_chain(Graph(4), 0), std::invalid_argument);
}

TEST(Spectral, ChainOnRandomGraphs) {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g = oracle::random_graph(1 + rep % 12, 0.2 + 0.003 * rep, rng);
        for (int l = 1; l <= 3; ++l) EXPECT_TRUE(check_spectral_path_chain(g, l).pass()) << to_graph6(g) << " l=" << l;
    }
}

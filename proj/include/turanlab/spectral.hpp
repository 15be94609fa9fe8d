#pragma once

#include <cstdint>

#include "turanlab/constructions.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr int kPowerIterationCap = 100000;

/// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
/// vector. Returns 0 for edgeless graphs. Throws std::runtime_error when the
/// iteration cap is reached and std::invalid_argument for tol <= 0.
double spectral_radius(const Graph& g, double tol = kDefaultSpectralTol);

/// sqrt(floor((k + 1) / 2) * n). Throws for n < 1 or k < 2.
double nikiforov_bound(std::int64_t n, std::int64_t k);

/// 1^T A^m 1, exact.
BigInt walk_count(const Graph& g, int m);

struct SpectralChainReport {
    int l = 0;
    BigInt twice_paths;   // 2 * N(P_{2l}, G)
    BigInt walks;         // walks with 2l steps
    double radius = 0.0;
    double walk_bound = 0.0;  // n * radius^{2l} * (1 + slack)
    bool paths_le_walks = false;
    bool walks_le_bound = false;

    bool pass() const { return paths_le_walks && walks_le_bound; }
};

inline constexpr double kChainSlack = 1e-6;

/// Checks 2 N(P_{2l}, G) <= #(2l)-walks <= n lambda^{2l} (1 + slack).
SpectralChainReport check_spectral_path_chain(const Graph& g, int l, double tol = kDefaultSpectralTol);

}  // namespace turanlab

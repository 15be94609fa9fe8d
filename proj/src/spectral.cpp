#include "turanlab/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "turanlab/patterns.hpp"

namespace turanlab {

namespace {

// y = (A + I) x
void shifted_product(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        double sum = x[static_cast<std::size_t>(v)];
        for_each_vertex(g.neighbors(v), [&](int w) { sum += x[static_cast<std::size_t>(w)]; });
        y[static_cast<std::size_t>(v)] = sum;
    }
}

double norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace

double spectral_radius(const Graph& g, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("spectral tolerance must be positive");
    if (g.edge_count() == 0) return 0.0;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double lambda = 0.0;
    for (int iter = 0; iter < kPowerIterationCap; ++iter) {
        shifted_product(g, x, y);
        double quotient = 0.0;
        for (std::size_t i = 0; i < n; ++i) quotient += x[i] * y[i];
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = y[i] - quotient * x[i];
            residual += d * d;
        }
        residual = std::sqrt(residual);
        const bool settled = iter > 0 && std::abs(quotient - lambda) < tol && residual <= tol;
        lambda = quotient;
        if (settled) return lambda - 1.0;
        const double len = norm(y);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / len;
    }
    throw std::runtime_error("power iteration did not converge within the iteration cap");
}

double nikiforov_bound(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 2) throw std::invalid_argument("nikiforov_bound needs n >= 1, k >= 2");
    return std::sqrt(static_cast<double>((k + 1) / 2) * static_cast<double>(n));
}

BigInt walk_count(const Graph& g, int m) {
    if (m < 0) throw std::invalid_argument("walk length must be nonnegative");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<BigInt> x(n, BigInt(1));
    std::vector<BigInt> y(n);
    for (int step = 0; step < m; ++step) {
        for (std::size_t v = 0; v < n; ++v) {
            BigInt sum = 0;
            for_each_vertex(g.neighbors(static_cast<int>(v)), [&](int w) { sum += x[static_cast<std::size_t>(w)]; });
            y[v] = sum;
        }
        x.swap(y);
    }
    BigInt total = 0;
    for (const auto& v : x) total += v;
    return total;
}

SpectralChainReport check_spectral_path_chain(const Graph& g, int l, double tol) {
    if (l < 1) throw std::invalid_argument("chain needs l >= 1");
    SpectralChainReport r;
    r.l = l;
    r.twice_paths = BigInt(count_paths(2 * l, g)) * 2;
    r.walks = walk_count(g, 2 * l);
    r.radius = spectral_radius(g, tol);
    r.walk_bound = static_cast<double>(g.vertex_count()) * std::pow(r.radius, 2 * l) * (1.0 + kChainSlack);
    r.paths_le_walks = r.twice_paths <= r.walks;
    r.walks_le_bound = r.walks.convert_to<double>() <= r.walk_bound;
    return r;
}

}  // namespace turanlab

#include "turanlab/patterns.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace turanlab {

std::string Pattern::name() const {
    switch (kind) {
        case MotifKind::path: return "path:" + std::to_string(size);
        case MotifKind::cycle: return "cycle:" + std::to_string(size);
        case MotifKind::star: return "star:" + std::to_string(size);
        case MotifKind::clique: return "clique:" + std::to_string(size);
        case MotifKind::matching_triangle: return "m1:" + std::to_string(size);
        case MotifKind::matching_k4: return "m2:" + std::to_string(size);
        case MotifKind::matching_two_triangles: return "m3:" + std::to_string(size);
        case MotifKind::custom: break;
    }
    return "g6:" + to_graph6(graph);
}

Count choose(Count n, Count k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Count r = 1;
    for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

Count factorial(int n) {
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<Count>(i);
    return r;
}

void check_pattern_size(const Graph& g) {
    if (g.vertex_count() > kMaxPatternVertices) {
        throw std::invalid_argument("pattern has " + std::to_string(g.vertex_count()) +
                                    " vertices; the cap is 12");
    }
}

// Backtracking embedder. Pattern vertices are placed in a connected greedy
// order (max back-degree, then max degree) so each candidate set is an
// intersection of host neighborhoods of already placed images.
class Embedder {
public:
    Embedder(const Graph& pattern, const Graph& host, bool exact_degree)
        : pattern_(pattern), host_(host), exact_degree_(exact_degree) {
        const int k = pattern.vertex_count();
        VertexSet placed = 0;
        for (int pos = 0; pos < k; ++pos) {
            int best = -1;
            int best_back = -1;
            int best_deg = -1;
            for (int v = 0; v < k; ++v) {
                if ((placed >> v) & 1U) continue;
                const int back = set_size(pattern.neighbors(v) & placed);
                const int deg = pattern.degree(v);
                if (back > best_back || (back == best_back && deg > best_deg)) {
                    best = v;
                    best_back = back;
                    best_deg = deg;
                }
            }
            order_[static_cast<std::size_t>(pos)] = best;
            placed |= singleton(best);
        }
        for (int pos = 0; pos < k; ++pos) {
            const int v = order_[static_cast<std::size_t>(pos)];
            auto& back = back_[static_cast<std::size_t>(pos)];
            for (int q = 0; q < pos; ++q) {
                if (pattern.has_edge(v, order_[static_cast<std::size_t>(q)])) back.push_back(q);
            }
            VertexSet allowed = 0;
            const int need = pattern.degree(v);
            for (int w = 0; w < host.vertex_count(); ++w) {
                const int d = host.degree(w);
                if (exact_degree_ ? d == need : d >= need) allowed |= singleton(w);
            }
            allowed_[static_cast<std::size_t>(pos)] = allowed;
        }
    }

    Count count_from(int first_image, bool stop_at_first) {
        stop_ = stop_at_first;
        const int k = pattern_.vertex_count();
        if (k == 0) return first_image == 0 ? 1 : 0;
        if (!((allowed_[0] >> first_image) & 1U)) return 0;
        image_[0] = first_image;
        if (k == 1) return 1;
        return extend(1, singleton(first_image));
    }

    Count count_all(bool stop_at_first) {
        const int k = pattern_.vertex_count();
        if (k == 0) return 1;
        if (k > host_.vertex_count()) return 0;
        Count total = 0;
        for (int w = 0; w < host_.vertex_count(); ++w) {
            total += count_from(w, stop_at_first);
            if (stop_at_first && total > 0) return 1;
        }
        return total;
    }

private:
    Count extend(int pos, VertexSet used) {
        const int k = pattern_.vertex_count();
        VertexSet cand = allowed_[static_cast<std::size_t>(pos)] & ~used;
        for (int q : back_[static_cast<std::size_t>(pos)]) cand &= host_.neighbors(image_[static_cast<std::size_t>(q)]);
        if (pos == k - 1) return stop_ ? (cand != 0 ? 1 : 0) : static_cast<Count>(set_size(cand));
        Count total = 0;
        while (cand != 0) {
            const int w = first_vertex(cand);
            cand &= cand - 1;
            image_[static_cast<std::size_t>(pos)] = w;
            total += extend(pos + 1, used | singleton(w));
            if (stop_ && total > 0) return 1;
        }
        return total;
    }

    const Graph& pattern_;
    const Graph& host_;
    bool exact_degree_;
    bool stop_ = false;
    std::array<int, kMaxPatternVertices> order_{};
    std::array<std::vector<int>, kMaxPatternVertices> back_{};
    std::array<VertexSet, kMaxPatternVertices> allowed_{};
    std::array<int, kMaxPatternVertices> image_{};
};

Pattern finish(Graph g, Count aut, MotifKind kind, int size) {
    return Pattern{std::move(g), aut, kind, size};
}

}  // namespace

Pattern make_path(int edges) {
    if (edges < 0) throw std::invalid_argument("path length must be >= 0");
    if (edges + 1 > kMaxPatternVertices) throw std::invalid_argument("path exceeds the 12-vertex pattern cap");
    return finish(path_graph(edges + 1), edges == 0 ? 1 : 2, MotifKind::path, edges);
}

Pattern make_cycle(int length) {
    if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
    if (length > kMaxPatternVertices) throw std::invalid_argument("cycle exceeds the 12-vertex pattern cap");
    return finish(cycle_graph(length), static_cast<Count>(2 * length), MotifKind::cycle, length);
}

Pattern make_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    if (leaves + 1 > kMaxPatternVertices) throw std::invalid_argument("star exceeds the 12-vertex pattern cap");
    return finish(star_graph(leaves), leaves == 1 ? 2 : factorial(leaves), MotifKind::star, leaves);
}

Pattern make_clique(int r) {
    if (r < 1) throw std::invalid_argument("clique size must be >= 1");
    if (r > kMaxPatternVertices) throw std::invalid_argument("clique exceeds the 12-vertex pattern cap");
    return finish(complete_graph(r), factorial(r), MotifKind::clique, r);
}

Pattern make_matching_structure(MatchingVariant variant, int l) {
    const int min_l = variant == MatchingVariant::two_triangles ? 2 : 1;
    if (l < min_l) {
        throw std::invalid_argument("matching structure needs l >= " + std::to_string(min_l));
    }
    const int matching = l - min_l;
    Graph g = Graph(0);
    for (int i = 0; i < matching; ++i) g = g.disjoint_union(complete_graph(2));
    MotifKind kind = MotifKind::matching_triangle;
    switch (variant) {
        case MatchingVariant::triangle:
            g = g.disjoint_union(complete_graph(3));
            break;
        case MatchingVariant::k4:
            g = g.disjoint_union(complete_graph(4));
            kind = MotifKind::matching_k4;
            break;
        case MatchingVariant::two_triangles:
            g = g.disjoint_union(complete_graph(3)).disjoint_union(complete_graph(3));
            kind = MotifKind::matching_two_triangles;
            break;
    }
    check_pattern_size(g);
    const Count aut = automorphism_order(g);
    return finish(std::move(g), aut, kind, l);
}

Pattern make_pattern(const Graph& g) {
    check_pattern_size(g);
    return finish(g, automorphism_order(g), MotifKind::custom, g.vertex_count());
}

Pattern parse_pattern(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("pattern '" + text + "' needs the form kind:value");
    const std::string kind = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    if (kind == "g6") return make_pattern(parse_graph6(value));
    int size = 0;
    std::size_t used = 0;
    try {
        size = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw std::invalid_argument("bad size in pattern '" + text + "'");
    if (size < 0 || size > kMaxPatternVertices) throw std::invalid_argument("size out of range in pattern '" + text + "'");
    if (kind == "path") return make_path(size);
    if (kind == "cycle") return make_cycle(size);
    if (kind == "star") {
        if (size < 1) throw std::invalid_argument("star needs at least one leaf");
        return make_star(size);
    }
    if (kind == "clique") {
        if (size < 1) throw std::invalid_argument("clique needs r >= 1");
        return make_clique(size);
    }
    if (kind == "m1") return make_matching_structure(MatchingVariant::triangle, size);
    if (kind == "m2") return make_matching_structure(MatchingVariant::k4, size);
    if (kind == "m3") return make_matching_structure(MatchingVariant::two_triangles, size);
    throw std::invalid_argument("unknown pattern kind '" + kind + "'");
}

Count automorphism_order(const Graph& g) {
    check_pattern_size(g);
    Embedder e(g, g, true);
    return e.count_all(false);
}

Count count_embeddings(const Graph& pattern, const Graph& host, bool stop_at_first) {
    check_pattern_size(pattern);
    Embedder e(pattern, host, false);
    return e.count_all(stop_at_first);
}

Count count_copies(const Pattern& p, const Graph& host) {
    const Count emb = count_embeddings(p.graph, host);
    if (emb % p.aut_order != 0) {
        throw std::logic_error("embedding total not divisible by automorphism order");
    }
    return emb / p.aut_order;
}

bool contains_copy(const Graph& pattern, const Graph& host) {
    return count_embeddings(pattern, host, true) > 0;
}

namespace {

Count ordered_paths_from(const Graph& g, int v, VertexSet visited, int remaining) {
    const VertexSet next = g.neighbors(v) & ~visited;
    if (remaining == 1) return static_cast<Count>(set_size(next));
    Count total = 0;
    for_each_vertex(next, [&](int w) { total += ordered_paths_from(g, w, visited | singleton(w), remaining - 1); });
    return total;
}

Count closed_walks_from(const Graph& g, int start, int v, VertexSet visited, VertexSet allowed, int remaining) {
    // remaining = vertices still to add before closing back to start
    const VertexSet next = g.neighbors(v) & allowed & ~visited;
    if (remaining == 1) return static_cast<Count>(set_size(next & g.neighbors(start)));
    Count total = 0;
    for_each_vertex(next, [&](int w) {
        total += closed_walks_from(g, start, w, visited | singleton(w), allowed, remaining - 1);
    });
    return total;
}

Count cliques_within(const Graph& g, VertexSet cand, int r) {
    if (r == 0) return 1;
    if (r == 1) return static_cast<Count>(set_size(cand));
    Count total = 0;
    while (cand != 0) {
        const int v = first_vertex(cand);
        cand &= cand - 1;
        total += cliques_within(g, cand & g.neighbors(v), r - 1);
    }
    return total;
}

}  // namespace

Count count_paths(int l, const Graph& g) {
    if (l < 0) throw std::invalid_argument("path length must be >= 0");
    if (l == 0) return static_cast<Count>(g.vertex_count());
    Count ordered = 0;
    for (int v = 0; v < g.vertex_count(); ++v) ordered += ordered_paths_from(g, v, singleton(v), l);
    // every path is traversed once from each end
    return ordered / 2;
}

Count count_cycles(int l, const Graph& g) {
    if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
    Count ordered = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        // s is the smallest vertex on the cycle; both directions are found
        const VertexSet higher = g.vertices() & ~low_bits(s + 1);
        ordered += closed_walks_from(g, s, s, singleton(s), higher, l - 1);
    }
    return ordered / 2;
}

Count count_cliques(int r, const Graph& g) {
    if (r < 1) throw std::invalid_argument("clique size must be >= 1");
    return cliques_within(g, g.vertices(), r);
}

Count count_stars(int r, const Graph& g) {
    if (r < 1) throw std::invalid_argument("star needs at least one leaf");
    if (r == 1) return static_cast<Count>(g.edge_count());
    Count total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += choose(static_cast<Count>(g.degree(v)), static_cast<Count>(r));
    return total;
}

Count count_motif(const Pattern& p, const Graph& host) {
    switch (p.kind) {
        case MotifKind::path: return count_paths(p.size, host);
        case MotifKind::cycle: return count_cycles(p.size, host);
        case MotifKind::star: return count_stars(p.size, host);
        case MotifKind::clique: return count_cliques(p.size, host);
        default: return count_copies(p, host);
    }
}

namespace {

// Maximum clique by branch and bound with a greedy colouring bound.
class CliqueSearch {
public:
    explicit CliqueSearch(std::array<VertexSet, kMaxVertices> adj) : adj_(adj) {}

    int run(VertexSet cand) {
        best_ = 0;
        expand(0, cand);
        return best_;
    }

private:
    void expand(int size, VertexSet cand) {
        if (cand == 0) {
            best_ = std::max(best_, size);
            return;
        }
        // colour classes give an upper bound on the clique inside cand
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> bound{};
        int count = 0;
        int colour = 0;
        VertexSet uncoloured = cand;
        while (uncoloured != 0) {
            ++colour;
            VertexSet avail = uncoloured;
            while (avail != 0) {
                const int v = first_vertex(avail);
                avail &= ~adj_[static_cast<std::size_t>(v)] & ~singleton(v);
                uncoloured &= ~singleton(v);
                order[static_cast<std::size_t>(count)] = v;
                bound[static_cast<std::size_t>(count)] = colour;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[static_cast<std::size_t>(i)] <= best_) return;
            const int v = order[static_cast<std::size_t>(i)];
            expand(size + 1, cand & adj_[static_cast<std::size_t>(v)]);
            cand &= ~singleton(v);
        }
    }

    std::array<VertexSet, kMaxVertices> adj_;
    int best_ = 0;
};

}  // namespace

int independence_number(const Graph& g) {
    if (g.vertex_count() > 40) throw std::invalid_argument("independence_number supports at most 40 vertices");
    std::array<VertexSet, kMaxVertices> complement{};
    for (int v = 0; v < g.vertex_count(); ++v) {
        complement[static_cast<std::size_t>(v)] = g.vertices() & ~g.neighbors(v) & ~singleton(v);
    }
    return CliqueSearch(complement).run(g.vertices());
}

}  // namespace turanlab

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turanlab {

/// Bitmask over at most 64 vertices; bit i set means vertex i is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Mask with the low n bits set (n in [0, 64]).
constexpr VertexSet low_bits(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

/// Index of the lowest member; s must be non-empty.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

/// Calls fn(v) for every member of s in ascending order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s != 0) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), one neighbor bitmask
/// per vertex. The adjacency is kept symmetric and loop-free by every mutator.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices. Throws std::invalid_argument if n is
    /// outside [0, 64].
    explicit Graph(int n);

    /// Throws std::invalid_argument on n > 64, an out-of-range endpoint, or a
    /// loop. Duplicate pairs collapse into one edge.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return low_bits(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int edge_count() const;
    int degree(int v) const { return set_size(neighbors(v)); }
    /// 0 for the 0-vertex graph.
    int min_degree() const;
    int max_degree() const;
    /// The 0-vertex graph counts as connected.
    bool is_connected() const;
    /// Vertex sets of the connected components, ordered by smallest member.
    std::vector<VertexSet> components() const;
    /// Vertices reachable from `start` using only vertices in `allowed`.
    VertexSet reachable(int start, VertexSet allowed) const;

    /// Edges (i, j) with i < j, ordered by j then i (graph6 bit order).
    std::vector<Edge> edges() const;

    /// Vertices of s relabeled 0..|s|-1 in ascending original order.
    Graph induced_subgraph(VertexSet s) const;
    Graph induced_subgraph(std::span<const int> s) const;

    /// Image graph with edge (perm[i], perm[j]) for every edge (i, j).
    /// Throws std::invalid_argument if perm is not a bijection on 0..n-1.
    Graph relabel(std::span<const int> perm) const;

    /// Disjoint union; vertices of `other` are shifted by vertex_count().
    Graph disjoint_union(const Graph& other) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int vertices);
Graph star_graph(int leaves);

/// Standard graph6 encoding: size header (short form for n <= 62, '~'
/// plus 18 bits above), then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, offset by 63.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. A trailing newline is ignored. Throws
/// std::invalid_argument on a malformed header, a body of the wrong length,
/// a byte outside 63..126, or n > 64.
Graph parse_graph6(std::string_view text);

}  // namespace turanlab

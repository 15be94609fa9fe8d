#include "turanlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanlab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " +
                                    std::to_string(n_));
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= singleton(v);
    adj_[static_cast<std::size_t>(v)] |= singleton(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~singleton(v);
    adj_[static_cast<std::size_t>(v)] &= ~singleton(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::reachable(int start, VertexSet allowed) const {
    VertexSet seen = singleton(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= neighbors(v); });
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return reachable(0, vertices()) == vertices();
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet left = vertices();
    while (left != 0) {
        VertexSet comp = reachable(first_vertex(left), vertices());
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int j = 1; j < n_; ++j) {
        for_each_vertex(neighbors(j) & low_bits(j), [&](int i) { out.emplace_back(i, j); });
    }
    return out;
}

Graph Graph::induced_subgraph(VertexSet s) const {
    if ((s & ~vertices()) != 0) {
        throw std::invalid_argument("induced_subgraph: vertex set exceeds the graph");
    }
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for_each_vertex(s, [&](int v) { index[static_cast<std::size_t>(v)] = m++; });
    Graph sub(m);
    for_each_vertex(s, [&](int v) {
        VertexSet row = 0;
        for_each_vertex(neighbors(v) & s, [&](int w) { row |= singleton(index[static_cast<std::size_t>(w)]); });
        sub.adj_[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = row;
    });
    return sub;
}

Graph Graph::induced_subgraph(std::span<const int> s) const {
    VertexSet mask = 0;
    for (int v : s) {
        check_vertex(v);
        mask |= singleton(v);
    }
    return induced_subgraph(mask);
}

Graph Graph::relabel(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("relabel: permutation size does not match vertex count");
    }
    VertexSet image = 0;
    for (int p : perm) {
        if (p < 0 || p >= n_ || ((image >> p) & 1U)) {
            throw std::invalid_argument("relabel: not a bijection");
        }
        image |= singleton(p);
    }
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        VertexSet row = 0;
        for_each_vertex(neighbors(v), [&](int w) { row |= singleton(perm[static_cast<std::size_t>(w)]); });
        out.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
    }
    return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph out(n_ + other.n_);
    out.adj_ = adj_;
    for (int v = 0; v < other.n_; ++v) {
        out.adj_[static_cast<std::size_t>(n_ + v)] = other.neighbors(v) << n_;
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int vertices) {
    Graph g(vertices);
    for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

namespace {

constexpr int kGraph6Offset = 63;

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kGraph6Offset));
        }
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
    return out;
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty record");
    for (char c : text) {
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
    }
    int n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = text[0] - kGraph6Offset;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') {
            throw std::invalid_argument("graph6: malformed size header");
        }
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kGraph6Offset);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw std::invalid_argument("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");
    }
    const std::string_view body = text.substr(pos);
    if (body.size() != body_length(n)) {
        throw std::invalid_argument("graph6: body has " + std::to_string(body.size()) +
                                    " bytes, expected " + std::to_string(body_length(n)));
    }
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = body[bit / 6] - kGraph6Offset;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace turanlab

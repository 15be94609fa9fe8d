#include "turanlab/freeness.hpp"

#include <algorithm>
#include <stdexcept>

namespace turanlab {

Forbidden Forbidden::single(Pattern p) {
    Forbidden f;
    f.kind = Kind::single_pattern;
    f.pattern = std::move(p);
    return f;
}

Forbidden Forbidden::long_cycles(int k) {
    if (k < 3) throw std::invalid_argument("long-cycle family needs k >= 3");
    Forbidden f;
    f.kind = Kind::long_cycles;
    f.k = k;
    return f;
}

std::string Forbidden::name() const {
    if (kind == Kind::long_cycles) return "cycles-ge:" + std::to_string(k);
    return pattern.name();
}

Forbidden Forbidden::parse(const std::string& text) {
    const std::string prefix = "cycles-ge:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string value = text.substr(prefix.size());
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw std::invalid_argument("bad length in '" + text + "'");
        return long_cycles(k);
    }
    return single(parse_pattern(text));
}

namespace {

struct PathSearch {
    const Graph& g;
    int target;  // stop once best reaches this
    int best = 0;

    void extend(int v, VertexSet visited, int length) {
        if (length > best) best = length;
        if (best >= target) return;
        const VertexSet open = g.vertices() & ~visited;
        // every further edge lands on a vertex reachable from v through open vertices
        const int reach = set_size(g.reachable(v, open | singleton(v))) - 1;
        if (length + reach <= best) return;
        VertexSet next = g.neighbors(v) & open;
        while (next != 0 && best < target) {
            const int w = first_vertex(next);
            next &= next - 1;
            extend(w, visited | singleton(w), length + 1);
        }
    }
};

struct CycleSearch {
    const Graph& g;
    int target;
    int best = 0;
    int start = 0;
    VertexSet allowed = 0;

    void extend(int v, VertexSet visited, int vertices_on_path) {
        if (vertices_on_path >= 3 && g.has_edge(v, start) && vertices_on_path > best) best = vertices_on_path;
        if (best >= target) return;
        const VertexSet open = allowed & ~visited;
        const int reach = set_size(g.reachable(v, open | singleton(v))) - 1;
        if (vertices_on_path + reach <= best) return;
        VertexSet next = g.neighbors(v) & open;
        while (next != 0 && best < target) {
            const int w = first_vertex(next);
            next &= next - 1;
            extend(w, visited | singleton(w), vertices_on_path + 1);
        }
    }
};

}  // namespace

int longest_path_edges(const Graph& g, int cutoff) {
    const int n = g.vertex_count();
    PathSearch search{g, cutoff > 0 ? cutoff : n};
    for (const VertexSet comp : g.components()) {
        if (set_size(comp) - 1 <= search.best) continue;
        for_each_vertex(comp, [&](int v) {
            if (search.best < search.target && search.best < set_size(comp) - 1) {
                search.extend(v, singleton(v), 0);
            }
        });
        if (search.best >= search.target) break;
    }
    return search.best;
}

int circumference(const Graph& g, int cutoff) {
    const int n = g.vertex_count();
    CycleSearch search{g, cutoff > 0 ? cutoff : n};
    for (int s = 0; s < n && search.best < search.target; ++s) {
        search.start = s;
        search.allowed = g.vertices() & ~low_bits(s + 1);
        if (set_size(search.allowed) + 1 <= search.best) break;
        search.extend(s, singleton(s), 1);
    }
    return search.best;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<Edge> stack;
    std::vector<VertexSet> found;
    int clock = 0;

    void visit(int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++clock;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (w == parent) return;
            auto& dw = disc[static_cast<std::size_t>(w)];
            auto& lv = low[static_cast<std::size_t>(v)];
            if (dw == 0) {
                stack.emplace_back(v, w);
                visit(w, v);
                lv = std::min(lv, low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    VertexSet block = 0;
                    while (true) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        block |= singleton(e.first) | singleton(e.second);
                        if (e == Edge{v, w}) break;
                    }
                    found.push_back(block);
                }
            } else if (dw < disc[static_cast<std::size_t>(v)]) {
                stack.emplace_back(v, w);
                lv = std::min(lv, dw);
            }
        });
    }
};

}  // namespace

std::vector<VertexSet> blocks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    BlockFinder finder{g, std::vector<int>(n, 0), std::vector<int>(n, 0), {}, {}};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (finder.disc[static_cast<std::size_t>(v)] == 0) finder.visit(v, -1);
    }
    std::sort(finder.found.begin(), finder.found.end());
    return finder.found;
}

bool is_free(const Graph& g, const Forbidden& f) {
    if (f.kind == Forbidden::Kind::long_cycles) return circumference(g, f.k) < f.k;
    if (f.pattern.kind == MotifKind::path) {
        const int k = f.pattern.size;
        if (k == 0) return g.vertex_count() == 0;
        return longest_path_edges(g, k) < k;
    }
    return !contains_copy(f.pattern.graph, g);
}

}  // namespace turanlab

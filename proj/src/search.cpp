#include "turanlab/search.hpp"

#include <algorithm>
#include <set>

#include "turanlab/parallel.hpp"

namespace turanlab {

std::string to_string(SearchMode mode) { return mode == SearchMode::exhaustive ? "exhaustive" : "stream"; }

// ---------------------------------------------------------------------------
// canonical form

namespace {

// Column j of the graph6 bit vector under a relabeling holds the adjacencies
// of the vertex placed at position j to positions 0..j-1. Packing them with
// position 0 as the most significant bit makes integer order agree with
// lexicographic order, and for a fixed prefix only the candidates giving the
// smallest column can lead to the minimum.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
        order_.resize(static_cast<std::size_t>(n_));
        cols_.resize(static_cast<std::size_t>(n_));
    }

    Graph run() {
        place(0, g_.vertices());
        Graph out(n_);
        for (int j = 0; j < n_; ++j) {
            for (int i = 0; i < j; ++i) {
                if ((best_cols_[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1U) out.add_edge(i, j);
            }
        }
        return out;
    }

private:
    std::uint64_t column(int j, int w) const {
        std::uint64_t bits = 0;
        for (int i = 0; i < j; ++i) bits = (bits << 1) | (g_.has_edge(order_[static_cast<std::size_t>(i)], w) ? 1U : 0U);
        return bits;
    }

    // true when cols_[0..j] is lexicographically above the best found so far
    bool behind(int j) const {
        if (best_cols_.empty()) return false;
        for (int i = 0; i <= j; ++i) {
            const auto c = cols_[static_cast<std::size_t>(i)];
            const auto b = best_cols_[static_cast<std::size_t>(i)];
            if (c != b) return c > b;
        }
        return false;
    }

    void place(int j, VertexSet unused) {
        if (j == n_) {
            if (best_cols_.empty() || cols_ < best_cols_) best_cols_ = cols_;
            return;
        }
        std::uint64_t smallest = ~std::uint64_t{0};
        for_each_vertex(unused, [&](int w) { smallest = std::min(smallest, column(j, w)); });
        cols_[static_cast<std::size_t>(j)] = smallest;
        for_each_vertex(unused, [&](int w) {
            if (column(j, w) != smallest || behind(j)) return;
            order_[static_cast<std::size_t>(j)] = w;
            place(j + 1, unused & ~singleton(w));
        });
    }

    const Graph& g_;
    int n_;
    std::vector<int> order_;
    std::vector<std::uint64_t> cols_;
    std::vector<std::uint64_t> best_cols_;
};

}  // namespace

std::string canonical_graph6(const Graph& g) { return to_graph6(Canonizer(g).run()); }

// ---------------------------------------------------------------------------
// exhaustive search

namespace {

struct Partial {
    std::optional<Count> best;
    std::set<std::string> witnesses;
    std::uint64_t scanned = 0;

    void offer(const Graph& g, Count c) {
        if (best && c < *best) return;
        if (!best || c > *best) {
            best = c;
            witnesses.clear();
        }
        witnesses.insert(canonical_graph6(g));
    }
};

struct EdgeWalker {
    const Pattern& target;
    const Forbidden& forbidden;
    bool connected_only;
    const std::vector<Edge>& slots;
    Graph g;
    Partial out;

    void walk(std::size_t depth) {
        if (depth == slots.size()) {
            ++out.scanned;
            if (connected_only && !g.is_connected()) return;
            out.offer(g, count_motif(target, g));
            return;
        }
        walk(depth + 1);
        const auto [u, v] = slots[depth];
        g.add_edge(u, v);
        if (is_free(g, forbidden)) walk(depth + 1);
        g.remove_edge(u, v);
    }
};

ExtremalRecord merge(std::vector<Partial>& parts) {
    ExtremalRecord rec;
    std::set<std::string> witnesses;
    for (auto& p : parts) {
        rec.graphs_scanned += p.scanned;
        if (!p.best) continue;
        if (!rec.max_count || *p.best > *rec.max_count) {
            rec.max_count = p.best;
            witnesses.clear();
        }
        if (*p.best == *rec.max_count) witnesses.insert(p.witnesses.begin(), p.witnesses.end());
    }
    rec.witnesses.assign(witnesses.begin(), witnesses.end());
    return rec;
}

}  // namespace

ExtremalRecord brute_force_ex(int n, const Pattern& target, const Forbidden& forbidden, const SearchOptions& options) {
    const int cap = options.allow_n8 ? kSearchVertexOverrideCap : kSearchVertexCap;
    if (n < 1 || n > cap) {
        throw std::invalid_argument("exhaustive search supports 1 <= n <= " + std::to_string(cap) +
                                    (options.allow_n8 ? "" : " (n = 8 needs the override)"));
    }
    if (target.graph.vertex_count() > kSearchTargetCap) {
        throw std::invalid_argument("exhaustive search needs a target with at most 6 vertices");
    }
    const std::vector<Edge> slots = complete_graph(n).edges();
    const std::size_t fixed = std::min<std::size_t>(slots.size(), 8);
    const std::size_t tasks = std::size_t{1} << fixed;

    auto parts = parallel_map(tasks, options.threads, [&](std::size_t prefix) {
        Graph g(n);
        for (std::size_t i = 0; i < fixed; ++i) {
            if ((prefix >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
        }
        EdgeWalker walker{target, forbidden, options.connected_only, slots, g, {}};
        if (is_free(g, forbidden)) walker.walk(fixed);
        return walker.out;
    });

    ExtremalRecord rec = merge(parts);
    rec.n = n;
    rec.target = target;
    rec.forbidden = forbidden;
    rec.connected_only = options.connected_only;
    rec.mode = SearchMode::exhaustive;
    return rec;
}

// ---------------------------------------------------------------------------
// streams

StreamError::StreamError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

ExtremalRecord stream_ex(std::istream& in, const Pattern& target, const Forbidden& forbidden, bool connected_only) {
    Partial part;
    std::optional<int> n;
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t records = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line.front() == '>') continue;
        Graph g(0);
        try {
            g = parse_graph6(line);
        } catch (const std::exception& e) {
            throw StreamError(lineno, e.what());
        }
        if (n && *n != g.vertex_count()) {
            throw StreamError(lineno, "record has " + std::to_string(g.vertex_count()) + " vertices, stream has " +
                                          std::to_string(*n));
        }
        n = g.vertex_count();
        ++records;
        if (!is_free(g, forbidden)) continue;
        ++part.scanned;
        if (connected_only && !g.is_connected()) continue;
        part.offer(g, count_motif(target, g));
    }
    if (records == 0) throw StreamError(0, "empty population");
    std::vector<Partial> parts{std::move(part)};
    ExtremalRecord rec = merge(parts);
    rec.graphs_scanned = records;
    rec.n = *n;
    rec.target = target;
    rec.forbidden = forbidden;
    rec.connected_only = connected_only;
    rec.mode = SearchMode::stream;
    return rec;
}

}  // namespace turanlab

#pragma once

#include <cstdint>
#include <string>

#include "turanlab/graph.hpp"

namespace turanlab {

using Count = std::uint64_t;

/// Largest motif accepted by the generic counter and automorphism_order.
inline constexpr int kMaxPatternVertices = 12;

enum class MotifKind { path, cycle, star, clique, matching_triangle, matching_k4, matching_two_triangles, custom };

/// A motif together with the order of its automorphism group. `kind` and
/// `size` remember how the motif was built so counters can dispatch to the
/// specialized routines; `custom` motifs always use the generic counter.
struct Pattern {
    Graph graph;
    Count aut_order = 1;
    MotifKind kind = MotifKind::custom;
    int size = 0;

    /// Short id such as "path:3", "m2:2" or "g6:Bw".
    std::string name() const;
};

/// Path with `edges` edges (edges + 1 vertices).
Pattern make_path(int edges);
/// Throws std::invalid_argument for length < 3.
Pattern make_cycle(int length);
/// Star with `leaves` leaves; make_star(1) is a single edge.
Pattern make_star(int leaves);
Pattern make_clique(int r);

enum class MatchingVariant { triangle, k4, two_triangles };

/// Matching plus disjoint dense part: (l-1) edges + triangle, (l-1) edges +
/// K_4, or (l-2) edges + two triangles. Throws std::invalid_argument when l is
/// below 1 (triangle, k4) or 2 (two_triangles).
Pattern make_matching_structure(MatchingVariant variant, int l);

/// Wraps an arbitrary graph (at most 12 vertices).
Pattern make_pattern(const Graph& g);

/// Inverse of Pattern::name: "path:3", "cycle:5", "star:4", "clique:3",
/// "m1:2", "m2:1", "m3:2" or "g6:<graph6>". Throws std::invalid_argument.
Pattern parse_pattern(const std::string& text);

/// Number of adjacency-preserving permutations of g. Throws
/// std::invalid_argument above 12 vertices.
Count automorphism_order(const Graph& g);

/// Injective maps V(pattern) -> V(host) sending edges to edges. With
/// `stop_at_first` the search returns 0 or 1.
Count count_embeddings(const Graph& pattern, const Graph& host, bool stop_at_first = false);

/// Non-induced copies of p in host: embeddings / aut_order.
Count count_copies(const Pattern& p, const Graph& host);

bool contains_copy(const Graph& pattern, const Graph& host);

/// Copies of the path with l edges. l = 0 gives the vertex count.
Count count_paths(int l, const Graph& g);
/// Copies of the cycle of length l >= 3.
Count count_cycles(int l, const Graph& g);
/// Copies of K_r, r >= 1, by recursion into forward neighborhoods.
Count count_cliques(int r, const Graph& g);
/// Copies of the star with r leaves: sum of C(d(v), r) for r >= 2 and e(G)
/// for r = 1, where the two orientations of an edge coincide.
Count count_stars(int r, const Graph& g);

/// Dispatches to the specialized counter for the pattern's kind and falls back
/// to count_copies otherwise.
Count count_motif(const Pattern& p, const Graph& host);

/// Exact independence number; throws std::invalid_argument above 40 vertices.
int independence_number(const Graph& g);

/// Binomial coefficient in 64 bits (caller keeps arguments small).
Count choose(Count n, Count k);

}  // namespace turanlab

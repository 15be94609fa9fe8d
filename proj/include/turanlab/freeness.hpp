#pragma once

#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

namespace turanlab {

/// What a graph must avoid: a single motif, or every cycle of length >= k.
struct Forbidden {
    enum class Kind { single_pattern, long_cycles };

    Kind kind = Kind::single_pattern;
    Pattern pattern;
    int k = 0;

    static Forbidden single(Pattern p);
    /// Throws std::invalid_argument for k < 3.
    static Forbidden long_cycles(int k);

    /// "path:5", "cycles-ge:4", "g6:...".
    std::string name() const;
    /// Inverse of name(); any pattern id is accepted as a single motif.
    static Forbidden parse(const std::string& text);
};

/// Maximum number of edges on a simple path (0 for edgeless graphs).
/// Exponential in the worst case; intended for n <= 20. With `cutoff` > 0 the
/// search stops as soon as a path with `cutoff` edges is found and returns
/// that value.
int longest_path_edges(const Graph& g, int cutoff = 0);

/// Length of the longest cycle, 0 for forests. `cutoff` as above.
int circumference(const Graph& g, int cutoff = 0);

/// Vertex sets of the blocks (maximal 2-connected pieces and bridges),
/// sorted. Isolated vertices form no block.
std::vector<VertexSet> blocks(const Graph& g);

/// True iff g contains no copy of the forbidden motif (or no cycle of length
/// >= k). Path motifs go through longest_path_edges.
bool is_free(const Graph& g, const Forbidden& f);

}  // namespace turanlab

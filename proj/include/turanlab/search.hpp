#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turanlab/freeness.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

namespace turanlab {

enum class SearchMode { exhaustive, stream };

std::string to_string(SearchMode mode);

/// Result of an exact extremal search: the largest number of target copies
/// over admissible graphs and every extremal graph up to isomorphism.
struct ExtremalRecord {
    int n = 0;
    Pattern target;
    Forbidden forbidden;
    bool connected_only = false;
    /// Empty when no graph was admissible.
    std::optional<Count> max_count;
    /// Canonical graph6 strings, sorted.
    std::vector<std::string> witnesses;
    /// Admissible (forbidden-free) labeled graphs or stream records examined.
    std::uint64_t graphs_scanned = 0;
    SearchMode mode = SearchMode::exhaustive;
};

inline constexpr int kSearchVertexCap = 7;
inline constexpr int kSearchVertexOverrideCap = 8;
inline constexpr int kSearchTargetCap = 6;

struct SearchOptions {
    bool connected_only = false;
    /// 0 means default_threads().
    int threads = 0;
    /// Permits n = 8 (2^28 labeled graphs; minutes rather than seconds).
    bool allow_n8 = false;
};

/// Exact maximum over all labeled n-vertex graphs. Edges are decided in
/// graph6 order and a branch is abandoned as soon as adding an edge creates a
/// forbidden copy. Throws std::invalid_argument past the size caps.
ExtremalRecord brute_force_ex(int n, const Pattern& target, const Forbidden& forbidden, const SearchOptions& options = {});

/// Raised for malformed or inconsistent stream records; carries the line.
class StreamError : public std::runtime_error {
public:
    StreamError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Same contract as brute_force_ex over a graph6 stream (one record per line,
/// lines starting with '>' skipped). Throws StreamError on a bad record, on
/// mixed vertex counts and when the stream holds no record at all.
ExtremalRecord stream_ex(std::istream& in, const Pattern& target, const Forbidden& forbidden, bool connected_only = false);

/// Lexicographically smallest graph6 string over all vertex relabelings.
std::string canonical_graph6(const Graph& g);

}  // namespace turanlab

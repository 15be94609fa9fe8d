#pragma once

#include <string>
#include <utility>
#include <vector>

#include "turanlab/search.hpp"

namespace turanlab {

enum class CellStatus { pass, fail, diagnostic };

std::string to_string(CellStatus s);

/// One grid cell of a verification suite. `params` keeps insertion order so
/// reports are byte-stable.
struct SuiteCell {
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    std::string actual;
    CellStatus status = CellStatus::diagnostic;
    std::vector<std::string> witnesses;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCell> cells;

    std::size_t count(CellStatus s) const;
    /// No cell failed.
    bool passed() const { return count(CellStatus::fail) == 0; }
};

/// Grid overrides. Empty vectors keep the suite defaults.
struct SuiteGrid {
    std::vector<int> n;
    std::vector<int> k;
    std::vector<int> r;
    std::vector<int> l;
    int threads = 0;
};

const std::vector<std::string>& suite_ids();

/// Runs one suite. Throws std::invalid_argument for an unknown id.
SuiteReport verify_suite(const std::string& suite_id, const SuiteGrid& grid = {});

/// True iff every component of g with an edge is K_k and there are no
/// isolated vertices.
bool is_clique_union(const Graph& g, int k);
/// True iff g is connected and every block is a clique on `size` vertices.
bool blocks_are_cliques(const Graph& g, int size);

}  // namespace turanlab

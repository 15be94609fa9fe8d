#pragma once

#include <string>

#include "turanlab/search.hpp"
#include "turanlab/verify.hpp"

namespace turanlab {

inline constexpr int kReportSchemaVersion = 1;

/// JSON documents end with a newline; key order is fixed.
std::string to_json(const SuiteReport& report);
std::string to_json(const ExtremalRecord& record);

/// Header line starting with '#', then one line per cell.
std::string to_tsv(const SuiteReport& report);
/// key<TAB>value lines.
std::string to_tsv(const ExtremalRecord& record);

}  // namespace turanlab

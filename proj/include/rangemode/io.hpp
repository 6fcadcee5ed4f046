#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "rangemode/grid.hpp"
#include "rangemode/ranked_array.hpp"
#include "rangemode/types.hpp"

namespace rangemode {

using LoadedArray = std::variant<RankedArray, GridArray>;

// Dataset files are UTF-8 text of whitespace-separated signed decimal
// integers. A grid file starts with a line `dims n_1 ... n_d` followed by
// the row-major elements; anything else is a flat 1-D token list.
// Throws DataFormatError (with line/column) or DimensionMismatchError.
LoadedArray load_array(const std::filesystem::path& path);

// Query files hold one query per line: `i j` for 1-D data,
// `i_1 ... i_d j_1 ... j_d` for grids. Rows are returned unvalidated.
std::vector<std::vector<Token>> load_query_rows(
    const std::filesystem::path& path);

// In-memory parsers backing the file loaders.
LoadedArray parse_array_text(const std::string& text);
std::vector<std::vector<Token>> parse_query_text(const std::string& text);

}  // namespace rangemode

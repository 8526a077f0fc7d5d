#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trustmodel/matrix.hpp"

namespace trustmodel {

/// A parsed matrix plus the service names found alongside it (empty when
/// the source carried none).
struct MatrixInput {
    ComparisonMatrix matrix;
    std::vector<std::string> names;
};

/// Parses one comparison value: a decimal ("0.5", "3") or a fraction
/// ("1/3"). Throws std::invalid_argument on anything else.
double parse_comparison_value(std::string_view text);

/// CSV: n rows x n columns, optionally preceded by a header row of
/// service names (detected by failing to parse as numbers). Throws on
/// ragged or non-square grids.
MatrixInput load_matrix_csv(std::istream& in);

/// Structured form: {"names": [...], "upper": [a12, a13, ..., a1n, a23, ...]}
/// with entries given as numbers or fraction strings. "names" is optional;
/// the order is derived from the entry count. The lower triangle is
/// completed by reciprocity.
MatrixInput load_matrix_json(std::istream& in);

/// Dispatches on the extension: ".json" goes to the structured loader,
/// anything else is read as CSV.
MatrixInput load_matrix_file(const std::filesystem::path& path);

}  // namespace trustmodel

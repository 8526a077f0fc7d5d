#include "trustmodel/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace trustmodel {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.emplace_back(trim(cell));
    }
    return cells;
}

double json_comparison_value(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_comparison_value(v.get<std::string>());
    throw std::invalid_argument("matrix: comparison entries must be numbers or fractions");
}

}  // namespace

double parse_comparison_value(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty comparison value");
    }
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return parse_number(s);
    }
    const double num = parse_number(trim(s.substr(0, slash)));
    const double den = parse_number(trim(s.substr(slash + 1)));
    if (den == 0.0) {
        throw std::invalid_argument("fraction with zero denominator: '" + std::string(s) + "'");
    }
    return num / den;
}

MatrixInput load_matrix_csv(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        lines.push_back(split_csv_line(line));
    }
    if (lines.empty()) {
        throw std::invalid_argument("matrix: empty file");
    }

    std::vector<std::string> names;
    std::size_t first_row = 0;
    // A header is any first row that does not parse as numbers.
    try {
        for (const auto& cell : lines[0]) parse_comparison_value(cell);
    } catch (const std::invalid_argument&) {
        names.assign(lines[0].begin(), lines[0].end());
        first_row = 1;
    }

    std::vector<std::vector<double>> rows;
    for (std::size_t r = first_row; r < lines.size(); ++r) {
        std::vector<double> row;
        row.reserve(lines[r].size());
        for (const auto& cell : lines[r]) {
            row.push_back(parse_comparison_value(cell));
        }
        rows.push_back(std::move(row));
    }
    if (!names.empty() && rows.size() != names.size()) {
        throw std::invalid_argument("matrix: header has " + std::to_string(names.size()) +
                                    " names but there are " + std::to_string(rows.size()) +
                                    " rows");
    }
    return {ComparisonMatrix::from_rows(rows), std::move(names)};
}

MatrixInput load_matrix_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.is_object() || !j.contains("upper")) {
        throw std::invalid_argument("matrix: structured form needs an \"upper\" array");
    }
    const auto& upper_json = j.at("upper");
    if (!upper_json.is_array()) {
        throw std::invalid_argument("matrix: \"upper\" must be an array");
    }
    std::vector<double> upper;
    upper.reserve(upper_json.size());
    for (const auto& v : upper_json) {
        upper.push_back(json_comparison_value(v));
    }
    // k = n*(n-1)/2  =>  n = (1 + sqrt(1 + 8k)) / 2
    std::size_t order = 1;
    while (order * (order - 1) / 2 < upper.size()) ++order;
    if (order * (order - 1) / 2 != upper.size()) {
        throw std::invalid_argument("matrix: upper triangle entry count is not n*(n-1)/2");
    }

    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& v : j.at("names")) {
            names.push_back(v.get<std::string>());
        }
        if (names.size() != order) {
            throw std::invalid_argument("matrix: name count does not match the derived order");
        }
    }
    return {ComparisonMatrix::from_upper_triangle(order, upper), std::move(names)};
}

MatrixInput load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("matrix: cannot read " + path.string());
    }
    if (path.extension() == ".json") {
        return load_matrix_json(in);
    }
    return load_matrix_csv(in);
}

}  // namespace trustmodel

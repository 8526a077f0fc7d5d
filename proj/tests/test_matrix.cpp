#include <doctest.h>

#include <sstream>

#include "trustmodel/matrix.hpp"
#include "trustmodel/matrix_io.hpp"

using namespace trustmodel;

namespace {

// The published nine-service comparison table: service i vs j follows the
// ladder a_ij = j - i + 1 above the diagonal, reciprocal below.
ComparisonMatrix ladder9() {
    ComparisonMatrix m = ComparisonMatrix::uniform(9);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            if (j > i) {
                m.at(i, j) = static_cast<double>(j - i + 1);
            } else if (j < i) {
                m.at(i, j) = 1.0 / static_cast<double>(i - j + 1);
            }
        }
    }
    return m;
}

}  // namespace

TEST_CASE("ladder matrix is valid with no warnings") {
    const auto report = validate_matrix(ladder9());
    CHECK(report.ok());
    CHECK(report.warnings.empty());
}

TEST_CASE("uniform matrix is valid") {
    const auto report = validate_matrix(ComparisonMatrix::uniform(3));
    CHECK(report.ok());
    CHECK(report.warnings.empty());
}

TEST_CASE("reciprocity violation is fatal") {
    // a_12 = 2 against a_21 = 3: the pair multiplies to 6, not 1.
    auto m = ComparisonMatrix::from_rows({{1, 2}, {3, 1}});
    const auto report = validate_matrix(m);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.kind == ValidationIssue::Kind::ReciprocityBroken && v.row == 0 && v.col == 1) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("non-positive entries and bad diagonals are fatal") {
    auto m = ComparisonMatrix::uniform(2);
    m.at(0, 1) = -3.0;
    m.at(1, 1) = 2.0;
    const auto report = validate_matrix(m);
    REQUIRE_FALSE(report.ok());
    bool nonpositive = false, diagonal = false;
    for (const auto& v : report.violations) {
        if (v.kind == ValidationIssue::Kind::NonPositiveEntry) nonpositive = true;
        if (v.kind == ValidationIssue::Kind::NonUnitDiagonal) diagonal = true;
    }
    CHECK(nonpositive);
    CHECK(diagonal);
}

TEST_CASE("order above the table coverage is rejected") {
    const auto report = validate_matrix(ComparisonMatrix::uniform(16));
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().kind == ValidationIssue::Kind::OrderOutOfRange);
}

TEST_CASE("off-scale values warn but do not reject") {
    auto m = ComparisonMatrix::uniform(2);
    m.at(0, 1) = 2.5;
    m.at(1, 0) = 1.0 / 2.5;
    const auto report = validate_matrix(m);
    CHECK(report.ok());
    CHECK(report.warnings.size() == 2);
    CHECK(report.warnings.front().kind == ValidationIssue::Kind::NonSaatyValue);
}

TEST_CASE("saaty scale membership") {
    CHECK(is_saaty_value(1.0));
    CHECK(is_saaty_value(9.0));
    CHECK(is_saaty_value(1.0 / 7.0));
    CHECK_FALSE(is_saaty_value(2.5));
    CHECK_FALSE(is_saaty_value(10.0));
    CHECK_FALSE(is_saaty_value(1.0 / 99.0));
}

TEST_CASE("non-square input is rejected at construction") {
    CHECK_THROWS_AS(ComparisonMatrix::from_rows({{1, 2}, {0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(ComparisonMatrix::from_rows({}), std::invalid_argument);
}

TEST_CASE("upper triangle completion restores reciprocity") {
    const auto m = ComparisonMatrix::from_upper_triangle(3, {2, 4, 3});
    CHECK(m.at(0, 1) == 2.0);
    CHECK(m.at(1, 0) == 0.5);
    CHECK(m.at(0, 2) == 4.0);
    CHECK(m.at(2, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(m.at(1, 1) == 1.0);
    CHECK(validate_matrix(m).ok());

    CHECK_THROWS_AS(ComparisonMatrix::from_upper_triangle(3, {2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ComparisonMatrix::from_upper_triangle(3, {2, -4, 3}),
                    std::invalid_argument);
}

TEST_CASE("expansion keeps the base cells and fills reciprocals") {
    const auto m = ladder9().expanded_with({0.2, 0.25, 1.0 / 3, 0.5, 1.5, 2, 3, 4, 5});
    REQUIRE(m.order() == 10);
    CHECK(m.at(9, 9) == 1.0);
    CHECK(m.at(9, 0) == 0.2);
    CHECK(m.at(0, 9) == doctest::Approx(5.0));
    CHECK(validate_matrix(m).ok());
    CHECK_THROWS_AS(ladder9().expanded_with({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ladder9().expanded_with({0, 1, 1, 1, 1, 1, 1, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("comparison value parsing") {
    CHECK(parse_comparison_value("3") == 3.0);
    CHECK(parse_comparison_value(" 0.5 ") == 0.5);
    CHECK(parse_comparison_value("1/3") == doctest::Approx(1.0 / 3.0));
    CHECK(parse_comparison_value("1 / 8") == 0.125);
    CHECK_THROWS_AS(parse_comparison_value("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_comparison_value("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_comparison_value(""), std::invalid_argument);
}

TEST_CASE("csv matrix with a header row of names") {
    std::istringstream in(
        "mail,web,db\n"
        "1,3,5\n"
        "1/3,1,3\n"
        "1/5,1/3,1\n");
    const auto input = load_matrix_csv(in);
    REQUIRE(input.matrix.order() == 3);
    CHECK(input.names == std::vector<std::string>{"mail", "web", "db"});
    CHECK(input.matrix.at(0, 1) == 3.0);
    CHECK(input.matrix.at(2, 0) == doctest::Approx(0.2));
}

TEST_CASE("csv matrix without header") {
    std::istringstream in("1,2\n1/2,1\n");
    const auto input = load_matrix_csv(in);
    CHECK(input.matrix.order() == 2);
    CHECK(input.names.empty());
}

TEST_CASE("ragged csv is rejected") {
    std::istringstream in("1,2,3\n1/2,1\n");
    CHECK_THROWS_AS(load_matrix_csv(in), std::invalid_argument);
}

TEST_CASE("structured json matrix") {
    std::istringstream in(R"({"names":["a","b","c"],"upper":["3","1/2",2]})");
    const auto input = load_matrix_json(in);
    REQUIRE(input.matrix.order() == 3);
    CHECK(input.matrix.at(0, 1) == 3.0);
    CHECK(input.matrix.at(0, 2) == 0.5);
    CHECK(input.matrix.at(1, 2) == 2.0);
    CHECK(input.matrix.at(2, 1) == 0.5);
    CHECK(input.names.size() == 3);
    CHECK(validate_matrix(input.matrix).ok());
}

TEST_CASE("structured json with wrong entry count is rejected") {
    std::istringstream in(R"({"upper":[1,2]})");
    CHECK_THROWS_AS(load_matrix_json(in), std::invalid_argument);
}

#include "trustmodel/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace trustmodel {

namespace {

std::string cell_message(const char* what, std::size_t i, std::size_t j, double v) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s at (%zu,%zu): %.9g", what, i + 1, j + 1, v);
    return buf;
}

}  // namespace

ComparisonMatrix::ComparisonMatrix(std::size_t order)
    : order_(order), cells_(order * order, 1.0) {}

ComparisonMatrix ComparisonMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) {
        throw std::invalid_argument("comparison matrix: empty input");
    }
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw std::invalid_argument("comparison matrix: input is not square");
        }
    }
    ComparisonMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

ComparisonMatrix ComparisonMatrix::from_upper_triangle(std::size_t order,
                                                       const std::vector<double>& upper) {
    if (order == 0) {
        throw std::invalid_argument("comparison matrix: order must be positive");
    }
    if (upper.size() != order * (order - 1) / 2) {
        throw std::invalid_argument("comparison matrix: upper triangle needs n*(n-1)/2 entries");
    }
    ComparisonMatrix m(order);
    std::size_t k = 0;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j, ++k) {
            const double v = upper[k];
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument(
                    cell_message("comparison matrix: non-positive entry", i, j, v));
            }
            m.at(i, j) = v;
            m.at(j, i) = 1.0 / v;
        }
    }
    return m;
}

ComparisonMatrix ComparisonMatrix::uniform(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("comparison matrix: order must be positive");
    }
    return ComparisonMatrix(order);
}

ComparisonMatrix ComparisonMatrix::expanded_with(const std::vector<double>& vs_existing) const {
    if (vs_existing.size() != order_) {
        throw std::invalid_argument("expanded_with: need one comparison per existing service");
    }
    ComparisonMatrix out(order_ + 1);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            out.at(i, j) = at(i, j);
        }
    }
    for (std::size_t j = 0; j < order_; ++j) {
        const double v = vs_existing[j];
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(
                cell_message("expanded_with: non-positive comparison", order_, j, v));
        }
        out.at(order_, j) = v;
        out.at(j, order_) = 1.0 / v;
    }
    out.at(order_, order_) = 1.0;
    return out;
}

bool is_saaty_value(double v) {
    for (int k = 1; k <= 9; ++k) {
        if (std::fabs(v - static_cast<double>(k)) <= 1e-9) return true;
        if (std::fabs(v - 1.0 / static_cast<double>(k)) <= 1e-9) return true;
    }
    return false;
}

ValidationReport validate_matrix(const ComparisonMatrix& m) {
    ValidationReport report;
    const std::size_t n = m.order();

    if (n < ComparisonMatrix::kMinOrder || n > ComparisonMatrix::kMaxOrder) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "order %zu outside supported range [%zu,%zu]", n,
                      ComparisonMatrix::kMinOrder, ComparisonMatrix::kMaxOrder);
        report.violations.push_back({ValidationIssue::Kind::OrderOutOfRange, 0, 0, buf});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m.at(i, j);
            if (!(v > 0.0) || !std::isfinite(v)) {
                report.violations.push_back({ValidationIssue::Kind::NonPositiveEntry, i, j,
                                             cell_message("entry must be positive", i, j, v)});
                continue;
            }
            if (i == j && v != 1.0) {
                report.violations.push_back({ValidationIssue::Kind::NonUnitDiagonal, i, j,
                                             cell_message("diagonal entry must be 1", i, j, v)});
            }
            if (!is_saaty_value(v)) {
                report.warnings.push_back(
                    {ValidationIssue::Kind::NonSaatyValue, i, j,
                     cell_message("value outside the 1/9..9 judgement scale", i, j, v)});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = m.at(i, j);
            const double b = m.at(j, i);
            if (!(a > 0.0) || !(b > 0.0)) continue;  // already fatal above
            if (std::fabs(a * b - 1.0) > kReciprocityTolerance) {
                report.violations.push_back(
                    {ValidationIssue::Kind::ReciprocityBroken, i, j,
                     cell_message("reciprocity broken, a_ij*a_ji", i, j, a * b)});
            }
        }
    }

    return report;
}

}  // namespace trustmodel

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trustmodel {

/// Pairwise comparison matrix for service sensitivity ranking.
///
/// Cell (i, j) holds the relative importance of service i compared with
/// service j. A well-formed matrix is strictly positive, has a unit
/// diagonal, and is reciprocal (a_ji = 1/a_ij). Construction does not
/// enforce these; run validate_matrix() to get a full report, so that
/// malformed input can be diagnosed rather than rejected blindly.
class ComparisonMatrix {
public:
    /// Smallest and largest supported order (bounded by the random-index
    /// table used for consistency checking).
    static constexpr std::size_t kMinOrder = 1;
    static constexpr std::size_t kMaxOrder = 15;

    /// Builds from a full square grid. Throws std::invalid_argument when
    /// the grid is empty or not square.
    static ComparisonMatrix from_rows(const std::vector<std::vector<double>>& rows);

    /// Builds from the strict upper triangle in row-major order
    /// (a_12, a_13, ..., a_1n, a_23, ...). The diagonal is set to 1 and
    /// the lower triangle completed by reciprocity. Throws when the entry
    /// count does not match order*(order-1)/2 or a value is not positive.
    static ComparisonMatrix from_upper_triangle(std::size_t order,
                                                const std::vector<double>& upper);

    /// All-ones matrix: every pair judged equally important.
    static ComparisonMatrix uniform(std::size_t order);

    std::size_t order() const { return order_; }

    double at(std::size_t i, std::size_t j) const { return cells_[i * order_ + j]; }
    double& at(std::size_t i, std::size_t j) { return cells_[i * order_ + j]; }

    /// Returns the (n+1)x(n+1) matrix obtained by appending one service
    /// whose comparisons against the existing ones are `vs_existing`
    /// (f(new, X_j) for j = 1..n). The new column is filled with
    /// reciprocals and the new diagonal cell with 1.
    /// Throws std::invalid_argument on size mismatch or non-positive values.
    ComparisonMatrix expanded_with(const std::vector<double>& vs_existing) const;

private:
    explicit ComparisonMatrix(std::size_t order);

    std::size_t order_;
    std::vector<double> cells_;
};

struct ValidationIssue {
    enum class Kind {
        NonPositiveEntry,
        NonUnitDiagonal,
        ReciprocityBroken,
        OrderOutOfRange,
        NonSaatyValue,
    };

    Kind kind;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string message;
};

/// Outcome of structural validation. `violations` are fatal; `warnings`
/// (values outside the 1/9..9 judgement scale) are informational only,
/// since reciprocal completion of edited matrices routinely produces
/// off-scale values.
struct ValidationReport {
    std::vector<ValidationIssue> violations;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return violations.empty(); }
};

/// Relative tolerance for the reciprocity check: |a_ij * a_ji - 1|.
inline constexpr double kReciprocityTolerance = 1e-9;

/// Checks positivity, unit diagonal, reciprocity and order coverage.
/// Entries outside the discrete judgement scale are reported as warnings.
ValidationReport validate_matrix(const ComparisonMatrix& m);

/// True when v matches one of the 17 scale values {1/9..1/2, 1..9}.
bool is_saaty_value(double v);

}  // namespace trustmodel

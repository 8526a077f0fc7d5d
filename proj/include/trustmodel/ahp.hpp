#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trustmodel/catalog.hpp"
#include "trustmodel/matrix.hpp"

namespace trustmodel {

/// Priority weights extracted from a comparison matrix by the root
/// (geometric-mean) method. `weights` sums to 1; `geometric_means` keeps
/// the unnormalized n-th roots of the row products.
struct WeightVector {
    std::vector<double> weights;
    std::vector<double> geometric_means;

    std::size_t size() const { return weights.size(); }
};

struct ConsistencyReport {
    double lambda_max = 0.0;  // approximate principal eigenvalue
    double ci = 0.0;          // consistency index (lambda_max - n) / (n - 1)
    double ri = 0.0;          // tabulated random index for the order
    double cr = 0.0;          // consistency ratio ci / ri
    bool accepted = false;    // cr < 0.1
};

/// Average random consistency index per matrix order 1..15.
inline constexpr std::array<double, 15> kRandomIndex = {
    0.0, 0.0, 0.52, 0.89, 1.12, 1.26, 1.36, 1.41, 1.46, 1.49, 1.52, 1.54, 1.56, 1.58, 1.59,
};

/// Acceptance boundary: matrices with cr >= 0.1 are rejected.
inline constexpr double kConsistencyLimit = 0.1;

/// Thrown when a matrix fails the consistency gate. Carries the full
/// report so callers can show lambda_max / CI / CR.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const ConsistencyReport& report);

    const ConsistencyReport& report() const { return report_; }

private:
    ConsistencyReport report_;
};

/// Component i is the n-th root of the product of row i.
std::vector<double> row_geometric_means(const ComparisonMatrix& m);

/// Normalizes positive means into weights summing to 1.
/// Throws std::invalid_argument on empty or non-positive input.
WeightVector normalize_weights(const std::vector<double>& means);

/// Approximate largest eigenvalue: (1/n) * sum_i (A * w)_i / w_i.
double lambda_max(const ComparisonMatrix& m, const WeightVector& w);

/// Fills CI, RI, CR and the acceptance flag for a matrix of the given
/// order. Orders 1 and 2 are consistent by construction (RI = 0, CR
/// defined as 0). Throws std::out_of_range for orders outside 1..15.
ConsistencyReport consistency_check(double lambda, std::size_t order);

/// Full pipeline on one matrix: means, weights, lambda_max, report.
ConsistencyReport check_consistency(const ComparisonMatrix& m);

/// Runs the whole classification: weights, consistency gate, then a
/// catalog with level labels A.. assigned in descending weight order
/// (stable: ties keep input order). Throws ConsistencyError when the
/// gate rejects, std::invalid_argument when names do not match the order.
ServiceCatalog classify(const ComparisonMatrix& m, const std::vector<std::string>& names);

/// Expands the matrix with one new service (comparisons f(new, X_j) for
/// every existing service; reciprocal column auto-filled), re-runs the
/// full pipeline and returns the expanded matrix with the re-ranked
/// catalog. The base matrix must be structurally valid and accepted.
std::pair<ComparisonMatrix, ServiceCatalog> insert_service(
    const ComparisonMatrix& m,
    const std::vector<std::string>& names,
    const std::string& new_name,
    const std::vector<double>& new_comparisons);

}  // namespace trustmodel

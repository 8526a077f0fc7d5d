#include "trustmodel/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace trustmodel {

namespace {

std::string consistency_message(const ConsistencyReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "matrix rejected by consistency gate: CR = %.7f >= %.1f "
                  "(lambda_max = %.7f, CI = %.7f, RI = %.2f)",
                  r.cr, kConsistencyLimit, r.lambda_max, r.ci, r.ri);
    return buf;
}

}  // namespace

ConsistencyError::ConsistencyError(const ConsistencyReport& report)
    : std::runtime_error(consistency_message(report)), report_(report) {}

std::vector<double> row_geometric_means(const ComparisonMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> means(n);
    for (std::size_t i = 0; i < n; ++i) {
        double product = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            product *= m.at(i, j);
        }
        means[i] = std::pow(product, 1.0 / static_cast<double>(n));
    }
    return means;
}

WeightVector normalize_weights(const std::vector<double>& means) {
    if (means.empty()) {
        throw std::invalid_argument("normalize_weights: empty input");
    }
    for (double v : means) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("normalize_weights: inputs must be strictly positive");
        }
    }
    const double total = std::accumulate(means.begin(), means.end(), 0.0);
    WeightVector out;
    out.geometric_means = means;
    out.weights.resize(means.size());
    for (std::size_t i = 0; i < means.size(); ++i) {
        out.weights[i] = means[i] / total;
    }
    return out;
}

double lambda_max(const ComparisonMatrix& m, const WeightVector& w) {
    const std::size_t n = m.order();
    if (w.size() != n) {
        throw std::invalid_argument("lambda_max: weight count does not match matrix order");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row_dot += m.at(i, j) * w.weights[j];
        }
        acc += row_dot / w.weights[i];
    }
    return acc / static_cast<double>(n);
}

ConsistencyReport consistency_check(double lambda, std::size_t order) {
    if (order < ComparisonMatrix::kMinOrder || order > ComparisonMatrix::kMaxOrder) {
        throw std::out_of_range("consistency_check: order outside the random-index table (1..15)");
    }
    ConsistencyReport r;
    r.lambda_max = lambda;
    r.ri = kRandomIndex[order - 1];
    r.ci = order >= 2 ? (lambda - static_cast<double>(order)) / static_cast<double>(order - 1)
                      : 0.0;
    // Orders 1 and 2 cannot be inconsistent; RI = 0 would make CR a 0/0.
    r.cr = r.ri > 0.0 ? r.ci / r.ri : 0.0;
    r.accepted = r.cr < kConsistencyLimit;
    return r;
}

ConsistencyReport check_consistency(const ComparisonMatrix& m) {
    const WeightVector w = normalize_weights(row_geometric_means(m));
    return consistency_check(lambda_max(m, w), m.order());
}

ServiceCatalog classify(const ComparisonMatrix& m, const std::vector<std::string>& names) {
    const std::size_t n = m.order();
    if (names.size() != n) {
        throw std::invalid_argument("classify: need exactly one name per service");
    }
    const WeightVector w = normalize_weights(row_geometric_means(m));
    const ConsistencyReport report = consistency_check(lambda_max(m, w), n);
    if (!report.accepted) {
        throw ConsistencyError(report);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w.weights[a] > w.weights[b];
    });

    std::vector<CatalogEntry> entries;
    entries.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t idx = order[pos];
        entries.push_back({std::string(1, static_cast<char>('A' + pos)), names[idx],
                           w.weights[idx]});
    }
    return ServiceCatalog(std::move(entries));
}

std::pair<ComparisonMatrix, ServiceCatalog> insert_service(
    const ComparisonMatrix& m, const std::vector<std::string>& names,
    const std::string& new_name, const std::vector<double>& new_comparisons) {
    const ValidationReport validation = validate_matrix(m);
    if (!validation.ok()) {
        throw std::invalid_argument("insert_service: base matrix is not valid: " +
                                    validation.violations.front().message);
    }
    const ConsistencyReport base = check_consistency(m);
    if (!base.accepted) {
        throw ConsistencyError(base);
    }

    ComparisonMatrix expanded = m.expanded_with(new_comparisons);
    std::vector<std::string> all_names = names;
    all_names.push_back(new_name);
    ServiceCatalog catalog = classify(expanded, all_names);  // re-runs the gate
    return {std::move(expanded), std::move(catalog)};
}

}  // namespace trustmodel

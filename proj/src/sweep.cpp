#include "trustmodel/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace trustmodel {

namespace {

void validate_common(const ServiceCatalog& catalog, double lower, const SweepRange& upper,
                     const std::vector<double>& s_values) {
    if (!(lower >= 0.0 && lower <= 0.5)) {
        throw std::invalid_argument("sweep: lower threshold must lie in [0, 0.5]");
    }
    if (!(upper.min > 0.5) || !(upper.max <= 1.0) || !(upper.min <= upper.max)) {
        throw std::invalid_argument("sweep: upper range must satisfy 0.5 < min <= max <= 1");
    }
    if (!(upper.step > 0.0)) {
        throw std::invalid_argument("sweep: step must be positive");
    }
    if (s_values.empty()) {
        throw std::invalid_argument("sweep: no sensitive values given");
    }
    for (double s : s_values) {
        if (!(s >= catalog.min_value() && s <= catalog.max_value())) {
            throw std::out_of_range("sweep: sensitive value outside the catalog range");
        }
    }
}

// Single cell of the threshold grid. Both the serial and the parallel
// drivers go through here, which keeps their outputs bit-identical.
ThresholdSweepRow threshold_cell(const ServiceCatalog& catalog,
                                 const ThresholdSweepParams& params, double upper, double s) {
    const TrustThresholds thresholds(params.lower, upper);
    const AdjustedThresholds adjusted = adjust_thresholds(thresholds, params.history);
    const TrustEvaluation eval = trust_value(s, thresholds, catalog);
    const Rank rank = decide_rank(eval.y, adjusted).rank;
    return {upper, s, eval.y, adjusted.lower_adj, adjusted.upper_adj, rank};
}

PenaltySweepRow penalty_cell(const ServiceCatalog& catalog, const PenaltySweepParams& params,
                             double upper, double s, int n) {
    const TrustThresholds thresholds(params.lower, upper);
    const AdjustedThresholds adjusted = adjust_thresholds(thresholds, params.history);
    const TrustEvaluation eval = trust_value(s, thresholds, catalog);
    const double p = penalty_coefficient(thresholds, params.n_max);
    const double y_eff = apply_penalty(eval.y, p, n);
    Rank rank = decide_rank(y_eff, adjusted).rank;
    // A recorded failure implies a keyed attempt, and keyless access
    // cannot fail; once n >= 1 the enforced rank tops out at Medium.
    if (n >= 1 && rank == Rank::High) {
        rank = Rank::Medium;
    }
    return {upper, s, n, y_eff, rank};
}

}  // namespace

std::size_t SweepRange::count() const {
    return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

std::vector<ThresholdSweepRow> sweep_thresholds_serial(const ServiceCatalog& catalog,
                                                       const ThresholdSweepParams& params) {
    validate_common(catalog, params.lower, params.upper, params.s_values);
    std::vector<ThresholdSweepRow> rows;
    rows.reserve(params.upper.count() * params.s_values.size());
    for (std::size_t k = 0; k < params.upper.count(); ++k) {
        for (double s : params.s_values) {
            rows.push_back(threshold_cell(catalog, params, params.upper.value(k), s));
        }
    }
    return rows;
}

std::vector<ThresholdSweepRow> sweep_thresholds(const ServiceCatalog& catalog,
                                                const ThresholdSweepParams& params) {
    validate_common(catalog, params.lower, params.upper, params.s_values);
    const std::size_t n_upper = params.upper.count();
    const std::size_t n_s = params.s_values.size();
    std::vector<ThresholdSweepRow> rows(n_upper * n_s);
    const long long total = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t k = static_cast<std::size_t>(idx) / n_s;
        const std::size_t si = static_cast<std::size_t>(idx) % n_s;
        rows[static_cast<std::size_t>(idx)] =
            threshold_cell(catalog, params, params.upper.value(k), params.s_values[si]);
    }
    return rows;
}

std::vector<PenaltySweepRow> sweep_penalty_serial(const ServiceCatalog& catalog,
                                                  const PenaltySweepParams& params) {
    validate_common(catalog, params.lower, params.upper, params.s_values);
    if (params.n_max < 1) {
        throw std::invalid_argument("sweep: n_max must be at least 1");
    }
    if (!(params.lower > 0.0)) {
        throw std::invalid_argument("sweep: penalty sweep needs a positive lower threshold");
    }
    std::vector<PenaltySweepRow> rows;
    rows.reserve(params.upper.count() * params.s_values.size() *
                 static_cast<std::size_t>(params.n_max + 1));
    for (std::size_t k = 0; k < params.upper.count(); ++k) {
        for (double s : params.s_values) {
            for (int n = 0; n <= params.n_max; ++n) {
                rows.push_back(penalty_cell(catalog, params, params.upper.value(k), s, n));
            }
        }
    }
    return rows;
}

std::vector<PenaltySweepRow> sweep_penalty(const ServiceCatalog& catalog,
                                           const PenaltySweepParams& params) {
    validate_common(catalog, params.lower, params.upper, params.s_values);
    if (params.n_max < 1) {
        throw std::invalid_argument("sweep: n_max must be at least 1");
    }
    if (!(params.lower > 0.0)) {
        throw std::invalid_argument("sweep: penalty sweep needs a positive lower threshold");
    }
    const std::size_t n_upper = params.upper.count();
    const std::size_t n_s = params.s_values.size();
    const std::size_t n_counts = static_cast<std::size_t>(params.n_max + 1);
    std::vector<PenaltySweepRow> rows(n_upper * n_s * n_counts);
    const long long total = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx);
        const std::size_t k = i / (n_s * n_counts);
        const std::size_t si = (i / n_counts) % n_s;
        const int n = static_cast<int>(i % n_counts);
        rows[i] = penalty_cell(catalog, params, params.upper.value(k), params.s_values[si], n);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ThresholdSweepRow>& rows) {
    out << "Omega,S,Y,omega_prime,Omega_prime,rank\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f,%s\n", r.upper, r.s, r.y,
                      r.lower_adj, r.upper_adj, std::string(to_string(r.rank)).c_str());
        out << buf;
    }
}

void write_csv(std::ostream& out, const std::vector<PenaltySweepRow>& rows) {
    out << "Omega,S,n,Y_prime,rank\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%d,%.6f,%s\n", r.upper, r.s, r.n,
                      r.y_effective, std::string(to_string(r.rank)).c_str());
        out << buf;
    }
}

}  // namespace trustmodel

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "trustmodel/catalog.hpp"
#include "trustmodel/trust.hpp"

namespace trustmodel {

/// Upper-threshold grid: min, min+step, ..., up to max inclusive.
struct SweepRange {
    double min = 0.51;
    double max = 1.0;
    double step = 0.01;

    std::size_t count() const;
    double value(std::size_t k) const { return min + static_cast<double>(k) * step; }
};

struct ThresholdSweepParams {
    double lower = 0.3;
    SweepRange upper;
    std::vector<double> s_values = {0.1577, 0.0353, 0.0248};
    std::optional<AuthRatios> history;  // absent = thresholds unadjusted
};

struct PenaltySweepParams {
    double lower = 0.3;
    SweepRange upper;
    std::vector<double> s_values = {0.1577, 0.0353, 0.0248};
    // The penalty experiment builds on the history-adjusted setup.
    std::optional<AuthRatios> history = AuthRatios{0.4, 0.9};
    int n_max = 5;
};

struct ThresholdSweepRow {
    double upper;
    double s;
    double y;
    double lower_adj;
    double upper_adj;
    Rank rank;

    friend bool operator==(const ThresholdSweepRow&, const ThresholdSweepRow&) = default;
};

struct PenaltySweepRow {
    double upper;
    double s;
    int n;             // failure count 0..n_max
    double y_effective;
    Rank rank;

    friend bool operator==(const PenaltySweepRow&, const PenaltySweepRow&) = default;
};

/// Grid evaluation of the trust value against every upper threshold.
/// Rows are ordered by (upper ascending, s in given order). The parallel
/// entry point and the serial reference compute cells through the same
/// code path, so their outputs are identical bit for bit.
std::vector<ThresholdSweepRow> sweep_thresholds(const ServiceCatalog& catalog,
                                                const ThresholdSweepParams& params);
std::vector<ThresholdSweepRow> sweep_thresholds_serial(const ServiceCatalog& catalog,
                                                       const ThresholdSweepParams& params);

/// Same grid with the failure counter 0..n_max unrolled per cell; the
/// coefficient is re-derived from (lower, upper) for every column. Rows
/// ordered by (upper, s, n). Ranks for n >= 1 are the enforced
/// post-failure ranks: a failed trial implies a keyed attempt, so they
/// never exceed Medium.
std::vector<PenaltySweepRow> sweep_penalty(const ServiceCatalog& catalog,
                                           const PenaltySweepParams& params);
std::vector<PenaltySweepRow> sweep_penalty_serial(const ServiceCatalog& catalog,
                                                  const PenaltySweepParams& params);

/// CSV with header "Omega,S,Y,omega_prime,Omega_prime,rank"; decimals
/// printed with 6 fractional digits.
void write_csv(std::ostream& out, const std::vector<ThresholdSweepRow>& rows);

/// CSV with header "Omega,S,n,Y_prime,rank".
void write_csv(std::ostream& out, const std::vector<PenaltySweepRow>& rows);

}  // namespace trustmodel

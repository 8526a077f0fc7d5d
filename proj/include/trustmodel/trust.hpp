#pragma once

#include <optional>
#include <string_view>

#include "trustmodel/catalog.hpp"

namespace trustmodel {

/// Customer-chosen trust region boundaries, 0 <= lower <= 0.5 < upper <= 1.
/// The three regions are [0, lower), [lower, upper) and [upper, 1].
struct TrustThresholds {
    double lower;  // omega
    double upper;  // Omega

    TrustThresholds(double lower_value, double upper_value);
};

/// History ratios consumed by the threshold adjustment. t2 is absent when
/// the user has no PIN attempts on record.
struct AuthRatios {
    double t1 = 1.0;                 // high-rank share of all logins
    std::optional<double> t2;        // successful PIN share
};

/// Thresholds after the history shifts: lower_adj = lower + a,
/// upper_adj = upper + b. Both shifts are nonnegative and bounded so that
/// lower_adj <= upper <= upper_adj (< 1 whenever upper < 1).
struct AdjustedThresholds {
    double lower_adj;
    double upper_adj;
    double a;
    double b;
};

/// Intermediate values of one trust evaluation. y_raw can exceed 1 when
/// the calibration factor is above 1; y is clamped into [0,1] because the
/// trust regions are defined there.
struct TrustEvaluation {
    double s_prime;      // log-normalized sensitivity in [0,1]
    double y_star;       // 1 - s_prime
    double calibration;  // (upper + lower + 1) / 2
    double y_raw;        // y_star * calibration, unclamped
    double y;            // clamped into [0,1]
};

enum class Rank { Low, Medium, High };

enum class AuthMethod { None, Pin, Biometric };

/// Fixed rank -> authentication method mapping: High needs no extra key,
/// Medium needs the PIN, Low needs biometric evidence.
AuthMethod method_for(Rank rank);

struct TrustRank {
    Rank rank;
    AuthMethod required_method;

    static TrustRank of(Rank rank) { return {rank, method_for(rank)}; }
};

std::string_view to_string(Rank rank);
std::string_view to_string(AuthMethod method);
Rank rank_from_string(std::string_view text);
AuthMethod method_from_string(std::string_view text);

/// Lower-threshold shift a = (e^(1-t2) - 1)/(e - 1) * (upper - lower).
/// Decreasing in t2; a = 0 for a perfect PIN record, a = upper - lower
/// for a fully failing one. Throws std::out_of_range for t2 outside [0,1].
double history_adjustment_a(double t2, const TrustThresholds& thresholds);

/// Upper-threshold shift b = (e^(1-t1) - 1)/(e + 1) * (1 - upper).
/// The flatter curve: the high region is already sensitive, so history
/// moves it less. Throws std::out_of_range for t1 outside [0,1].
double history_adjustment_b(double t1, const TrustThresholds& thresholds);

/// Applies the history shifts; with no history (or no PIN record for the
/// lower shift) the corresponding shift is zero and the thresholds pass
/// through unchanged.
AdjustedThresholds adjust_thresholds(const TrustThresholds& thresholds,
                                     const std::optional<AuthRatios>& history);

/// Log-normalizes a sensitive value against the catalog span:
/// (lg s - lg min) / (lg max - lg min). Base-independent. Throws
/// std::out_of_range when s lies outside [min, max] and
/// std::invalid_argument when the catalog span is degenerate.
double normalized_sensitivity(double s, const ServiceCatalog& catalog);

/// Full evaluation: s_prime, y_star = 1 - s_prime, calibration
/// (upper + lower + 1)/2 and y = clamp(y_star * calibration).
TrustEvaluation trust_value(double s, const TrustThresholds& thresholds,
                            const ServiceCatalog& catalog);

/// Per-failure decay factor p = (lower/upper)^(1/n_max), sized so that
/// n_max failures collapse a value at `upper` down to `lower`.
/// Throws std::invalid_argument when lower is 0 (every failure would
/// drop straight to the low region, collapsing the scheme) or n_max < 1.
double penalty_coefficient(const TrustThresholds& thresholds, int n_max);

/// Penalty bookkeeping for one request: the coefficient, the failure
/// count it has been applied for, and the trial budget.
struct PenaltyState {
    double p;
    int n_failures;
    int n_max;

    static PenaltyState create(const TrustThresholds& thresholds, int n_max,
                               int n_failures = 0);
};

/// y * p^n. Throws on y outside [0,1], p outside (0,1], or negative n.
double apply_penalty(double y, double p, int n);

/// Region lookup: Low on [0, lower_adj), Medium on [lower_adj, upper_adj),
/// High on [upper_adj, 1]. Values equal to a boundary belong to the
/// higher region.
TrustRank decide_rank(double y_effective, const AdjustedThresholds& adjusted);

}  // namespace trustmodel

#include "trustmodel/trust.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trustmodel {

namespace {

constexpr double kE = std::numbers::e;

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::out_of_range(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

TrustThresholds::TrustThresholds(double lower_value, double upper_value)
    : lower(lower_value), upper(upper_value) {
    if (!(lower >= 0.0 && lower <= 0.5)) {
        throw std::invalid_argument("thresholds: lower must lie in [0, 0.5]");
    }
    if (!(upper > 0.5 && upper <= 1.0)) {
        throw std::invalid_argument("thresholds: upper must lie in (0.5, 1]");
    }
}

AuthMethod method_for(Rank rank) {
    switch (rank) {
        case Rank::High: return AuthMethod::None;
        case Rank::Medium: return AuthMethod::Pin;
        case Rank::Low: return AuthMethod::Biometric;
    }
    throw std::logic_error("method_for: bad rank");
}

std::string_view to_string(Rank rank) {
    switch (rank) {
        case Rank::High: return "High";
        case Rank::Medium: return "Medium";
        case Rank::Low: return "Low";
    }
    return "?";
}

std::string_view to_string(AuthMethod method) {
    switch (method) {
        case AuthMethod::None: return "None";
        case AuthMethod::Pin: return "PIN";
        case AuthMethod::Biometric: return "Biometric";
    }
    return "?";
}

Rank rank_from_string(std::string_view text) {
    if (text == "High") return Rank::High;
    if (text == "Medium") return Rank::Medium;
    if (text == "Low") return Rank::Low;
    throw std::invalid_argument("unknown rank '" + std::string(text) + "'");
}

AuthMethod method_from_string(std::string_view text) {
    if (text == "None") return AuthMethod::None;
    if (text == "PIN") return AuthMethod::Pin;
    if (text == "Biometric") return AuthMethod::Biometric;
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

double history_adjustment_a(double t2, const TrustThresholds& thresholds) {
    require_unit_interval(t2, "t2");
    return (std::exp(1.0 - t2) - 1.0) / (kE - 1.0) * (thresholds.upper - thresholds.lower);
}

double history_adjustment_b(double t1, const TrustThresholds& thresholds) {
    require_unit_interval(t1, "t1");
    return (std::exp(1.0 - t1) - 1.0) / (kE + 1.0) * (1.0 - thresholds.upper);
}

AdjustedThresholds adjust_thresholds(const TrustThresholds& thresholds,
                                     const std::optional<AuthRatios>& history) {
    double a = 0.0;
    double b = 0.0;
    if (history) {
        // No PIN attempts on record means no evidence to move the lower
        // boundary; the shift stays zero, like the no-history case.
        if (history->t2) {
            a = history_adjustment_a(*history->t2, thresholds);
        }
        b = history_adjustment_b(history->t1, thresholds);
    }
    return {thresholds.lower + a, thresholds.upper + b, a, b};
}

double normalized_sensitivity(double s, const ServiceCatalog& catalog) {
    const double lo = catalog.min_value();
    const double hi = catalog.max_value();
    if (!(hi > lo)) {
        throw std::invalid_argument("normalized_sensitivity: catalog span is degenerate");
    }
    if (!(s >= lo && s <= hi)) {
        throw std::out_of_range("normalized_sensitivity: value outside the catalog range");
    }
    return (std::log10(s) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
}

TrustEvaluation trust_value(double s, const TrustThresholds& thresholds,
                            const ServiceCatalog& catalog) {
    TrustEvaluation eval;
    eval.s_prime = normalized_sensitivity(s, catalog);
    eval.y_star = 1.0 - eval.s_prime;
    eval.calibration = (thresholds.upper + thresholds.lower + 1.0) / 2.0;
    eval.y_raw = eval.y_star * eval.calibration;
    eval.y = std::clamp(eval.y_raw, 0.0, 1.0);
    return eval;
}

double penalty_coefficient(const TrustThresholds& thresholds, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("penalty_coefficient: n_max must be at least 1");
    }
    if (!(thresholds.lower > 0.0)) {
        throw std::invalid_argument(
            "penalty_coefficient: lower threshold 0 collapses the penalty scheme "
            "(every failure would drop straight to the low region)");
    }
    return std::pow(thresholds.lower / thresholds.upper, 1.0 / static_cast<double>(n_max));
}

PenaltyState PenaltyState::create(const TrustThresholds& thresholds, int n_max,
                                  int n_failures) {
    if (n_failures < 0) {
        throw std::invalid_argument("penalty state: negative failure count");
    }
    return {penalty_coefficient(thresholds, n_max), n_failures, n_max};
}

double apply_penalty(double y, double p, int n) {
    require_unit_interval(y, "y");
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::out_of_range("p must lie in (0,1]");
    }
    if (n < 0) {
        throw std::out_of_range("failure count must be nonnegative");
    }
    return y * std::pow(p, static_cast<double>(n));
}

TrustRank decide_rank(double y_effective, const AdjustedThresholds& adjusted) {
    if (y_effective < adjusted.lower_adj) return TrustRank::of(Rank::Low);
    if (y_effective < adjusted.upper_adj) return TrustRank::of(Rank::Medium);
    return TrustRank::of(Rank::High);
}

}  // namespace trustmodel

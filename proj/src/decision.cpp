#include "trustmodel/decision.hpp"

#include <stdexcept>
#include <utility>

namespace trustmodel {

namespace {

Rank demote(Rank rank) {
    switch (rank) {
        case Rank::High: return Rank::Medium;
        case Rank::Medium: return Rank::Low;
        case Rank::Low: return Rank::Low;
    }
    return Rank::Low;
}

}  // namespace

AuthDecision evaluate_access(const AccessRequest& request, const ServiceCatalog& catalog,
                             const HistoryLog& log, int n_failures,
                             const DecisionPolicy& policy) {
    const CatalogEntry* entry = catalog.find_level(request.level);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown service level '" + request.level + "'");
    }

    const auto stats = log.stats_for(request.user);
    const std::optional<AuthRatios> ratios =
        stats ? std::optional<AuthRatios>(stats->ratios()) : std::nullopt;

    AuthDecision d{
        .eval = trust_value(entry->sensitive_value, request.thresholds, catalog),
        .y_effective = 0.0,
        .region_rank = Rank::Low,
        .rank = TrustRank::of(Rank::Low),
        .adjusted = adjust_thresholds(request.thresholds, ratios),
        .penalty = PenaltyState::create(request.thresholds, request.n_max, n_failures),
        .anomaly = log.detect_anomaly(request.user, policy.anomaly),
        .terminal = false,
    };
    d.y_effective = apply_penalty(d.eval.y, d.penalty.p, n_failures);
    d.region_rank = decide_rank(d.y_effective, d.adjusted).rank;

    Rank enforced = d.region_rank;
    if (d.anomaly.flagged) {
        switch (policy.anomaly_mode) {
            case AnomalyMode::Off: break;
            case AnomalyMode::Demote: enforced = demote(enforced); break;
            case AnomalyMode::ForceLow: enforced = Rank::Low; break;
        }
    }
    // Lockout floor: the trial budget is spent, only biometric remains.
    if (n_failures >= request.n_max) {
        d.terminal = true;
        enforced = Rank::Low;
    }
    d.rank = TrustRank::of(enforced);
    return d;
}

AuthSession::AuthSession(AccessRequest request, const ServiceCatalog& catalog,
                         HistoryLog& log, DecisionPolicy policy, Clock clock)
    : request_(std::move(request)),
      catalog_(&catalog),
      log_(&log),
      policy_(std::move(policy)),
      clock_(clock ? std::move(clock) : Clock(&utc_now_iso8601)) {
    decisions_.push_back(evaluate_access(request_, *catalog_, *log_, 0, policy_));
}

AuthDecision AuthSession::report_attempt(Outcome outcome) {
    if (closed_) {
        throw std::logic_error("session already closed");
    }
    if (terminal_) {
        throw std::logic_error("session is terminal: the trial budget is spent");
    }

    const TrustRank at_attempt = current().rank;

    if (outcome == Outcome::Success) {
        log_->append({clock_(), request_.user, request_.level, at_attempt.rank,
                      at_attempt.required_method, Outcome::Success});
        closed_ = true;
        failures_ = 0;
        decisions_.push_back(evaluate_access(request_, *catalog_, *log_, 0, policy_));
        return current();
    }

    if (at_attempt.required_method == AuthMethod::None) {
        throw std::logic_error("keyless (High-rank) access cannot fail");
    }
    ++failures_;
    bool record = policy_.record_every_failure;
    if (failures_ >= request_.n_max) {
        terminal_ = true;
        record = true;  // the exhausted session leaves at least this one trace
    }
    if (record) {
        log_->append({clock_(), request_.user, request_.level, at_attempt.rank,
                      at_attempt.required_method, Outcome::Failure});
    }
    decisions_.push_back(evaluate_access(request_, *catalog_, *log_, failures_, policy_));
    return current();
}

}  // namespace trustmodel

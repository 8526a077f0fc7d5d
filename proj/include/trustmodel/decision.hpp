#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trustmodel/catalog.hpp"
#include "trustmodel/history.hpp"
#include "trustmodel/trust.hpp"

namespace trustmodel {

struct AccessRequest {
    std::string user;
    std::string level;            // catalog level label
    TrustThresholds thresholds;
    int n_max = 5;                // allowed trials before lockout
};

enum class AnomalyMode { Off, Demote, ForceLow };

struct DecisionPolicy {
    AnomalyMode anomaly_mode = AnomalyMode::Demote;
    AnomalyConfig anomaly;
    // Default: an exhausted session records one failure event in total,
    // so a single attack run cannot wreck the victim's PIN statistics.
    bool record_every_failure = false;
};

/// One access decision. `region_rank` is the raw region lookup for
/// y_effective; `rank` is the enforced decision after the anomaly policy
/// and the lockout floor (terminal requests are biometric-only).
struct AuthDecision {
    TrustEvaluation eval;
    double y_effective;
    Rank region_rank;
    TrustRank rank;
    AdjustedThresholds adjusted;
    PenaltyState penalty;
    AnomalyReport anomaly;
    bool terminal = false;
};

/// Composes the whole pipeline for one request: user stats from the log,
/// threshold adjustment, trust value for the service's sensitivity,
/// penalty decay for `n_failures`, region lookup, anomaly enforcement,
/// and the lockout floor once n_failures reaches the trial budget.
/// Throws std::invalid_argument for an unknown service level.
AuthDecision evaluate_access(const AccessRequest& request,
                             const ServiceCatalog& catalog,
                             const HistoryLog& log,
                             int n_failures = 0,
                             const DecisionPolicy& policy = {});

/// One authentication exchange. Owns the failure counter; outcomes are
/// reported as facts. Success closes the session and records one event;
/// failures decay the trust value, and the n_max-th failure makes the
/// session terminal (biometric-only) and records a single failure event.
/// A session is used by one actor at a time.
class AuthSession {
public:
    using Clock = std::function<std::string()>;

    AuthSession(AccessRequest request, const ServiceCatalog& catalog,
                HistoryLog& log, DecisionPolicy policy = {}, Clock clock = {});

    const AuthDecision& current() const { return decisions_.back(); }
    const std::vector<AuthDecision>& decisions() const { return decisions_; }
    int failures() const { return failures_; }
    bool terminal() const { return terminal_; }
    bool closed() const { return closed_; }

    /// Reports one attempt outcome and returns the next decision.
    /// Throws std::logic_error on a closed or terminal session, and on a
    /// failure reported for keyless (High-rank) access, which cannot fail.
    AuthDecision report_attempt(Outcome outcome);

private:
    AccessRequest request_;
    const ServiceCatalog* catalog_;
    HistoryLog* log_;
    DecisionPolicy policy_;
    Clock clock_;
    std::vector<AuthDecision> decisions_;
    int failures_ = 0;
    bool terminal_ = false;
    bool closed_ = false;
};

}  // namespace trustmodel

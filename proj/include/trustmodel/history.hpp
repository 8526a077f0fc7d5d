#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trustmodel/trust.hpp"

namespace trustmodel {

enum class Outcome { Success, Failure };

std::string_view to_string(Outcome outcome);
Outcome outcome_from_string(std::string_view text);

/// Current time as ISO-8601 UTC ("2026-08-10T12:34:56Z").
std::string utc_now_iso8601();

/// One authentication event. The method must match the rank mapping, and
/// keyless (High/None) events always succeed. Unknown JSON fields found
/// on read are kept in `extras` and written back on serialization.
struct AuthEvent {
    std::string ts;       // ISO-8601 UTC
    std::string user;
    std::string level;    // catalog level label
    Rank rank;            // rank at the time of the attempt
    AuthMethod method;
    Outcome outcome;
    nlohmann::json extras = nlohmann::json::object();

    /// Throws std::invalid_argument on a method/rank mismatch or a
    /// keyless failure.
    void validate() const;

    nlohmann::json to_json() const;
    static AuthEvent from_json(const nlohmann::json& j);
};

/// Ratios derived from a user's event history. Ratios whose denominator
/// is zero are absent, never NaN.
struct AuthHistoryStats {
    double t1 = 0.0;                // high-rank events / total events
    std::optional<double> t2;       // PIN successes / PIN attempts
    std::optional<double> t3;       // biometric successes / attempts; recorded, unused
    std::size_t total_events = 0;
    std::size_t high_count = 0;
    std::size_t pin_attempts = 0;
    std::size_t pin_successes = 0;
    std::size_t bio_attempts = 0;
    std::size_t bio_successes = 0;

    AuthRatios ratios() const { return {t1, t2}; }
};

/// Tunables for the "good record turns bad" signal. None of these come
/// from a published source; they are configuration.
struct AnomalyConfig {
    std::size_t recent_window = 10;  // PIN events in the recent window
    std::size_t min_events = 5;      // required in each window to judge at all
    double good_threshold = 0.8;     // older-window T2 counting as "good"
    double drop_delta = 0.3;         // flag when older T2 - recent T2 exceeds this
};

struct AnomalyReport {
    bool flagged = false;
    std::string explanation;
    std::optional<double> older_t2;
    std::optional<double> recent_t2;
    std::size_t older_count = 0;
    std::size_t recent_count = 0;
};

/// Append-only event log. Events are kept in append order; nothing is
/// ever mutated or removed.
class HistoryLog {
public:
    HistoryLog() = default;

    /// Validates and appends. Throws std::invalid_argument for events
    /// that break the event invariants.
    void append(AuthEvent event);

    const std::vector<AuthEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    /// Ratios over the user's most recent `window` events (all events
    /// when absent). Returns std::nullopt for a user with no events;
    /// callers then skip the threshold adjustment.
    std::optional<AuthHistoryStats> stats_for(std::string_view user,
                                              std::optional<std::size_t> window = {}) const;

    /// Splits the user's PIN events into all-but-recent vs the last
    /// `recent_window` and flags when a previously good record (older T2
    /// above the threshold) drops by more than `drop_delta`. Requires at
    /// least `min_events` PIN events in each window to flag anything.
    AnomalyReport detect_anomaly(std::string_view user,
                                 const AnomalyConfig& config = {}) const;

    void save_jsonl(std::ostream& out) const;
    void save_file(const std::filesystem::path& path) const;

    /// Parses one JSON object per line (blank lines ignored). Throws
    /// std::runtime_error with the line number for malformed or
    /// invariant-violating records.
    static HistoryLog load_jsonl(std::istream& in);
    static HistoryLog load_file(const std::filesystem::path& path);

private:
    std::vector<AuthEvent> events_;
};

/// Appends a single event to a JSONL file without rewriting it.
void append_event_file(const std::filesystem::path& path, const AuthEvent& event);

}  // namespace trustmodel

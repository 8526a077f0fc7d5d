#include "trustmodel/history.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trustmodel {

std::string_view to_string(Outcome outcome) {
    return outcome == Outcome::Success ? "Success" : "Failure";
}

Outcome outcome_from_string(std::string_view text) {
    if (text == "Success") return Outcome::Success;
    if (text == "Failure") return Outcome::Failure;
    throw std::invalid_argument("unknown outcome '" + std::string(text) + "'");
}

std::string utc_now_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm_utc.tm_year + 1900,
                  tm_utc.tm_mon + 1, tm_utc.tm_mday, tm_utc.tm_hour, tm_utc.tm_min,
                  tm_utc.tm_sec);
    return buf;
}

void AuthEvent::validate() const {
    if (method != method_for(rank)) {
        throw std::invalid_argument(std::string("event: method ") +
                                    std::string(to_string(method)) +
                                    " is inconsistent with rank " +
                                    std::string(to_string(rank)));
    }
    // Keyless access has nothing to get wrong.
    if (method == AuthMethod::None && outcome == Outcome::Failure) {
        throw std::invalid_argument("event: keyless (High-rank) access cannot fail");
    }
}

nlohmann::json AuthEvent::to_json() const {
    nlohmann::json j = extras.is_object() ? extras : nlohmann::json::object();
    j["ts"] = ts;
    j["user"] = user;
    j["level"] = level;
    j["rank"] = std::string(to_string(rank));
    j["method"] = std::string(to_string(method));
    j["outcome"] = std::string(to_string(outcome));
    return j;
}

AuthEvent AuthEvent::from_json(const nlohmann::json& j) {
    AuthEvent e;
    e.ts = j.at("ts").get<std::string>();
    e.user = j.at("user").get<std::string>();
    e.level = j.at("level").get<std::string>();
    e.rank = rank_from_string(j.at("rank").get<std::string>());
    e.method = method_from_string(j.at("method").get<std::string>());
    e.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    e.extras = nlohmann::json::object();
    for (const auto& [key, value] : j.items()) {
        if (key != "ts" && key != "user" && key != "level" && key != "rank" &&
            key != "method" && key != "outcome") {
            e.extras[key] = value;
        }
    }
    return e;
}

void HistoryLog::append(AuthEvent event) {
    event.validate();
    events_.push_back(std::move(event));
}

std::optional<AuthHistoryStats> HistoryLog::stats_for(
    std::string_view user, std::optional<std::size_t> window) const {
    std::vector<const AuthEvent*> mine;
    for (const auto& e : events_) {
        if (e.user == user) mine.push_back(&e);
    }
    if (mine.empty()) {
        return std::nullopt;
    }
    std::size_t begin = 0;
    if (window && *window < mine.size()) {
        begin = mine.size() - *window;
    }

    AuthHistoryStats stats;
    for (std::size_t i = begin; i < mine.size(); ++i) {
        const AuthEvent& e = *mine[i];
        ++stats.total_events;
        if (e.rank == Rank::High) ++stats.high_count;
        if (e.method == AuthMethod::Pin) {
            ++stats.pin_attempts;
            if (e.outcome == Outcome::Success) ++stats.pin_successes;
        }
        if (e.method == AuthMethod::Biometric) {
            ++stats.bio_attempts;
            if (e.outcome == Outcome::Success) ++stats.bio_successes;
        }
    }
    stats.t1 = static_cast<double>(stats.high_count) / static_cast<double>(stats.total_events);
    if (stats.pin_attempts > 0) {
        stats.t2 = static_cast<double>(stats.pin_successes) /
                   static_cast<double>(stats.pin_attempts);
    }
    if (stats.bio_attempts > 0) {
        stats.t3 = static_cast<double>(stats.bio_successes) /
                   static_cast<double>(stats.bio_attempts);
    }
    return stats;
}

AnomalyReport HistoryLog::detect_anomaly(std::string_view user,
                                         const AnomalyConfig& config) const {
    std::vector<const AuthEvent*> pins;
    for (const auto& e : events_) {
        if (e.user == user && e.method == AuthMethod::Pin) pins.push_back(&e);
    }

    AnomalyReport report;
    const std::size_t recent =
        pins.size() < config.recent_window ? pins.size() : config.recent_window;
    const std::size_t older = pins.size() - recent;
    report.older_count = older;
    report.recent_count = recent;

    if (older < config.min_events || recent < config.min_events) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "insufficient PIN history to judge (older=%zu recent=%zu, need %zu each)",
                      older, recent, config.min_events);
        report.explanation = buf;
        return report;
    }

    std::size_t older_ok = 0;
    std::size_t recent_ok = 0;
    for (std::size_t i = 0; i < pins.size(); ++i) {
        if (pins[i]->outcome != Outcome::Success) continue;
        if (i < older) ++older_ok; else ++recent_ok;
    }
    const double older_t2 = static_cast<double>(older_ok) / static_cast<double>(older);
    const double recent_t2 = static_cast<double>(recent_ok) / static_cast<double>(recent);
    report.older_t2 = older_t2;
    report.recent_t2 = recent_t2;

    char buf[192];
    if (older_t2 >= config.good_threshold && older_t2 - recent_t2 > config.drop_delta) {
        report.flagged = true;
        std::snprintf(buf, sizeof(buf),
                      "PIN success ratio dropped from %.4f (over %zu) to %.4f (last %zu); "
                      "a good record turning bad suggests the identity is not safe",
                      older_t2, older, recent_t2, recent);
    } else {
        std::snprintf(buf, sizeof(buf),
                      "no anomaly: PIN success ratio %.4f (over %zu) vs %.4f (last %zu)",
                      older_t2, older, recent_t2, recent);
    }
    report.explanation = buf;
    return report;
}

void HistoryLog::save_jsonl(std::ostream& out) const {
    for (const auto& e : events_) {
        out << e.to_json().dump() << '\n';
    }
}

void HistoryLog::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("history: cannot write " + path.string());
    }
    save_jsonl(out);
}

HistoryLog HistoryLog::load_jsonl(std::istream& in) {
    HistoryLog log;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            log.append(AuthEvent::from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& ex) {
            throw std::runtime_error("history: line " + std::to_string(line_no) + ": " +
                                     ex.what());
        }
    }
    return log;
}

HistoryLog HistoryLog::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("history: cannot read " + path.string());
    }
    return load_jsonl(in);
}

void append_event_file(const std::filesystem::path& path, const AuthEvent& event) {
    event.validate();
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw std::runtime_error("history: cannot append to " + path.string());
    }
    out << event.to_json().dump() << '\n';
}

}  // namespace trustmodel

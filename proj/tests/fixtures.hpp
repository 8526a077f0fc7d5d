#pragma once

// Shared fixtures: the nine-service comparison table, the reference
// weight set it was published with, and history builders.

#include <array>
#include <string>
#include <vector>

#include "trustmodel/catalog.hpp"
#include "trustmodel/history.hpp"
#include "trustmodel/matrix.hpp"

namespace fixtures {

// Ladder form of the comparison table: a_ij = j - i + 1 above the
// diagonal, reciprocals below. This is the displayed, reciprocal matrix.
inline trustmodel::ComparisonMatrix ladder9() {
    auto m = trustmodel::ComparisonMatrix::uniform(9);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            if (j > i) m.at(i, j) = static_cast<double>(j - i + 1);
            if (j < i) m.at(i, j) = 1.0 / static_cast<double>(i - j + 1);
        }
    }
    return m;
}

// The matrix behind the published reference numbers. It differs from the
// ladder in one cell: (I, A) holds 1/99 rather than the reciprocal 1/9,
// so reciprocity does not hold for that pair, but every published value
// (geometric means, weights, the A*w column, lambda_max, CI, CR) follows
// from this variant to ~1e-8.
inline trustmodel::ComparisonMatrix reference_matrix9() {
    auto m = ladder9();
    m.at(8, 0) = 1.0 / 99.0;
    return m;
}

inline const std::vector<std::string>& service_names() {
    static const std::vector<std::string> names = {
        "Governmental/military", "Commercial", "Academic",      "Banking/Stock", "e-Shopping",
        "VoIP",                  "Education",  "Entertainment", "Public",
    };
    return names;
}

// Reference geometric means and weights for the nine services.
inline constexpr std::array<double, 9> kReferenceMeans = {
    4.14716627, 3.00799234, 2.11309937, 1.4592328, 1.0,
    0.68529161, 0.47323851, 0.33244766, 0.18473035,
};
inline constexpr std::array<double, 9> kReferenceWeights = {
    0.30941616, 0.22442346, 0.15765635, 0.10887198, 0.07460905,
    0.05112896, 0.03530788, 0.02480361, 0.01378256,
};

inline constexpr double kReferenceLambda = 9.2185899;
inline constexpr double kReferenceCI = 0.0273237;
inline constexpr double kReferenceCR = 0.0187149;

// History with T1 = 0.4 and T2 = 0.9: twenty events, eight keyless
// logins, ten PIN attempts with one failure, two biometric successes.
inline trustmodel::HistoryLog history_t1_04_t2_09(const std::string& user) {
    using namespace trustmodel;
    HistoryLog log;
    int minute = 0;
    auto ts = [&minute] {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "2026-01-01T10:%02d:00Z", minute++);
        return std::string(buf);
    };
    for (int i = 0; i < 8; ++i) {
        log.append({ts(), user, "I", Rank::High, AuthMethod::None, Outcome::Success});
    }
    for (int i = 0; i < 9; ++i) {
        log.append({ts(), user, "E", Rank::Medium, AuthMethod::Pin, Outcome::Success});
    }
    log.append({ts(), user, "E", Rank::Medium, AuthMethod::Pin, Outcome::Failure});
    for (int i = 0; i < 2; ++i) {
        log.append({ts(), user, "A", Rank::Low, AuthMethod::Biometric, Outcome::Success});
    }
    return log;
}

}  // namespace fixtures

#include "trustmodel/catalog.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace trustmodel {

namespace {

// Printed catalogs carry 8 decimals, so the weight sum can be off by ~1e-8.
constexpr double kSumTolerance = 1e-6;

}  // namespace

ServiceCatalog::ServiceCatalog(std::vector<CatalogEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("catalog: no entries");
    }
    double sum = 0.0;
    std::set<std::string> levels;
    const CatalogEntry* prev = nullptr;
    for (const auto& e : entries_) {
        if (e.level.empty()) {
            throw std::invalid_argument("catalog: empty level label");
        }
        if (!levels.insert(e.level).second) {
            throw std::invalid_argument("catalog: duplicate level label '" + e.level + "'");
        }
        if (!(e.sensitive_value > 0.0) || !(e.sensitive_value < 1.0) ||
            !std::isfinite(e.sensitive_value)) {
            throw std::invalid_argument("catalog: sensitive value for level '" + e.level +
                                        "' must lie in (0,1)");
        }
        // Descending by construction; equal weights keep their input order.
        if (prev && e.sensitive_value > prev->sensitive_value) {
            throw std::invalid_argument("catalog: sensitive values must be non-increasing");
        }
        sum += e.sensitive_value;
        prev = &e;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("catalog: sensitive values must sum to 1");
    }
}

const CatalogEntry* ServiceCatalog::find_level(std::string_view level) const {
    for (const auto& e : entries_) {
        if (e.level == level) return &e;
    }
    return nullptr;
}

nlohmann::json ServiceCatalog::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries_) {
        arr.push_back({{"level", e.level},
                       {"name", e.name},
                       {"sensitive_value", e.sensitive_value}});
    }
    return arr;
}

ServiceCatalog ServiceCatalog::from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("catalog: expected a JSON array of entries");
    }
    std::vector<CatalogEntry> entries;
    entries.reserve(j.size());
    for (const auto& item : j) {
        entries.push_back({item.at("level").get<std::string>(),
                           item.at("name").get<std::string>(),
                           item.at("sensitive_value").get<double>()});
    }
    return ServiceCatalog(std::move(entries));
}

void ServiceCatalog::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("catalog: cannot write " + path.string());
    }
    out << to_json().dump(2) << '\n';
}

ServiceCatalog ServiceCatalog::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("catalog: cannot read " + path.string());
    }
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

const ServiceCatalog& default_catalog() {
    static const ServiceCatalog catalog{{
        {"A", "Governmental/military", 0.30941616},
        {"B", "Commercial", 0.22442346},
        {"C", "Academic", 0.15765635},
        {"D", "Banking/Stock", 0.10887198},
        {"E", "e-Shopping", 0.07460905},
        {"F", "VoIP", 0.05112896},
        {"G", "Education", 0.03530788},
        {"H", "Entertainment", 0.02480361},
        {"I", "Public", 0.01378256},
    }};
    return catalog;
}

}  // namespace trustmodel

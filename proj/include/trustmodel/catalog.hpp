#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trustmodel {

struct CatalogEntry {
    std::string level;        // level label, "A".."O"
    std::string name;         // service name
    double sensitive_value;   // normalized importance weight S_i
};

/// Ranked service table: entries ordered by descending sensitive value,
/// labels unique, values in (0,1) summing to 1 (within printing tolerance).
/// This is the hand-off artifact between the classifier and the trust
/// evaluation side.
class ServiceCatalog {
public:
    explicit ServiceCatalog(std::vector<CatalogEntry> entries);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Looks up an entry by level label; nullptr when absent.
    const CatalogEntry* find_level(std::string_view level) const;

    double max_value() const { return entries_.front().sensitive_value; }
    double min_value() const { return entries_.back().sensitive_value; }

    nlohmann::json to_json() const;
    static ServiceCatalog from_json(const nlohmann::json& j);

    void save(const std::filesystem::path& path) const;
    static ServiceCatalog load(const std::filesystem::path& path);

private:
    std::vector<CatalogEntry> entries_;
};

/// The built-in nine-level estimation table (governmental/military down to
/// public services). Used as the default for simulations and evaluation
/// when no catalog file is supplied.
const ServiceCatalog& default_catalog();

}  // namespace trustmodel

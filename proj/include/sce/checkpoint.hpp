// checkpoint.hpp
// JSON forms of ScanReport and the resumable scan checkpoint:
//
//   {"range": [lo, hi], "chunk_size": n, "completed_through": E,
//    "sections": {...}, "constant": c, "aggregates": <ScanReport>}
//
// completed_through is the last even number whose chunk has been merged into
// aggregates; it is lo - 2 before the first chunk completes.
#pragma once

#include "sce/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>

namespace sce {

void to_json(nlohmann::json& j, const Tally& t);
void from_json(const nlohmann::json& j, Tally& t);
void to_json(nlohmann::json& j, const ScanSections& s);
void from_json(const nlohmann::json& j, ScanSections& s);
void to_json(nlohmann::json& j, const ScanReport& r);
void from_json(const nlohmann::json& j, ScanReport& r);

struct Checkpoint {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t chunk_size = 0;
    std::int64_t completed_through = 0;
    ScanSections sections;
    double constant = 0.0;
    ScanReport aggregates;
};

void to_json(nlohmann::json& j, const Checkpoint& c);
void from_json(const nlohmann::json& j, Checkpoint& c);

// Writes atomically (temp file + rename). Throws std::runtime_error on I/O failure.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
// std::nullopt when the file does not exist; throws on malformed content.
std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path);

} // namespace sce

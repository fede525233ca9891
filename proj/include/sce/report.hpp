// report.hpp
// Rendering of every report as an aligned text table, CSV or JSON.
//
// Output is deterministic: maps are emitted in key order, half-integers as
// exact "k" / "k/2" strings. CSV starts with a "# schema=1" comment line,
// then a header row; comma separated, LF line endings.
#pragma once

#include "sce/bounds.hpp"
#include "sce/sce_model.hpp"
#include "sce/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sce {

enum class Format { table, csv, json };

inline constexpr std::string_view kCsvSchemaLine = "# schema=1";

// Throws std::invalid_argument for anything but "table", "csv", "json".
Format parse_format(std::string_view name);

std::string render_decomposition(const Decomposition& dec, Format format);
std::string render_interactions(std::int64_t E, const PrimeTable& table, Format format);
std::string render_types(Format format);
// Census rows only: one per type that occurred.
std::string render_census(const ScanReport& report, Format format);
// Every populated section of a scan report.
std::string render_scan(const ScanReport& report, Format format);
std::string render_bound_report(const BoundReport& report, BoundConstant c, Format format);

struct ThresholdRow {
    std::string id;
    double lo = 0.0;
    double hi = 0.0;
    std::optional<RootResult> root;  // empty when the bracket has no sign change
    std::optional<double> published;  // value printed alongside, when one exists
    std::string note;
};

std::string render_thresholds(const std::vector<ThresholdRow>& rows, Format format);

} // namespace sce

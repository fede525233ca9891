// verify.hpp
// Range scanners over even numbers: Goldbach check, structural-type census,
// bound and identity checks, and the theorem check "non-excluded type
// implies d > 0" for E > 2525.
//
// Scans run in chunks of consecutive evens on a worker pool; chunk reports
// are merged in range order, so output does not depend on worker count.
#pragma once

#include "sce/bounds.hpp"
#include "sce/half_value.hpp"
#include "sce/prime_table.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sce {

// The theorem check applies to E strictly above this.
inline constexpr std::int64_t kTheoremMinE = 2525;

struct Tally {
    std::int64_t applicable = 0;
    std::int64_t held = 0;
    std::int64_t failed = 0;
    std::int64_t marginal = 0;

    Tally& operator+=(const Tally& other) noexcept;
    friend bool operator==(const Tally&, const Tally&) = default;
};

struct MinD {
    HalfValue d;
    std::int64_t E = 0;
    friend bool operator==(const MinD&, const MinD&) = default;
};

// Which sections a scan fills.
struct ScanSections {
    bool goldbach = false;
    bool census = false;
    bool bounds = false;
    bool identities = false;
    bool theorem = false;

    friend bool operator==(const ScanSections&, const ScanSections&) = default;
};

struct ScanReport {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 2;  // 2 for even-number scans, 1 for integer scans
    ScanSections sections;
    std::int64_t scanned = 0;  // numbers visited

    // E with d_E = 0 (E >= 4). The known exception E = 4 is listed too.
    std::vector<std::int64_t> goldbach_failures;
    std::optional<MinD> min_d;

    std::map<std::string, std::int64_t> type_census;  // canonical type -> count
    std::vector<std::pair<std::int64_t, std::string>> excluded_hits;

    // Keyed by inequality id ("eq33", ..., "dusart_upper"). Wing bounds also
    // get a "<id>_gate141" tally restricted to E > 141.
    std::map<std::string, std::vector<std::int64_t>> bound_failures;
    std::map<std::string, std::int64_t> marginal;
    std::map<std::string, Tally> bound_tallies;

    std::vector<std::pair<std::int64_t, std::string>> identity_failures;

    std::int64_t theorem_checked = 0;
    std::vector<std::int64_t> theorem_violations;  // non-excluded type with d_E = 0

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Concatenates two reports over adjacent ranges (left.hi + step == right.lo
// for evens; +1 for integer scans). Throws std::invalid_argument otherwise.
ScanReport merge(ScanReport left, const ScanReport& right);

struct ScanOptions {
    BoundConstant constant{};
    std::int64_t chunk_size = 1024;  // evens per chunk
    unsigned workers = 0;            // 0 -> hardware concurrency
    std::optional<std::filesystem::path> checkpoint;
    // Minimum time between checkpoint writes; zero writes after every chunk.
    std::chrono::milliseconds checkpoint_interval{1000};
    // Stop after this many chunks have been merged (testing and staged runs).
    std::optional<std::int64_t> max_chunks;
};

// Scans even E in [lo, hi] filling the requested sections. Requires
// 2 <= lo <= hi <= table.limit(), both even. With only the goldbach section
// requested, d_E is computed without classifying the other three classes.
ScanReport scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table, ScanSections sections,
                const ScanOptions& options = {});

// Convenience entry points; each requires lo >= 4.
ScanReport goldbach_scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table,
                         const ScanOptions& options = {});
ScanReport census(std::int64_t lo, std::int64_t hi, const PrimeTable& table, const ScanOptions& options = {});
ScanReport theorem_check(std::int64_t lo, std::int64_t hi, const PrimeTable& table,
                         const ScanOptions& options = {});

// Checks x/ln x <= pi(x) (x >= 17) and pi(x) <= c x/ln x for every integer x
// in [lo, hi]. Failures go to bound_failures["dusart_lower" / "dusart_upper"].
ScanReport dusart_scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table, BoundConstant c = {});

// One even number's contribution, used by scan(); exposed for tests.
ScanReport scan_one(std::int64_t E, const PrimeTable& table, ScanSections sections, BoundConstant c);

} // namespace sce

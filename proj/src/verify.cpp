#include "sce/verify.hpp"

#include "sce/checkpoint.hpp"
#include "sce/errors.hpp"
#include "sce/sce_model.hpp"
#include "sce/type_space.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace sce {

Tally& Tally::operator+=(const Tally& other) noexcept
{
    applicable += other.applicable;
    held += other.held;
    failed += other.failed;
    marginal += other.marginal;
    return *this;
}

ScanReport merge(ScanReport left, const ScanReport& right)
{
    if (left.step != right.step || left.sections != right.sections)
        throw std::invalid_argument("cannot merge reports of different scan kinds");
    if (left.hi + left.step != right.lo)
        throw std::invalid_argument("cannot merge non-adjacent ranges [" + std::to_string(left.lo) + ", " +
                                    std::to_string(left.hi) + "] and [" + std::to_string(right.lo) + ", " +
                                    std::to_string(right.hi) + "]");
    auto append = [](auto& into, const auto& from) { into.insert(into.end(), from.begin(), from.end()); };

    left.hi = right.hi;
    left.scanned += right.scanned;
    append(left.goldbach_failures, right.goldbach_failures);
    if (right.min_d && (!left.min_d || right.min_d->d < left.min_d->d)) left.min_d = right.min_d;
    for (const auto& [type, count] : right.type_census) left.type_census[type] += count;
    append(left.excluded_hits, right.excluded_hits);
    for (const auto& [id, list] : right.bound_failures) append(left.bound_failures[id], list);
    for (const auto& [id, count] : right.marginal) left.marginal[id] += count;
    for (const auto& [id, tally] : right.bound_tallies) left.bound_tallies[id] += tally;
    append(left.identity_failures, right.identity_failures);
    left.theorem_checked += right.theorem_checked;
    append(left.theorem_violations, right.theorem_violations);
    return left;
}

namespace {

void record(ScanReport& into, const std::string& id, Verdict v, std::int64_t n)
{
    if (v == Verdict::not_applicable) return;
    auto& tally = into.bound_tallies[id];
    ++tally.applicable;
    switch (v) {
    case Verdict::holds: ++tally.held; break;
    case Verdict::fails:
        ++tally.failed;
        into.bound_failures[id].push_back(n);
        break;
    case Verdict::marginal:
        ++tally.marginal;
        ++into.marginal[id];
        break;
    case Verdict::not_applicable: break;
    }
}

void accumulate(ScanReport& into, std::int64_t E, const PrimeTable& table, ScanSections sections,
                BoundConstant c)
{
    ++into.scanned;
    const bool full = sections.census || sections.bounds || sections.identities || sections.theorem;

    std::optional<Decomposition> dec;
    HalfValue d;
    if (full) {
        dec = decompose(E, table);
        d = dec->d;
    } else {
        d = prime_pair_weight(E, table);
    }
    const bool zero_d = d == HalfValue{};

    if (sections.goldbach) {
        if (!into.min_d || d < into.min_d->d) into.min_d = MinD{d, E};
        if (E >= 4 && zero_d) into.goldbach_failures.push_back(E);
    }

    if (sections.census || sections.theorem) {
        const auto& type = classify(*dec);
        if (sections.census) ++into.type_census[type.canonical()];
        if (type.excluded()) into.excluded_hits.emplace_back(E, type.canonical());
        if (sections.theorem && E > kTheoremMinE) {
            ++into.theorem_checked;
            if (!type.excluded() && zero_d) into.theorem_violations.push_back(E);
        }
    }

    if (sections.bounds) {
        const auto report = check_bounds(*dec, table, c);
        for (const auto id : kAllInequalities) {
            const std::string name(to_string(id));
            record(into, name, report[id], E);
            if (is_wing_bound(id) && E > kWingProofMinE) record(into, name + "_gate141", report[id], E);
        }
    }

    if (sections.identities) {
        const auto ids = check_identities(*dec, table);
        auto flag = [&](bool ok, const char* name) {
            if (!ok) into.identity_failures.emplace_back(E, name);
        };
        flag(ids.eq2_1_ok, "eq2_1");
        flag(ids.eq8_6_ok, "eq8_6");
        flag(ids.eq22_ok, "eq22");
        flag(ids.eq22_5_ok, "eq22_5");
        flag(ids.halving != Verdict::fails, "halving");
        flag(ids.wing_count_ok, "wing_count");
    }
}

ScanReport empty_report(std::int64_t lo, ScanSections sections, std::int64_t step)
{
    ScanReport r;
    r.lo = lo;
    r.hi = lo - step;
    r.step = step;
    r.sections = sections;
    return r;
}

void validate_range(std::int64_t lo, std::int64_t hi, const PrimeTable& table, std::int64_t min_lo)
{
    if (lo % 2 != 0 || hi % 2 != 0)
        throw std::invalid_argument("scan bounds must be even, got [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    if (lo < min_lo)
        throw std::invalid_argument("scan must start at >= " + std::to_string(min_lo) + ", got " +
                                    std::to_string(lo));
    if (lo > hi) throw std::invalid_argument("scan range is empty: lo > hi");
    if (hi > table.limit())
        throw OutOfCoverage("scan end " + std::to_string(hi) + " exceeds prime table limit " +
                            std::to_string(table.limit()));
}

} // namespace

ScanReport scan_one(std::int64_t E, const PrimeTable& table, ScanSections sections, BoundConstant c)
{
    auto r = empty_report(E, sections, 2);
    r.hi = E;
    accumulate(r, E, table, sections, c);
    return r;
}

ScanReport scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table, ScanSections sections,
                const ScanOptions& options)
{
    validate_range(lo, hi, table, 2);
    if (options.chunk_size < 1) throw std::invalid_argument("chunk size must be >= 1");

    const std::int64_t chunk = options.chunk_size;
    const std::int64_t evens = (hi - lo) / 2 + 1;
    const std::int64_t chunks = (evens + chunk - 1) / chunk;
    auto chunk_lo = [&](std::int64_t k) { return lo + 2 * chunk * k; };
    auto chunk_hi = [&](std::int64_t k) { return std::min(hi, chunk_lo(k + 1) - 2); };

    ScanReport aggregate = empty_report(lo, sections, 2);
    std::int64_t first = 0;
    if (options.checkpoint) {
        if (auto saved = load_checkpoint(*options.checkpoint)) {
            if (saved->lo != lo || saved->hi != hi || saved->chunk_size != chunk ||
                saved->sections != sections || saved->constant != options.constant.value())
                throw std::invalid_argument("checkpoint " + options.checkpoint->string() +
                                            " was written for a different scan");
            aggregate = std::move(saved->aggregates);
            if (aggregate.hi != saved->completed_through)
                throw std::invalid_argument("checkpoint aggregates disagree with completed_through");
            const std::int64_t done = (saved->completed_through - lo) / 2 + 1;
            first = (done + chunk - 1) / chunk;
        }
    }
    std::int64_t last = chunks;
    if (options.max_chunks) last = std::min(chunks, first + std::max<std::int64_t>(0, *options.max_chunks));

    std::mutex mutex;
    std::vector<std::optional<ScanReport>> pending(static_cast<std::size_t>(last - first));
    std::int64_t frontier = first;
    auto last_write = std::chrono::steady_clock::time_point{};
    std::exception_ptr failure;
    std::atomic<std::int64_t> next{first};
    std::atomic<bool> stop{false};

    auto write_checkpoint = [&](bool force) {
        if (!options.checkpoint) return;
        const auto now = std::chrono::steady_clock::now();
        if (!force && now - last_write < options.checkpoint_interval) return;
        last_write = now;
        save_checkpoint(*options.checkpoint, Checkpoint{lo, hi, chunk, aggregate.hi, sections,
                                                        options.constant.value(), aggregate});
    };

    auto worker = [&] {
        try {
            for (std::int64_t k = next++; k < last && !stop; k = next++) {
                ScanReport part = empty_report(chunk_lo(k), sections, 2);
                for (std::int64_t E = chunk_lo(k); E <= chunk_hi(k); E += 2) {
                    accumulate(part, E, table, sections, options.constant);
                    part.hi = E;
                }
                std::lock_guard lock(mutex);
                pending[static_cast<std::size_t>(k - first)] = std::move(part);
                bool advanced = false;
                while (frontier < last && pending[static_cast<std::size_t>(frontier - first)]) {
                    auto& slot = pending[static_cast<std::size_t>(frontier - first)];
                    aggregate = merge(std::move(aggregate), *slot);
                    slot.reset();
                    ++frontier;
                    advanced = true;
                }
                if (advanced) write_checkpoint(false);
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
            stop = true;
        }
    };

    unsigned width = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    width = static_cast<unsigned>(std::min<std::int64_t>(width, std::max<std::int64_t>(1, last - first)));
    if (width <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(width);
        for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    write_checkpoint(true);
    return aggregate;
}

ScanReport goldbach_scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table, const ScanOptions& options)
{
    validate_range(lo, hi, table, 4);
    return scan(lo, hi, table, ScanSections{.goldbach = true}, options);
}

ScanReport census(std::int64_t lo, std::int64_t hi, const PrimeTable& table, const ScanOptions& options)
{
    validate_range(lo, hi, table, 4);
    return scan(lo, hi, table, ScanSections{.census = true}, options);
}

ScanReport theorem_check(std::int64_t lo, std::int64_t hi, const PrimeTable& table, const ScanOptions& options)
{
    validate_range(lo, hi, table, 4);
    return scan(lo, hi, table,
                ScanSections{.goldbach = true, .census = true, .bounds = true, .identities = true, .theorem = true},
                options);
}

ScanReport dusart_scan(std::int64_t lo, std::int64_t hi, const PrimeTable& table, BoundConstant c)
{
    if (lo < 2) throw std::invalid_argument("dusart scan must start at >= 2");
    if (lo > hi) throw std::invalid_argument("scan range is empty: lo > hi");
    if (hi > table.limit())
        throw OutOfCoverage("scan end " + std::to_string(hi) + " exceeds prime table limit " +
                            std::to_string(table.limit()));
    ScanReport r = empty_report(lo, ScanSections{}, 1);
    r.hi = hi;
    for (std::int64_t x = lo; x <= hi; ++x) {
        const auto check = check_dusart(x, table, c);
        record(r, "dusart_lower", check.lower, x);
        record(r, "dusart_upper", check.upper, x);
        ++r.scanned;
    }
    return r;
}

} // namespace sce

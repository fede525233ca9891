#include "sce/cli.hpp"

#include "sce/errors.hpp"
#include "sce/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sce {

namespace {

struct Outcome {
    std::string text;
    int code = kExitOk;
};

struct Range {
    std::int64_t lo;
    std::int64_t hi;
};

Range resolve_range(const CliConfig& cfg, std::int64_t default_lo)
{
    if (cfg.number) {
        if (cfg.from || cfg.to) throw std::invalid_argument("give either a single number or --from/--to, not both");
        return {*cfg.number, *cfg.number};
    }
    if (!cfg.to) throw std::invalid_argument("missing --to (or a single number)");
    return {cfg.from.value_or(default_lo), *cfg.to};
}

void require_even_range(const Range& r, std::int64_t min_lo)
{
    if (r.lo % 2 != 0 || r.hi % 2 != 0) throw std::invalid_argument("range bounds must be even");
    if (r.lo < min_lo) throw std::invalid_argument("range must start at >= " + std::to_string(min_lo));
    if (r.lo > r.hi) throw std::invalid_argument("range is empty: --from exceeds --to");
}

PrimeTable table_for(const CliConfig& cfg, std::int64_t needed)
{
    return PrimeTable::build(cfg.limit.value_or(std::max<std::int64_t>(needed, 2)));
}

ScanOptions scan_options(const CliConfig& cfg)
{
    ScanOptions o;
    o.constant = BoundConstant(cfg.constant);
    o.chunk_size = cfg.chunk_size;
    o.workers = cfg.workers;
    o.checkpoint = cfg.checkpoint;
    return o;
}

int scan_exit_code(const ScanReport& r, bool strict)
{
    const bool goldbach = std::ranges::any_of(r.goldbach_failures, [&](auto E) { return strict || E != 4; }) ||
                          !r.theorem_violations.empty();
    if (goldbach) return kExitGoldbach;
    if (!r.bound_failures.empty() || !r.identity_failures.empty()) return kExitInequality;
    return kExitOk;
}

std::vector<ThresholdRow> compute_thresholds(const CliConfig& cfg)
{
    struct Spec {
        BoundFunction id;
        double lo, hi;
        std::optional<double> published;
    };
    // threshold_24 changes sign only just above its domain floor (near 4.9);
    // the second bracket shows there is no root near the published value.
    const std::vector<Spec> specs = {
        {BoundFunction::f_35, 100.0, 200.0, kDifferenceRoot},
        {BoundFunction::threshold_235, 100.0, 1e6, kThreshold235},
        {BoundFunction::threshold_24, 100.0, 1e6, kThreshold24},
        {BoundFunction::threshold_24, 4.5, 1e6, kThreshold24},
    };
    const BoundConstant c(cfg.constant);
    std::vector<ThresholdRow> rows;
    for (const auto& s : specs) {
        ThresholdRow row{std::string(to_string(s.id)), s.lo, s.hi, std::nullopt, s.published, ""};
        try {
            row.root = find_root(s.id, s.lo, s.hi, cfg.tolerance, c);
            if (s.published) {
                std::ostringstream note;
                note << "differs from published value by " << std::abs(row.root->root - *s.published);
                row.note = note.str();
            }
        } catch (const BracketError&) {
            row.note = "no sign change in bracket";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Outcome execute(const CliConfig& cfg)
{
    const BoundConstant c(cfg.constant);
    switch (cfg.command) {
    case Command::decompose: {
        if (!cfg.number) throw std::invalid_argument("decompose needs E");
        require_even(*cfg.number);
        const auto table = table_for(cfg, *cfg.number);
        return {render_decomposition(decompose(*cfg.number, table), cfg.format)};
    }
    case Command::interactions: {
        if (!cfg.number) throw std::invalid_argument("interactions needs E");
        require_even(*cfg.number);
        const auto table = table_for(cfg, *cfg.number);
        return {render_interactions(*cfg.number, table, cfg.format)};
    }
    case Command::types: return {render_types(cfg.format)};
    case Command::census: {
        const auto r = resolve_range(cfg, 4);
        require_even_range(r, 4);
        const auto table = table_for(cfg, r.hi);
        return {render_census(census(r.lo, r.hi, table, scan_options(cfg)), cfg.format)};
    }
    case Command::goldbach: {
        const auto r = resolve_range(cfg, 4);
        require_even_range(r, 4);
        const auto table = table_for(cfg, r.hi);
        const auto report = goldbach_scan(r.lo, r.hi, table, scan_options(cfg));
        return {render_scan(report, cfg.format), scan_exit_code(report, cfg.strict)};
    }
    case Command::bounds: {
        const auto r = resolve_range(cfg, 4);
        require_even_range(r, 2);
        const auto table = table_for(cfg, r.hi);
        if (cfg.number) {
            const auto report = check_bounds(decompose(r.lo, table), table, c);
            return {render_bound_report(report, c, cfg.format), report.any_failure() ? kExitInequality : kExitOk};
        }
        const auto report = scan(r.lo, r.hi, table, ScanSections{.bounds = true}, scan_options(cfg));
        return {render_scan(report, cfg.format), scan_exit_code(report, cfg.strict)};
    }
    case Command::dusart: {
        const auto r = resolve_range(cfg, 2);
        if (r.lo < 2 || r.lo > r.hi) throw std::invalid_argument("dusart range must satisfy 2 <= from <= to");
        const auto table = table_for(cfg, r.hi);
        const auto report = dusart_scan(r.lo, r.hi, table, c);
        return {render_scan(report, cfg.format), scan_exit_code(report, cfg.strict)};
    }
    case Command::thresholds: return {render_thresholds(compute_thresholds(cfg), cfg.format)};
    case Command::theorem: {
        const auto r = resolve_range(cfg, kTheoremMinE + 1);
        require_even_range(r, 4);
        const auto table = table_for(cfg, r.hi);
        const auto report = theorem_check(r.lo, r.hi, table, scan_options(cfg));
        return {render_scan(report, cfg.format), scan_exit_code(report, cfg.strict)};
    }
    }
    throw std::invalid_argument("unknown command");
}

} // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    Outcome outcome;
    try {
        outcome = execute(config);
    } catch (const OutOfCoverage& e) {
        err << "error: coverage: " << e.what() << '\n';
        return kExitResource;
    } catch (const ResourceError& e) {
        err << "error: resource: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: io: " << e.what() << '\n';
        return kExitResource;
    }

    if (config.output) {
        std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
        if (!file || !(file << outcome.text) || !file.flush()) {
            err << "error: io: cannot write " << config.output->string() << '\n';
            return kExitResource;
        }
    } else {
        out << outcome.text;
    }
    return outcome.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quadruple decomposition, bound checks and range scans for even numbers", "sce"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format = "table";
    std::string output, checkpoint;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--limit", cfg.limit, "Sieve limit (default: largest number referenced)");
        sub->add_option("--constant", cfg.constant, "Upper bound constant c in pi(x) <= c x/ln x")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
        sub->add_option("-o,--output", output, "Write the report to this file instead of stdout");
    };
    auto ranged = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("number", cfg.number, "Single even number");
        sub->add_option("--from", cfg.from, "First even number of the range");
        sub->add_option("--to", cfg.to, "Last even number of the range");
        sub->add_option("--workers", cfg.workers, "Worker threads (default: hardware concurrency)")
            ->envname("SCE_WORKERS");
        sub->add_option("--checkpoint", checkpoint, "Resumable checkpoint file")->envname("SCE_CHECKPOINT");
        sub->add_option("--chunk-size", cfg.chunk_size, "Even numbers per work chunk")->capture_default_str();
        sub->add_flag("--strict", cfg.strict, "Count E = 4 as a Goldbach failure for the exit code");
    };

    struct Entry {
        const char* name;
        const char* help;
        Command command;
    };
    const Entry entries[] = {
        {"decompose", "Quadruple (a, b, c, d) and wings of one even number", Command::decompose},
        {"interactions", "List the additive interactions of one even number", Command::interactions},
        {"types", "The 75 structural types", Command::types},
        {"census", "Structural-type census over a range", Command::census},
        {"goldbach", "Check d_E > 0 over a range", Command::goldbach},
        {"bounds", "Bound inequalities for one number or a range", Command::bounds},
        {"dusart", "Check x/ln x <= pi(x) <= c x/ln x over integers", Command::dusart},
        {"thresholds", "Bisection roots of the threshold functions", Command::thresholds},
        {"theorem", "Full check: Goldbach, census, bounds, identities", Command::theorem},
    };
    for (const auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        sub->callback([&cfg, command = e.command] { cfg.command = command; });
        switch (e.command) {
        case Command::decompose:
        case Command::interactions:
            common(sub);
            sub->add_option("E", cfg.number, "Even number")->required();
            break;
        case Command::types: common(sub); break;
        case Command::thresholds:
            common(sub);
            sub->add_option("--tol", cfg.tolerance, "Bisection tolerance")->capture_default_str();
            break;
        default: ranged(sub); break;
        }
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        cfg.format = parse_format(format);
        if (!output.empty()) cfg.output = output;
        if (!checkpoint.empty()) cfg.checkpoint = checkpoint;
        (void)BoundConstant(cfg.constant);
    } catch (const std::invalid_argument& e) {
        err << "error: usage: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cfg, out, err);
}

} // namespace sce

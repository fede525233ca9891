#include "sce/report.hpp"

#include "sce/checkpoint.hpp"
#include "sce/errors.hpp"
#include "sce/type_space.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sce {

using nlohmann::json;
using nlohmann::ordered_json;

Format parse_format(std::string_view name)
{
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string shortest(double value)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

std::string csv_header(std::string_view columns)
{
    std::string s(kCsvSchemaLine);
    s += '\n';
    s += columns;
    s += '\n';
    return s;
}

// Left-aligned text table with a header rule.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const
    {
        std::vector<std::size_t> width;
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], row[i].size());
            }
        std::ostringstream out;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (i) out << "  ";
                if (i + 1 == rows_[r].size())
                    out << rows_[r][i];
                else
                    out << std::left << std::setw(static_cast<int>(width[i])) << rows_[r][i];
            }
            out << '\n';
            if (r == 0) {
                std::size_t total = 0;
                for (const auto w : width) total += w;
                out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
            }
        }
        return out.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string pair_kind(bool px, bool py)
{
    if (px && py) return "d";
    if (px) return "c";
    if (py) return "b";
    return "a";
}

} // namespace

std::string render_decomposition(const Decomposition& dec, Format format)
{
    switch (format) {
    case Format::json: {
        ordered_json j;
        j["E"] = dec.E;
        j["a"] = dec.a.to_string();
        j["b"] = dec.b;
        j["c"] = dec.c;
        j["d"] = dec.d.to_string();
        j["L1"] = dec.L1.to_string();
        j["L2"] = dec.L2.to_string();
        j["R1"] = dec.R1.to_string();
        j["R2"] = dec.R2.to_string();
        return j.dump() + '\n';
    }
    case Format::csv:
        return csv_header("E,a,b,c,d,L1,L2,R1,R2") + std::to_string(dec.E) + ',' + dec.a.to_string() + ',' +
               std::to_string(dec.b) + ',' + std::to_string(dec.c) + ',' + dec.d.to_string() + ',' +
               dec.L1.to_string() + ',' + dec.L2.to_string() + ',' + dec.R1.to_string() + ',' +
               dec.R2.to_string() + '\n';
    case Format::table: {
        TextTable t({"field", "value"});
        t.add({"E", std::to_string(dec.E)});
        t.add({"a", dec.a.to_string()});
        t.add({"b", std::to_string(dec.b)});
        t.add({"c", std::to_string(dec.c)});
        t.add({"d", dec.d.to_string()});
        t.add({"L1", dec.L1.to_string()});
        t.add({"L2", dec.L2.to_string()});
        t.add({"R1", dec.R1.to_string()});
        t.add({"R2", dec.R2.to_string()});
        t.add({"self", std::string(to_string(dec.tallies.self_kind))});
        return t.str();
    }
    }
    return {};
}

std::string render_interactions(std::int64_t E, const PrimeTable& table, Format format)
{
    const auto pairs = interactions(E);
    if (E > table.limit())
        throw OutOfCoverage("E = " + std::to_string(E) + " exceeds prime table limit");
    auto kind = [&](const Interaction& p) { return pair_kind(table.is_prime(p.x), table.is_prime(p.y)); };
    switch (format) {
    case Format::json: {
        ordered_json j;
        j["E"] = E;
        j["interactions"] = ordered_json::array();
        for (const auto& p : pairs) j["interactions"].push_back({{"x", p.x}, {"y", p.y}, {"class", kind(p)}});
        return j.dump() + '\n';
    }
    case Format::csv: {
        auto s = csv_header("x,y,class");
        for (const auto& p : pairs) s += std::to_string(p.x) + ',' + std::to_string(p.y) + ',' + kind(p) + '\n';
        return s;
    }
    case Format::table: {
        TextTable t({"x", "y", "class"});
        for (const auto& p : pairs) t.add({std::to_string(p.x), std::to_string(p.y), kind(p)});
        return t.str();
    }
    }
    return {};
}

std::string render_types(Format format)
{
    const auto& types = enumerate_types();
    switch (format) {
    case Format::json: {
        ordered_json j = ordered_json::array();
        for (const auto& t : types)
            j.push_back({{"type_id", t.type_id()},
                         {"canonical", t.canonical()},
                         {"category", t.category()},
                         {"excluded", t.excluded()}});
        return j.dump() + '\n';
    }
    case Format::csv: {
        auto s = csv_header("type_id,canonical,category,excluded");
        for (const auto& t : types)
            s += std::to_string(t.type_id()) + ',' + t.canonical() + ',' + std::to_string(t.category()) + ',' +
                 (t.excluded() ? "true" : "false") + '\n';
        return s;
    }
    case Format::table: {
        TextTable table({"id", "type", "category", "excluded"});
        for (const auto& t : types)
            table.add({std::to_string(t.type_id()), t.canonical(), std::to_string(t.category()),
                       t.excluded() ? "yes" : ""});
        return table.str();
    }
    }
    return {};
}

std::string render_census(const ScanReport& report, Format format)
{
    struct Row {
        const StructuralType* type;
        std::int64_t count;
    };
    std::vector<Row> rows;
    for (const auto& [canonical, count] : report.type_census) rows.push_back({find_type(canonical), count});

    switch (format) {
    case Format::json: {
        ordered_json j;
        j["range"] = {report.lo, report.hi};
        j["scanned"] = report.scanned;
        j["census"] = ordered_json::object();
        for (const auto& r : rows) j["census"][r.type->canonical()] = r.count;
        j["excluded_hits"] = report.excluded_hits.size();
        return j.dump() + '\n';
    }
    case Format::csv: {
        auto s = csv_header("type_id,canonical,category,excluded,count");
        for (const auto& r : rows)
            s += std::to_string(r.type->type_id()) + ',' + r.type->canonical() + ',' +
                 std::to_string(r.type->category()) + ',' + (r.type->excluded() ? "true" : "false") + ',' +
                 std::to_string(r.count) + '\n';
        return s;
    }
    case Format::table: {
        TextTable t({"id", "type", "category", "excluded", "count"});
        for (const auto& r : rows)
            t.add({std::to_string(r.type->type_id()), r.type->canonical(), std::to_string(r.type->category()),
                   r.type->excluded() ? "yes" : "", std::to_string(r.count)});
        return "range [" + std::to_string(report.lo) + ", " + std::to_string(report.hi) + "], " +
               std::to_string(report.scanned) + " numbers\n" + t.str();
    }
    }
    return {};
}

std::string render_scan(const ScanReport& report, Format format)
{
    if (format == Format::json) return json(report).dump() + '\n';

    // (section, id, value) rows shared by the csv and table forms
    std::vector<std::array<std::string, 3>> rows;
    auto add = [&](std::string section, std::string id, std::string value) {
        rows.push_back({std::move(section), std::move(id), std::move(value)});
    };
    add("summary", "lo", std::to_string(report.lo));
    add("summary", "hi", std::to_string(report.hi));
    add("summary", "scanned", std::to_string(report.scanned));
    if (report.sections.goldbach) {
        add("summary", "goldbach_failures", std::to_string(report.goldbach_failures.size()));
        if (report.min_d) add("min_d", std::to_string(report.min_d->E), report.min_d->d.to_string());
        for (const auto E : report.goldbach_failures) add("goldbach_failure", "", std::to_string(E));
    }
    if (report.sections.census || report.sections.theorem)
        add("summary", "excluded_hits", std::to_string(report.excluded_hits.size()));
    if (report.sections.theorem) {
        add("summary", "theorem_checked", std::to_string(report.theorem_checked));
        add("summary", "theorem_violations", std::to_string(report.theorem_violations.size()));
    }
    if (report.sections.identities)
        add("summary", "identity_failures", std::to_string(report.identity_failures.size()));
    for (const auto& [type, count] : report.type_census) add("census", type, std::to_string(count));
    for (const auto& [id, t] : report.bound_tallies) {
        add("bound_applicable", id, std::to_string(t.applicable));
        add("bound_held", id, std::to_string(t.held));
        add("bound_failed", id, std::to_string(t.failed));
        add("bound_marginal", id, std::to_string(t.marginal));
    }
    const bool table = format == Format::table;
    // Tables list only the first few entries of long sections.
    constexpr std::size_t kTableListLimit = 20;
    auto listed = [&](std::size_t i) { return !table || i < kTableListLimit; };
    for (const auto& [id, list] : report.bound_failures)
        for (std::size_t i = 0; i < list.size() && listed(i); ++i) add("bound_failure", id, std::to_string(list[i]));
    for (std::size_t i = 0; i < report.identity_failures.size() && listed(i); ++i)
        add("identity_failure", report.identity_failures[i].second, std::to_string(report.identity_failures[i].first));
    for (std::size_t i = 0; i < report.excluded_hits.size() && listed(i); ++i)
        add("excluded_hit", report.excluded_hits[i].second, std::to_string(report.excluded_hits[i].first));
    for (const auto E : report.theorem_violations) add("theorem_violation", "", std::to_string(E));

    if (table) {
        TextTable t({"section", "id", "value"});
        for (auto& r : rows) t.add({r[0], r[1], r[2]});
        return t.str();
    }
    auto s = csv_header("section,id,value");
    for (const auto& r : rows) s += r[0] + ',' + r[1] + ',' + r[2] + '\n';
    return s;
}

std::string render_bound_report(const BoundReport& report, BoundConstant c, Format format)
{
    switch (format) {
    case Format::json: {
        ordered_json j;
        j["E"] = report.E;
        j["constant"] = c.value();
        j["checks"] = ordered_json::object();
        for (const auto id : kAllInequalities) j["checks"][std::string(to_string(id))] = to_string(report[id]);
        return j.dump() + '\n';
    }
    case Format::csv: {
        auto s = csv_header("E,inequality,verdict");
        for (const auto id : kAllInequalities)
            s += std::to_string(report.E) + ',' + std::string(to_string(id)) + ',' + std::string(to_string(report[id])) +
                 '\n';
        return s;
    }
    case Format::table: {
        TextTable t({"inequality", "verdict"});
        for (const auto id : kAllInequalities)
            t.add({std::string(to_string(id)), std::string(to_string(report[id]))});
        return "E = " + std::to_string(report.E) + ", constant " + shortest(c.value()) + "\n" + t.str();
    }
    }
    return {};
}

std::string render_thresholds(const std::vector<ThresholdRow>& rows, Format format)
{
    auto root_text = [](const ThresholdRow& r) { return r.root ? shortest(r.root->root) : std::string(); };
    auto published_text = [](const ThresholdRow& r) { return r.published ? shortest(*r.published) : std::string(); };
    switch (format) {
    case Format::json: {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["id"] = r.id;
            row["bracket"] = {r.lo, r.hi};
            row["root"] = r.root ? ordered_json(r.root->root) : ordered_json(nullptr);
            row["iterations"] = r.root ? ordered_json(r.root->iterations) : ordered_json(nullptr);
            row["published"] = r.published ? ordered_json(*r.published) : ordered_json(nullptr);
            row["note"] = r.note;
            j.push_back(std::move(row));
        }
        return j.dump() + '\n';
    }
    case Format::csv: {
        auto s = csv_header("id,lo,hi,root,iterations,published,note");
        for (const auto& r : rows)
            s += r.id + ',' + shortest(r.lo) + ',' + shortest(r.hi) + ',' + root_text(r) + ',' +
                 (r.root ? std::to_string(r.root->iterations) : std::string()) + ',' + published_text(r) + ',' +
                 r.note + '\n';
        return s;
    }
    case Format::table: {
        TextTable t({"function", "bracket", "root", "published", "note"});
        for (const auto& r : rows)
            t.add({r.id, "[" + shortest(r.lo) + ", " + shortest(r.hi) + "]", root_text(r), published_text(r), r.note});
        return t.str();
    }
    }
    return {};
}

} // namespace sce

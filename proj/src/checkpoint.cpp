#include "sce/checkpoint.hpp"

#include <fstream>
#include <stdexcept>

namespace sce {

using nlohmann::json;

void to_json(json& j, const Tally& t)
{
    j = json{{"applicable", t.applicable}, {"held", t.held}, {"failed", t.failed}, {"marginal", t.marginal}};
}

void from_json(const json& j, Tally& t)
{
    j.at("applicable").get_to(t.applicable);
    j.at("held").get_to(t.held);
    j.at("failed").get_to(t.failed);
    j.at("marginal").get_to(t.marginal);
}

void to_json(json& j, const ScanSections& s)
{
    j = json{{"goldbach", s.goldbach},
             {"census", s.census},
             {"bounds", s.bounds},
             {"identities", s.identities},
             {"theorem", s.theorem}};
}

void from_json(const json& j, ScanSections& s)
{
    j.at("goldbach").get_to(s.goldbach);
    j.at("census").get_to(s.census);
    j.at("bounds").get_to(s.bounds);
    j.at("identities").get_to(s.identities);
    j.at("theorem").get_to(s.theorem);
}

void to_json(json& j, const ScanReport& r)
{
    j = json::object();
    j["range"] = {r.lo, r.hi};
    j["step"] = r.step;
    j["sections"] = r.sections;
    j["scanned"] = r.scanned;
    j["goldbach_failures"] = r.goldbach_failures;
    j["min_d"] = r.min_d ? json{{"E", r.min_d->E}, {"d", r.min_d->d.to_string()}} : json(nullptr);
    j["type_census"] = r.type_census;
    j["excluded_hits"] = r.excluded_hits;
    j["bound_failures"] = r.bound_failures;
    j["marginal"] = r.marginal;
    j["bound_tallies"] = r.bound_tallies;
    j["identity_failures"] = r.identity_failures;
    j["theorem_checked"] = r.theorem_checked;
    j["theorem_violations"] = r.theorem_violations;
}

void from_json(const json& j, ScanReport& r)
{
    const auto& range = j.at("range");
    r.lo = range.at(0).get<std::int64_t>();
    r.hi = range.at(1).get<std::int64_t>();
    j.at("step").get_to(r.step);
    j.at("sections").get_to(r.sections);
    j.at("scanned").get_to(r.scanned);
    j.at("goldbach_failures").get_to(r.goldbach_failures);
    if (const auto& m = j.at("min_d"); m.is_null())
        r.min_d.reset();
    else
        r.min_d = MinD{HalfValue::parse(m.at("d").get<std::string>()), m.at("E").get<std::int64_t>()};
    j.at("type_census").get_to(r.type_census);
    j.at("excluded_hits").get_to(r.excluded_hits);
    j.at("bound_failures").get_to(r.bound_failures);
    j.at("marginal").get_to(r.marginal);
    j.at("bound_tallies").get_to(r.bound_tallies);
    j.at("identity_failures").get_to(r.identity_failures);
    j.at("theorem_checked").get_to(r.theorem_checked);
    j.at("theorem_violations").get_to(r.theorem_violations);
}

void to_json(json& j, const Checkpoint& c)
{
    j = json{{"range", {c.lo, c.hi}},
             {"chunk_size", c.chunk_size},
             {"completed_through", c.completed_through},
             {"sections", c.sections},
             {"constant", c.constant},
             {"aggregates", c.aggregates}};
}

void from_json(const json& j, Checkpoint& c)
{
    c.lo = j.at("range").at(0).get<std::int64_t>();
    c.hi = j.at("range").at(1).get<std::int64_t>();
    j.at("chunk_size").get_to(c.chunk_size);
    j.at("completed_through").get_to(c.completed_through);
    j.at("sections").get_to(c.sections);
    j.at("constant").get_to(c.constant);
    j.at("aggregates").get_to(c.aggregates);
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << json(checkpoint).dump() << '\n';
        if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        return json::parse(in).get<Checkpoint>();
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed checkpoint " + path.string() + ": " + e.what());
    }
}

} // namespace sce

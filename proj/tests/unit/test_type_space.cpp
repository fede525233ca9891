#include "doctest.h"

#include "sce/type_space.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace sce;

namespace {

// Canonical form of a chain "s0 r0 s1 r1 s2 r2 s3" with r in {'<', '='},
// built independently of StructuralType.
std::string canonical_of_chain(std::array<char, 4> syms, std::array<char, 3> rels)
{
    std::vector<std::string> blocks{std::string(1, syms[0])};
    for (int i = 0; i < 3; ++i) {
        if (rels[i] == '=') blocks.back() += syms[i + 1];
        else blocks.emplace_back(1, syms[i + 1]);
    }
    std::string out;
    for (auto& b : blocks) {
        std::ranges::sort(b);
        if (!out.empty()) out += '<';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += '=';
            out += b[i];
        }
    }
    return out;
}

// Expands "X <= o <= o <= o" for each anchor X in the order d, c, b, a into
// 3! orders x 2^3 relation patterns = 48 structures each, and assigns each
// distinct structure the category of the first anchor that produced it.
std::map<std::string, int> anchored_expansion(int& total_entries)
{
    std::map<std::string, int> category;
    total_entries = 0;
    const std::array<char, 4> anchors = {'d', 'c', 'b', 'a'};
    for (int k = 0; k < 4; ++k) {
        std::string rest;
        for (char s : {'a', 'b', 'c', 'd'})
            if (s != anchors[k]) rest += s;
        std::ranges::sort(rest);
        do {
            for (int mask = 0; mask < 8; ++mask) {
                const std::array<char, 3> rels = {mask & 1 ? '=' : '<', mask & 2 ? '=' : '<', mask & 4 ? '=' : '<'};
                ++total_entries;
                category.try_emplace(canonical_of_chain({anchors[k], rest[0], rest[1], rest[2]}, rels), k + 1);
            }
        } while (std::ranges::next_permutation(rest).found);
    }
    return category;
}

std::array<std::int64_t, 4> realize(const StructuralType& t, std::int64_t scale = 1, std::int64_t offset = 0)
{
    std::array<std::int64_t, 4> v{};
    for (int s = 0; s < 4; ++s) v[s] = offset + scale * t.ranks()[s];
    return v;
}

} // namespace

TEST_CASE("enumeration counts")
{
    const auto& types = enumerate_types();
    CHECK(types.size() == 75);

    std::array<int, 5> per_category{};
    int excluded = 0, full_tie = 0;
    std::set<std::string> names;
    std::set<int> ids;
    for (const auto& t : types) {
        ++per_category[t.category()];
        excluded += t.excluded();
        full_tie += t.blocks().size() == 1;
        names.insert(t.canonical());
        ids.insert(t.type_id());
    }
    CHECK(per_category[1] == 26);
    CHECK(per_category[2] == 20);
    CHECK(per_category[3] == 16);
    CHECK(per_category[4] == 13);
    CHECK(excluded == 3);
    CHECK(full_tie == 1);
    CHECK(names.size() == 75);
    CHECK(ids.size() == 75);
    CHECK(*ids.begin() == 1);
    CHECK(*ids.rbegin() == 75);
}

TEST_CASE("ids are the lexicographic rank of the canonical string")
{
    const auto& types = enumerate_types();
    for (std::size_t i = 0; i < types.size(); ++i) {
        REQUIRE(types[i].type_id() == static_cast<int>(i) + 1);
        if (i) REQUIRE(types[i - 1].canonical() < types[i].canonical());
    }
    CHECK(types.front().canonical() == "a<b<c<d");
}

TEST_CASE("anchored 192-entry expansion collapses to the same 75 types and categories")
{
    int entries = 0;
    const auto expansion = anchored_expansion(entries);
    CHECK(entries == 192);
    REQUIRE(expansion.size() == 75);
    for (const auto& t : enumerate_types()) {
        CAPTURE(t.canonical());
        const auto it = expansion.find(t.canonical());
        REQUIRE(it != expansion.end());
        CHECK(it->second == t.category());
    }
}

TEST_CASE("category from minimal-block membership")
{
    for (const auto& t : enumerate_types()) {
        const auto& r = t.ranks();
        const int expected = r[3] == 0 ? 1 : r[2] == 0 ? 2 : r[1] == 0 ? 3 : 4;
        REQUIRE(t.category() == expected);
    }
}

TEST_CASE("excluded structures")
{
    for (const char* name : {"d<b<c<a", "d<b=c<a", "d<c<b<a"}) {
        const auto* t = find_type(name);
        REQUIRE(t != nullptr);
        CHECK(is_excluded(*t));
        CHECK(t->category() == 1);
    }
    CHECK_FALSE(is_excluded(*find_type("d<a<b<c")));
    CHECK_FALSE(is_excluded(*find_type("a=b=c=d")));
    CHECK(find_type("d<a<b") == nullptr);
    CHECK(find_type("b=a<c<d") == nullptr);  // not canonical
}

TEST_CASE("classify examples")
{
    const auto t = PrimeTable::build(100);
    const auto& t20 = classify(decompose(20, t));
    CHECK(t20.canonical() == "a<c<b=d");
    CHECK(t20.category() == 4);

    const auto& t10 = classify(decompose(10, t));
    CHECK(t10.canonical() == "b=c<a<d");
    CHECK(t10.category() == 2);

    const auto& tie = classify_values({5, 5, 5, 5});
    CHECK(tie.canonical() == "a=b=c=d");
    CHECK(tie.category() == 1);
}

TEST_CASE("round trip and scale invariance")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> scale(1, 1'000'000), offset(0, 1'000'000);
    for (const auto& t : enumerate_types()) {
        CAPTURE(t.canonical());
        REQUIRE(classify_values(realize(t)) == t);
        for (int i = 0; i < 50; ++i) {
            const auto v = realize(t, scale(rng), offset(rng));
            const auto& first = classify_values(v);
            REQUIRE(first == t);
            const std::int64_t k = scale(rng);
            REQUIRE(classify_values({v[0] * k, v[1] * k, v[2] * k, v[3] * k}) == first);
        }
    }
}

TEST_CASE("rank vectors with gaps are rejected")
{
    CHECK_THROWS_AS(StructuralType({0, 2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StructuralType({1, 1, 1, 1}), std::invalid_argument);
    CHECK_NOTHROW(StructuralType({0, 1, 1, 0}));
    CHECK(StructuralType({0, 1, 1, 0}).canonical() == "a=d<b=c");
}

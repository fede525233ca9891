#include "sce/type_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace sce {

namespace {

constexpr std::array<char, 4> kSymbolChar = {'a', 'b', 'c', 'd'};

constexpr int key_of(const std::array<std::uint8_t, 4>& ranks) noexcept
{
    return ranks[0] | (ranks[1] << 2) | (ranks[2] << 4) | (ranks[3] << 6);
}

} // namespace

namespace detail {

struct TypeCatalog {
    std::vector<StructuralType> types;
    std::array<int, 256> index_by_key{};  // -1 when the rank vector is not a type

    TypeCatalog()
    {
        for (int key = 0; key < 256; ++key) {
            const std::array<std::uint8_t, 4> ranks = {
                static_cast<std::uint8_t>(key & 3), static_cast<std::uint8_t>((key >> 2) & 3),
                static_cast<std::uint8_t>((key >> 4) & 3), static_cast<std::uint8_t>((key >> 6) & 3)};
            try {
                types.emplace_back(ranks);
            } catch (const std::invalid_argument&) {
                // rank vector with a gap, not an ordered partition
            }
        }
        std::ranges::sort(types, {}, &StructuralType::canonical);
        index_by_key.fill(-1);
        for (std::size_t i = 0; i < types.size(); ++i) {
            types[i].type_id_ = static_cast<int>(i) + 1;
            index_by_key[key_of(types[i].ranks())] = static_cast<int>(i);
        }
    }
};

} // namespace detail

static const detail::TypeCatalog& catalog()
{
    static const detail::TypeCatalog instance;
    return instance;
}

StructuralType::StructuralType(std::array<std::uint8_t, 4> ranks) : ranks_(ranks)
{
    std::uint8_t top = 0;
    for (const auto r : ranks) {
        if (r > 3) throw std::invalid_argument("structural type rank out of range");
        top = std::max(top, r);
    }
    blocks_.assign(top + 1, 0);
    for (int s = 0; s < 4; ++s) blocks_[ranks[s]] |= static_cast<std::uint8_t>(1U << s);
    if (std::ranges::find(blocks_, std::uint8_t{0}) != blocks_.end())
        throw std::invalid_argument("structural type ranks must be contiguous from 0");

    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) canonical_ += '<';
        bool first = true;
        for (int s = 0; s < 4; ++s) {
            if (!(blocks_[i] & (1U << s))) continue;
            if (!first) canonical_ += '=';
            canonical_ += kSymbolChar[s];
            first = false;
        }
    }

    const auto minimal = blocks_.front();
    category_ = (minimal & 0b1000) ? 1 : (minimal & 0b0100) ? 2 : (minimal & 0b0010) ? 3 : 4;
    excluded_ = canonical_ == "d<b<c<a" || canonical_ == "d<b=c<a" || canonical_ == "d<c<b<a";
}

const std::vector<StructuralType>& enumerate_types() { return catalog().types; }

bool is_excluded(const StructuralType& type) noexcept { return type.excluded(); }

const StructuralType& classify_values(const std::array<std::int64_t, 4>& values)
{
    // rank = number of distinct values strictly below
    std::array<std::uint8_t, 4> ranks{};
    for (int s = 0; s < 4; ++s) {
        std::uint8_t below = 0;
        for (int t = 0; t < 4; ++t) {
            if (values[t] >= values[s]) continue;
            bool duplicate = false;
            for (int u = 0; u < t; ++u) duplicate |= values[u] == values[t];
            below += duplicate ? 0 : 1;
        }
        ranks[s] = below;
    }
    const auto& cat = catalog();
    return cat.types[cat.index_by_key[key_of(ranks)]];
}

const StructuralType& classify(const Decomposition& dec)
{
    return classify_values({dec.a.doubled(), 2 * dec.b, 2 * dec.c, dec.d.doubled()});
}

const StructuralType* find_type(std::string_view canonical)
{
    const auto& types = enumerate_types();
    const auto it = std::ranges::lower_bound(types, canonical, {}, &StructuralType::canonical);
    if (it == types.end() || it->canonical() != canonical) return nullptr;
    return &*it;
}

} // namespace sce

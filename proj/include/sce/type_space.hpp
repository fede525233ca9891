// type_space.hpp
// Structural types: weak orderings of the quadruple symbols {a, b, c, d}.
//
// A type is an ordered set partition: blocks[0] < blocks[1] < ..., symbols
// inside a block tied. There are 75 of them (the ordered Bell number for 4).
//
// Canonical text form lists blocks in order, symbols a..d inside a block
// joined by '=', blocks joined by '<' ("a<b=c<d"). type_id is the 1-based
// rank of that string in plain lexicographic order.
//
// Category is decided by the minimal block: contains d -> 1, else c -> 2,
// else b -> 3, else 4.
#pragma once

#include "sce/sce_model.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sce {

enum class Symbol : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

namespace detail {
struct TypeCatalog;
}

class StructuralType {
public:
    // ranks[s] = index of the block holding symbol s. The used ranks must be
    // exactly {0, ..., k-1}; throws std::invalid_argument otherwise.
    explicit StructuralType(std::array<std::uint8_t, 4> ranks);

    // Bit s of blocks()[i] is set iff Symbol(s) lies in block i.
    const std::vector<std::uint8_t>& blocks() const noexcept { return blocks_; }
    const std::array<std::uint8_t, 4>& ranks() const noexcept { return ranks_; }
    std::uint8_t rank(Symbol s) const noexcept { return ranks_[static_cast<int>(s)]; }
    const std::string& canonical() const noexcept { return canonical_; }
    int category() const noexcept { return category_; }
    bool excluded() const noexcept { return excluded_; }
    int type_id() const noexcept { return type_id_; }

    friend bool operator==(const StructuralType& lhs, const StructuralType& rhs) noexcept
    {
        return lhs.ranks_ == rhs.ranks_;
    }

private:
    friend struct detail::TypeCatalog;

    std::array<std::uint8_t, 4> ranks_;
    std::vector<std::uint8_t> blocks_;
    std::string canonical_;
    int category_ = 0;
    bool excluded_ = false;
    int type_id_ = 0;
};

// The 75 types ordered by type_id. Built once; shared read-only.
const std::vector<StructuralType>& enumerate_types();

// The three types d<b<c<a, d<b=c<a, d<c<b<a.
bool is_excluded(const StructuralType& type) noexcept;

// Type realized by four values in symbol order (a, b, c, d); only their
// ordering and ties matter.
const StructuralType& classify_values(const std::array<std::int64_t, 4>& values);

// Classifies (a, b, c, d) by exact comparison of the doubled values.
const StructuralType& classify(const Decomposition& dec);

// Lookup by canonical string; nullptr when the text names no type.
const StructuralType* find_type(std::string_view canonical);

} // namespace sce

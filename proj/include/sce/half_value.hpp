#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sce {

// Exact value in {n/2 : n integer}, stored as its double.
class HalfValue {
public:
    constexpr HalfValue() noexcept = default;

    static constexpr HalfValue from_doubled(std::int64_t doubled) noexcept { return HalfValue(doubled); }
    static constexpr HalfValue from_integer(std::int64_t value) noexcept { return HalfValue(2 * value); }
    // Accepts the rendering produced by to_string(): "k" or "k/2".
    static HalfValue parse(std::string_view text);

    constexpr std::int64_t doubled() const noexcept { return doubled_; }
    constexpr bool is_integer() const noexcept { return doubled_ % 2 == 0; }

    constexpr std::int64_t ceil() const noexcept
    {
        return doubled_ >= 0 ? (doubled_ + 1) / 2 : -((-doubled_) / 2);
    }

    // Exact for |doubled| < 2^53.
    constexpr double to_double() const noexcept { return static_cast<double>(doubled_) / 2.0; }

    // "k" when integral, otherwise "k/2" with k odd.
    std::string to_string() const;

    friend constexpr HalfValue operator+(HalfValue lhs, HalfValue rhs) noexcept
    {
        return HalfValue(lhs.doubled_ + rhs.doubled_);
    }
    friend constexpr HalfValue operator-(HalfValue lhs, HalfValue rhs) noexcept
    {
        return HalfValue(lhs.doubled_ - rhs.doubled_);
    }
    friend constexpr auto operator<=>(HalfValue, HalfValue) noexcept = default;

private:
    constexpr explicit HalfValue(std::int64_t doubled) noexcept : doubled_(doubled) {}

    std::int64_t doubled_ = 0;
};

} // namespace sce

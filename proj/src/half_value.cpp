#include "sce/half_value.hpp"

#include <charconv>
#include <stdexcept>

namespace sce {

std::string HalfValue::to_string() const
{
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
}

HalfValue HalfValue::parse(std::string_view text)
{
    const bool halves = text.ends_with("/2");
    const auto digits = halves ? text.substr(0, text.size() - 2) : text;
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    if (halves) {
        if (value % 2 == 0)
            throw std::invalid_argument("half-integer numerator must be odd: '" + std::string(text) + "'");
        return from_doubled(value);
    }
    return from_integer(value);
}

} // namespace sce

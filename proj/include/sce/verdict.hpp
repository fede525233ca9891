#pragma once

#include <string_view>

namespace sce {

// Outcome of checking one inequality or identity for one number.
//   marginal       : the two sides are within the floating-point guard band
//   not_applicable : the number lies outside the inequality's stated domain
enum class Verdict { holds, fails, marginal, not_applicable };

constexpr std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::marginal: return "marginal";
    case Verdict::not_applicable: return "n/a";
    }
    return "?";
}

// Worst-of combination used for two-sided inequalities.
constexpr Verdict combine(Verdict lhs, Verdict rhs) noexcept
{
    if (lhs == Verdict::not_applicable || rhs == Verdict::not_applicable)
        return Verdict::not_applicable;
    if (lhs == Verdict::fails || rhs == Verdict::fails)
        return Verdict::fails;
    if (lhs == Verdict::marginal || rhs == Verdict::marginal)
        return Verdict::marginal;
    return Verdict::holds;
}

} // namespace sce

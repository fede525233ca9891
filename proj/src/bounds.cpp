#include "sce/bounds.hpp"

#include "sce/errors.hpp"

#include <algorithm>
#include <string>

namespace sce {

BoundConstant::BoundConstant(double c) : c_(c)
{
    if (!(c > 1.0) || !std::isfinite(c))
        throw std::invalid_argument("upper bound constant must be > 1, got " + std::to_string(c));
}

namespace {

struct NamedFunction {
    BoundFunction id;
    std::string_view name;
};

constexpr std::array<NamedFunction, kAllBoundFunctions.size()> kFunctionNames = {{
    {BoundFunction::lower_pi, "lower_pi"},         {BoundFunction::upper_pi, "upper_pi"},
    {BoundFunction::eq33_lower, "eq33_lower"},     {BoundFunction::eq33_upper, "eq33_upper"},
    {BoundFunction::eq34_lower, "eq34_lower"},     {BoundFunction::eq34_upper, "eq34_upper"},
    {BoundFunction::eq35_lower, "eq35_lower"},     {BoundFunction::eq35_upper, "eq35_upper"},
    {BoundFunction::eq36_lower, "eq36_lower"},     {BoundFunction::eq36_upper, "eq36_upper"},
    {BoundFunction::eq37_lower, "eq37_lower"},     {BoundFunction::eq37_upper, "eq37_upper"},
    {BoundFunction::eq38_lower, "eq38_lower"},     {BoundFunction::eq38_upper, "eq38_upper"},
    {BoundFunction::eq39_lower, "eq39_lower"},     {BoundFunction::eq39_upper, "eq39_upper"},
    {BoundFunction::f_35, "f_35"},                 {BoundFunction::threshold_235, "threshold_235"},
    {BoundFunction::threshold_24, "threshold_24"},
}};

constexpr std::array<std::string_view, kAllInequalities.size()> kInequalityNames = {
    "eq33", "eq34", "eq35", "eq35_5", "eq36", "eq37", "eq38", "eq39", "eq235", "eq24",
};

// x / ln x
double li_ratio(double x) { return x / std::log(x); }

} // namespace

std::string_view to_string(BoundFunction id) noexcept
{
    return kFunctionNames[static_cast<std::size_t>(id)].name;
}

BoundFunction parse_bound_function(std::string_view name)
{
    for (const auto& entry : kFunctionNames)
        if (entry.name == name) return entry.id;
    throw std::invalid_argument("unknown bound function '" + std::string(name) + "'");
}

double domain_floor(BoundFunction id) noexcept
{
    switch (id) {
    case BoundFunction::eq36_lower:
    case BoundFunction::eq36_upper:
    case BoundFunction::eq37_lower:
    case BoundFunction::eq37_upper:
    case BoundFunction::eq38_lower:
    case BoundFunction::eq38_upper:
    case BoundFunction::eq39_lower:
    case BoundFunction::eq39_upper:
    case BoundFunction::threshold_24:
        return 4.0;
    default:
        return 1.0;
    }
}

double bound_value(BoundFunction id, double x, BoundConstant constant)
{
    if (!(x > domain_floor(id)) || !std::isfinite(x))
        throw DomainError(std::string(to_string(id)) + " is undefined at x = " + std::to_string(x));

    const double c = constant.value();
    // Only touch ln(x/2 - 1) where it is defined.
    const bool wing = domain_floor(id) > 1.0;
    const double full = li_ratio(x);                      // x / ln x
    const double half = wing ? li_ratio(x / 2) : 0.0;     // (x/2) / ln(x/2)
    const double shifted = wing ? li_ratio(x / 2 - 1) : 0.0;  // (x/2-1) / ln(x/2-1)

    switch (id) {
    case BoundFunction::lower_pi: return full;
    case BoundFunction::upper_pi: return c * full;
    case BoundFunction::eq33_lower: return x / 2 - c * full + 1;
    case BoundFunction::eq33_upper: return x / 2 - full + 1;
    case BoundFunction::eq34_lower: return full - 1;
    case BoundFunction::eq34_upper: return c * full - 1;
    case BoundFunction::eq35_lower: return full - x / 4 - 1;
    case BoundFunction::eq35_upper: return c * full - x / 4 - 1;
    case BoundFunction::eq36_lower: return shifted - 1;
    case BoundFunction::eq36_upper: return c * half - 1;
    case BoundFunction::eq37_lower: return x / 4 - c * half + 1;
    case BoundFunction::eq37_upper: return x / 4 - shifted + 1;
    case BoundFunction::eq38_lower: return full - c * half;
    case BoundFunction::eq38_upper: return c * full - shifted;
    case BoundFunction::eq39_lower: return x / 4 - c * full + shifted;
    case BoundFunction::eq39_upper: return x / 4 - full + c * half;
    case BoundFunction::f_35: return c * full - x / 4 - 1;
    case BoundFunction::threshold_235: return (x / 4 - kAbstractConstant * full + 1) - (c * full - 1);
    case BoundFunction::threshold_24: return (shifted - 1) - (c * full - 1);
    }
    throw std::invalid_argument("unknown bound function");
}

std::string_view to_string(Inequality id) noexcept { return kInequalityNames[static_cast<std::size_t>(id)]; }

bool is_wing_bound(Inequality id) noexcept
{
    return id == Inequality::eq36 || id == Inequality::eq37 || id == Inequality::eq38 ||
           id == Inequality::eq39;
}

bool BoundReport::any_failure() const noexcept
{
    return std::ranges::find(verdicts, Verdict::fails) != verdicts.end();
}

Verdict strictly_less(double lhs, double rhs) noexcept
{
    const double gap = rhs - lhs;
    if (gap > kGuardBand) return Verdict::holds;
    if (gap < -kGuardBand) return Verdict::fails;
    return Verdict::marginal;
}

namespace {

Verdict between(BoundFunction lower, BoundFunction upper, double x, HalfValue value, BoundConstant c)
{
    const double v = value.to_double();
    return combine(strictly_less(bound_value(lower, x, c), v), strictly_less(v, bound_value(upper, x, c)));
}

Verdict exact(bool holds) { return holds ? Verdict::holds : Verdict::fails; }

} // namespace

BoundReport check_bounds(const Decomposition& dec, const PrimeTable& table, BoundConstant c)
{
    if (dec.E > table.limit())
        throw OutOfCoverage("E = " + std::to_string(dec.E) + " exceeds prime table limit " +
                            std::to_string(table.limit()));
    BoundReport r;
    r.E = dec.E;
    r.verdicts.fill(Verdict::not_applicable);

    const double E = static_cast<double>(dec.E);
    const auto b = HalfValue::from_integer(dec.b);
    const auto c_ = HalfValue::from_integer(dec.c);

    if (dec.E >= kTeeterMinE) {
        r[Inequality::eq33] = between(BoundFunction::eq33_lower, BoundFunction::eq33_upper, E,
                                      b + c_ + dec.a + dec.a, c);
        r[Inequality::eq34] = between(BoundFunction::eq34_lower, BoundFunction::eq34_upper, E,
                                      b + c_ + dec.d + dec.d, c);
        r[Inequality::eq35] = between(BoundFunction::eq35_lower, BoundFunction::eq35_upper, E,
                                      dec.d - dec.a, c);
    }
    if (E > kDifferenceRoot) r[Inequality::eq35_5] = exact(dec.d < dec.a);
    if (dec.E > kWingMinE) {
        r[Inequality::eq36] = between(BoundFunction::eq36_lower, BoundFunction::eq36_upper, E, dec.L2, c);
        r[Inequality::eq37] = between(BoundFunction::eq37_lower, BoundFunction::eq37_upper, E, dec.L1, c);
        r[Inequality::eq38] = between(BoundFunction::eq38_lower, BoundFunction::eq38_upper, E, dec.R2, c);
        r[Inequality::eq39] = between(BoundFunction::eq39_lower, BoundFunction::eq39_upper, E, dec.R1, c);
    }
    if (E > kThreshold235) r[Inequality::eq235] = exact(dec.a > c_ + dec.d + dec.d);
    if (E > kThreshold24) r[Inequality::eq24] = exact(dec.a > b + dec.d + dec.d);
    return r;
}

DusartCheck check_dusart(std::int64_t x, const PrimeTable& table, BoundConstant c)
{
    if (x < 2) throw std::invalid_argument("check_dusart needs x >= 2, got " + std::to_string(x));
    const double pi_x = static_cast<double>(table.pi(x));
    const double xd = static_cast<double>(x);
    DusartCheck r;
    // Non-strict: holds unless violated beyond the guard band.
    auto at_most = [](double lhs, double rhs) {
        const Verdict v = strictly_less(rhs, lhs);
        return v == Verdict::holds ? Verdict::fails : v == Verdict::fails ? Verdict::holds : Verdict::marginal;
    };
    if (x >= kTeeterMinE) r.lower = at_most(bound_value(BoundFunction::lower_pi, xd, c), pi_x);
    r.upper = at_most(pi_x, bound_value(BoundFunction::upper_pi, xd, c));
    return r;
}

int bisection_steps(double lo, double hi, double tol, int max_iterations)
{
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (hi - lo <= tol) return 0;
    const int needed = static_cast<int>(std::ceil(std::log2((hi - lo) / tol)));
    return std::min(needed, max_iterations);
}

RootResult find_root(BoundFunction id, double lo, double hi, double tol, BoundConstant c)
{
    return bisect([&](double x) { return bound_value(id, x, c); }, lo, hi, tol);
}

} // namespace sce

// bounds.hpp
// Closed-form prime-counting bounds, the inequalities derived from them for
// the quadruple (a, b, c, d), and bisection for their thresholds.
//
// Two upper constants appear in the literature this toolkit checks:
// 1.2251 (false as a bound on pi(x); first fails at x = 19) and 1.2551
// (valid for all x > 1). The configurable constant replaces every 1.2551;
// the one expression printed with 1.2251 keeps it literally.
#pragma once

#include "sce/prime_table.hpp"
#include "sce/sce_model.hpp"
#include "sce/verdict.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sce {

inline constexpr double kLemmaConstant = 1.2551;
inline constexpr double kAbstractConstant = 1.2251;
inline constexpr double kGuardBand = 1e-9;

// Domain thresholds as printed with each inequality.
inline constexpr std::int64_t kTeeterMinE = 17;          // E >= 17
inline constexpr double kDifferenceRoot = 130.4574578;   // d < a for E above this
inline constexpr std::int64_t kWingMinE = 34;            // E > 34 (statement)
inline constexpr std::int64_t kWingProofMinE = 141;      // E > 141 (proof)
inline constexpr double kThreshold235 = 2322.61;
inline constexpr double kThreshold24 = 2525.67;

class BoundConstant {
public:
    constexpr BoundConstant() noexcept = default;
    // Throws std::invalid_argument unless c > 1.
    explicit BoundConstant(double c);
    constexpr double value() const noexcept { return c_; }

private:
    double c_ = kLemmaConstant;
};

// Catalog of closed forms, one identifier per printed expression. For the
// inequalities, _lower / _upper name the two outer sides.
enum class BoundFunction {
    lower_pi,       // x / ln x
    upper_pi,       // c x / ln x
    eq33_lower, eq33_upper,
    eq34_lower, eq34_upper,
    eq35_lower, eq35_upper,
    eq36_lower, eq36_upper,
    eq37_lower, eq37_upper,
    eq38_lower, eq38_upper,
    eq39_lower, eq39_upper,
    f_35,           // c x / ln x - x/4 - 1
    threshold_235,  // (x/4 - 1.2251 x/ln x + 1) - (c x/ln x - 1)
    threshold_24,   // ((x/2-1)/ln(x/2-1) - 1) - (c x/ln x - 1)
};

inline constexpr std::array kAllBoundFunctions = {
    BoundFunction::lower_pi,   BoundFunction::upper_pi,   BoundFunction::eq33_lower,
    BoundFunction::eq33_upper, BoundFunction::eq34_lower, BoundFunction::eq34_upper,
    BoundFunction::eq35_lower, BoundFunction::eq35_upper, BoundFunction::eq36_lower,
    BoundFunction::eq36_upper, BoundFunction::eq37_lower, BoundFunction::eq37_upper,
    BoundFunction::eq38_lower, BoundFunction::eq38_upper, BoundFunction::eq39_lower,
    BoundFunction::eq39_upper, BoundFunction::f_35,       BoundFunction::threshold_235,
    BoundFunction::threshold_24,
};

std::string_view to_string(BoundFunction id) noexcept;
// Throws std::invalid_argument for unknown names.
BoundFunction parse_bound_function(std::string_view name);

// Smallest x (exclusive) at which the function is defined: 1 for forms in
// ln x only, 4 for forms containing ln(x/2 - 1).
double domain_floor(BoundFunction id) noexcept;

// Throws DomainError when x <= domain_floor(id).
double bound_value(BoundFunction id, double x, BoundConstant c = {});

// Inequalities checked per even number.
enum class Inequality { eq33, eq34, eq35, eq35_5, eq36, eq37, eq38, eq39, eq235, eq24 };

inline constexpr std::array kAllInequalities = {
    Inequality::eq33, Inequality::eq34, Inequality::eq35,  Inequality::eq35_5, Inequality::eq36,
    Inequality::eq37, Inequality::eq38, Inequality::eq39, Inequality::eq235,  Inequality::eq24,
};

std::string_view to_string(Inequality id) noexcept;
bool is_wing_bound(Inequality id) noexcept;

struct BoundReport {
    std::int64_t E = 0;
    std::array<Verdict, kAllInequalities.size()> verdicts{};

    Verdict operator[](Inequality id) const noexcept { return verdicts[static_cast<std::size_t>(id)]; }
    Verdict& operator[](Inequality id) noexcept { return verdicts[static_cast<std::size_t>(id)]; }
    bool any_failure() const noexcept;
};

// Strict lhs < rhs with the guard band: within kGuardBand is marginal.
Verdict strictly_less(double lhs, double rhs) noexcept;

// Evaluates every inequality against the exact decomposition values.
BoundReport check_bounds(const Decomposition& dec, const PrimeTable& table, BoundConstant c = {});

struct DusartCheck {
    Verdict lower = Verdict::not_applicable;  // x / ln x <= pi(x), x >= 17
    Verdict upper = Verdict::not_applicable;  // pi(x) <= c x / ln x, x >= 2
};

DusartCheck check_dusart(std::int64_t x, const PrimeTable& table, BoundConstant c = {});

struct RootResult {
    double root = 0.0;
    int iterations = 0;
};

// Number of halvings needed to shrink [lo, hi] to width <= tol, capped at
// max_iterations.
int bisection_steps(double lo, double hi, double tol, int max_iterations = 200);

// Bisection on a sign change of f over [lo, hi]. Performs exactly
// bisection_steps(lo, hi, tol) halvings unless an exact zero is hit, and
// returns the midpoint of the final bracket. Throws BracketError without a
// sign change, std::invalid_argument for tol <= 0 or lo >= hi.
template <class F>
RootResult bisect(F&& f, double lo, double hi, double tol, int max_iterations = 200);

// Root of a catalog function by bisection.
RootResult find_root(BoundFunction id, double lo, double hi, double tol = 1e-9, BoundConstant c = {});

} // namespace sce

#include "sce/bounds_impl.hpp"

#pragma once

#include "sce/errors.hpp"

#include <string>

namespace sce {

template <class F>
RootResult bisect(F&& f, double lo, double hi, double tol, int max_iterations)
{
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (!(lo < hi)) throw std::invalid_argument("bisection needs lo < hi");

    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if (std::signbit(f_lo) == std::signbit(f_hi))
        throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "]: f(lo) = " + std::to_string(f_lo) + ", f(hi) = " + std::to_string(f_hi));

    const int steps = bisection_steps(lo, hi, tol, max_iterations);
    for (int i = 0; i < steps; ++i) {
        const double mid = lo + (hi - lo) / 2;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return {mid, i + 1};
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return {lo + (hi - lo) / 2, steps};
}

} // namespace sce

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fermiwell/errors.hpp"

namespace fermiwell {

//! Interval [lo, hi] across which a continuous function changes sign.
struct SignBracket
{
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

/*!
 * Evaluate f on a uniform grid of `points` nodes spanning [lo, hi] and return
 * every cell whose endpoint values differ in sign. An exact zero at a node is
 * assigned to the cell on its left.
 */
template<class F>
std::vector<SignBracket> scan_sign_changes(F&& f, double lo, double hi, int points)
{
    std::vector<SignBracket> out;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i < points; ++i)
    {
        double x = (i == points - 1) ? hi : lo + (hi - lo) * i / (points - 1);
        double fx = f(x);
        if ((f_prev < 0 && fx >= 0) || (f_prev > 0 && fx <= 0))
        {
            out.push_back({x_prev, x, f_prev, fx});
        }
        x_prev = x;
        f_prev = fx;
    }
    return out;
}

//! Bisect a sign bracket down to width tol.
template<class F>
double bisect(F&& f, SignBracket br, double tol, int max_iter = 200)
{
    if (br.f_hi == 0)
        return br.hi;
    for (int it = 0; it < max_iter; ++it)
    {
        if (br.hi - br.lo <= tol)
            return 0.5 * (br.lo + br.hi);
        double mid = 0.5 * (br.lo + br.hi);
        double fm = f(mid);
        if (fm == 0)
            return mid;
        if ((fm < 0) == (br.f_lo < 0))
        {
            br.lo = mid;
            br.f_lo = fm;
        }
        else
        {
            br.hi = mid;
            br.f_hi = fm;
        }
    }
    // Interval can no longer shrink in floating point.
    return 0.5 * (br.lo + br.hi);
}

} // namespace fermiwell

#pragma once

#include <cmath>
#include <utility>

namespace gls {

struct ScalarExtremum {
    double x = 0;
    double value = 0;
};

/// Golden-section search for the maximum of a unimodal f on [a, b].  Stops when
/// the bracket is narrower than tol (or after max_iter reductions) and returns
/// the better of the two final interior points.  A monotone f converges to
/// the corresponding end of [a, b].
template <class F>
ScalarExtremum golden_section_maximize(F&& f, double a, double b, double tol, int max_iter = 200)
{
    if (b < a) std::swap(a, b);
    constexpr double inv_phi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        // ">=" keeps the left sub-bracket on ties, breaking ties toward smaller x.
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }

    ScalarExtremum best{c, fc};
    if (fd > best.value) best = {d, fd};
    return best;
}

}  // namespace gls

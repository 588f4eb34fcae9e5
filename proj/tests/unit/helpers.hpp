#pragma once

#include <complex>
#include <cmath>

#include "doctest.h"

inline bool near(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol)
{
    return std::abs(a - b) <= tol;
}

#define CHECK_NEAR(a, b, tol)                                                        \
    do {                                                                             \
        const auto check_near_a_ = (a);                                              \
        const auto check_near_b_ = (b);                                              \
        INFO(#a " = " << check_near_a_ << ", " #b " = " << check_near_b_);           \
        CHECK(near(check_near_a_, check_near_b_, (tol)));                            \
    } while (0)

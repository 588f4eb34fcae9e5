#pragma once

#include <optional>
#include <vector>

#include "gls/sweep.hpp"

namespace gls {

inline constexpr double kDefaultManifoldTol = 1e-9;

struct TotalReflection {
    double delta_star = 0;
};

struct OptimalConversion {
    double eta_star = 0;
    double delta_star = 0;
};

/// Analytic scattering conditions for one (phi1, dphi) configuration.
struct ConditionReport {
    bool fipt = false;
    long long fipt_multiple = 0;  // m with phi1 = (2m+1) pi, meaningful when fipt
    std::optional<TotalReflection> total_reflection;
    std::optional<OptimalConversion> optimal_conversion;  // empty: conversion impossible
    double tolerance_used = kDefaultManifoldTol;
};

/// Distance from phi to the nearest odd multiple of pi, and that multiple's m
/// in (2m+1) pi.
struct OddPiDistance {
    double distance = 0;
    long long m = 0;
};
OddPiDistance distance_to_odd_pi(double phi);

/// Throws std::invalid_argument if tol is outside (0, 0.1] or gamma1 <= 0.
ConditionReport analyze(double phi1, double dphi, double gamma1, double eta,
                        double tol = kDefaultManifoldTol);

enum class ExtremumTarget { MinT1, MaxR1, MaxTc, MaxTcTilde };

Quantity target_quantity(ExtremumTarget target);
std::optional<ExtremumTarget> target_for_quantity(Quantity q);

struct TrajectoryPoint {
    double scan_value = 0;
    bool flat = false;  // the column varies by less than 1e-13: no extremum
    double delta = 0;   // refined arg-extremum
    double value = 0;   // extremum value (of the quantity itself, not negated)
};

inline constexpr double kTrajectoryDeltaTol = 1e-9;

/// One point per scan column: grid arg-extremum over delta (ties toward the
/// smallest delta) refined by golden-section search on the bracket formed by
/// the two neighbouring grid nodes.
std::vector<TrajectoryPoint> extremum_trajectory(const SweepSpec& sweep, ExtremumTarget target);

struct GridExtremum {
    double delta = 0;
    double scan_value = 0;
    double value = 0;
};

/// Best cell of the whole (delta, scan) grid for the target, refined by
/// alternating golden-section searches along delta and the scan axis.
GridExtremum refine_grid_extremum(const SweepSpec& sweep, ExtremumTarget target, double tol = 1e-12);

}  // namespace gls

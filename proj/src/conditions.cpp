#include "gls/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gls/golden.hpp"

namespace gls {

namespace {

constexpr double kFlatColumnRange = 1e-13;
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

// Target as a quantity to maximize: T1 minima become maxima of -T1.
double target_sign(ExtremumTarget target)
{
    return target == ExtremumTarget::MinT1 ? -1.0 : 1.0;
}

double signed_value(const SweepSpec& spec, ExtremumTarget target, double delta, double scan)
{
    const auto v = evaluate_quantity(spec, target_quantity(target), delta, scan);
    return v ? target_sign(target) * *v : kMinusInf;
}

double clamp_to(const Axis& axis, double x)
{
    return std::clamp(x, axis.min, axis.max);
}

}  // namespace

OddPiDistance distance_to_odd_pi(double phi)
{
    const double m = std::round((phi / std::numbers::pi - 1.0) / 2.0);
    return {std::abs(phi - (2.0 * m + 1.0) * std::numbers::pi), static_cast<long long>(m)};
}

ConditionReport analyze(double phi1, double dphi, double gamma1, double eta, double tol)
{
    if (!(tol > 0.0 && tol <= 0.1)) throw std::invalid_argument("tolerance must be in (0, 0.1] rad");
    if (!(gamma1 > 0.0) || !std::isfinite(gamma1)) throw std::invalid_argument("gamma1 must be > 0");
    if (!(eta >= 0.0) || !std::isfinite(eta)) throw std::invalid_argument("eta must be >= 0");
    if (!std::isfinite(phi1) || !std::isfinite(dphi)) throw std::invalid_argument("phases must be finite");

    const double phi2 = phi1 - dphi;
    ConditionReport report;
    report.tolerance_used = tol;

    const auto d1 = distance_to_odd_pi(phi1);
    report.fipt = d1.distance <= tol;
    if (report.fipt) report.fipt_multiple = d1.m;

    // Delta_eff = 0 with the Gamma2 term kept: it vanishes on the exact
    // manifold sin(phi2) = 0 and keeps the peak exact within tol of it.
    if (!report.fipt && distance_to_odd_pi(phi2).distance <= tol) {
        report.total_reflection = TotalReflection{2.0 * gamma1 * (std::sin(phi1) + eta * std::sin(phi2))};
    }

    // 1 + cos(phi) = 2 cos^2(phi/2)
    const double c1 = 2.0 * std::pow(std::cos(0.5 * phi1), 2);
    const double c2 = 2.0 * std::pow(std::cos(0.5 * phi2), 2);
    if (!report.fipt && c2 > tol * tol) {
        const double eta_star = c1 / c2;
        report.optimal_conversion =
            OptimalConversion{eta_star, 2.0 * gamma1 * (std::sin(phi1) + eta_star * std::sin(phi2))};
    }
    return report;
}

Quantity target_quantity(ExtremumTarget target)
{
    switch (target) {
    case ExtremumTarget::MinT1: return Quantity::T1;
    case ExtremumTarget::MaxR1: return Quantity::R1;
    case ExtremumTarget::MaxTc: return Quantity::Tc;
    case ExtremumTarget::MaxTcTilde: return Quantity::TcTilde;
    }
    return Quantity::Tc;
}

std::optional<ExtremumTarget> target_for_quantity(Quantity q)
{
    switch (q) {
    case Quantity::T1: return ExtremumTarget::MinT1;
    case Quantity::R1: return ExtremumTarget::MaxR1;
    case Quantity::Tc: return ExtremumTarget::MaxTc;
    case Quantity::TcTilde: return ExtremumTarget::MaxTcTilde;
    default: return std::nullopt;
    }
}

std::vector<TrajectoryPoint> extremum_trajectory(const SweepSpec& sweep, ExtremumTarget target)
{
    sweep.validate();
    if (sweep.delta_axis.count < 3) throw std::invalid_argument("trajectory needs >= 3 delta points per column");

    const double sign = target_sign(target);
    const Axis& dax = sweep.delta_axis;
    std::vector<TrajectoryPoint> out;
    out.reserve(sweep.scan_axis.count);
    std::vector<double> column(dax.count);

    for (std::size_t j = 0; j < sweep.scan_axis.count; ++j) {
        const double scan = sweep.scan_axis.value(j);
        double lo = std::numeric_limits<double>::infinity();
        double hi = kMinusInf;
        std::size_t best = dax.count;
        for (std::size_t i = 0; i < dax.count; ++i) {
            column[i] = signed_value(sweep, target, dax.value(i), scan);
            if (column[i] == kMinusInf) continue;
            lo = std::min(lo, column[i]);
            if (column[i] > hi) {  // strict: first (smallest delta) wins ties
                hi = column[i];
                best = i;
            }
        }

        TrajectoryPoint pt;
        pt.scan_value = scan;
        if (best == dax.count || hi - lo < kFlatColumnRange) {
            pt.flat = true;
            out.push_back(pt);
            continue;
        }

        const double a = dax.value(best == 0 ? 0 : best - 1);
        const double b = dax.value(std::min(best + 1, dax.count - 1));
        const auto refined = golden_section_maximize(
            [&](double d) { return signed_value(sweep, target, d, scan); }, a, b, kTrajectoryDeltaTol);
        if (refined.value >= column[best]) {
            pt.delta = refined.x;
            pt.value = sign * refined.value;
        } else {
            pt.delta = dax.value(best);
            pt.value = sign * column[best];
        }
        out.push_back(pt);
    }
    return out;
}

GridExtremum refine_grid_extremum(const SweepSpec& sweep, ExtremumTarget target, double tol)
{
    const SweepResult grid = run_sweep(sweep, 1);
    const auto& values = grid.values(target_quantity(target));
    const double sign = target_sign(target);

    std::size_t best = values.size();
    double best_value = kMinusInf;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::isnan(values[k])) continue;
        if (sign * values[k] > best_value) {
            best_value = sign * values[k];
            best = k;
        }
    }
    if (best == values.size()) throw std::runtime_error("refine_grid_extremum: every cell is undefined");

    const Axis& dax = sweep.delta_axis;
    const Axis& sax = sweep.scan_axis;
    double x = dax.value(best / grid.cols());
    double y = sax.value(best % grid.cols());
    const double hx = dax.spacing();
    const double hy = sax.spacing();

    for (int it = 0; it < 200; ++it) {
        const auto along_delta = golden_section_maximize(
            [&](double d) { return signed_value(sweep, target, d, y); }, clamp_to(dax, x - hx),
            clamp_to(dax, x + hx), tol);
        double dx = 0.0;
        if (along_delta.value >= best_value) {
            dx = std::abs(along_delta.x - x);
            x = along_delta.x;
            best_value = along_delta.value;
        }
        const auto along_scan = golden_section_maximize(
            [&](double s) { return signed_value(sweep, target, x, s); }, clamp_to(sax, y - hy),
            clamp_to(sax, y + hy), tol);
        double dy = 0.0;
        if (along_scan.value >= best_value) {
            dy = std::abs(along_scan.x - y);
            y = along_scan.x;
            best_value = along_scan.value;
        }
        if (dx < tol && dy < tol) break;
    }
    return {x, y, sign * best_value};
}

}  // namespace gls

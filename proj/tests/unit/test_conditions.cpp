#include <numbers>
#include <random>

#include "gls/conditions.hpp"
#include "helpers.hpp"

using namespace gls;
constexpr double pi = std::numbers::pi;

TEST_CASE("analyze examples")
{
    auto r = analyze(0, pi, 1, 1);
    CHECK_FALSE(r.fipt);
    REQUIRE(r.total_reflection);
    CHECK_NEAR(r.total_reflection->delta_star, 0.0, 1e-12);
    CHECK_FALSE(r.optimal_conversion);

    r = analyze(pi / 2, 3 * pi / 2, 1, 1);
    REQUIRE(r.total_reflection);
    CHECK_NEAR(r.total_reflection->delta_star, 2.0, 1e-12);

    r = analyze(0, pi / 2, 1, 1);
    REQUIRE(r.optimal_conversion);
    CHECK_NEAR(r.optimal_conversion->eta_star, 2.0, 1e-12);
    CHECK_NEAR(r.optimal_conversion->delta_star, -4.0, 1e-12);
    CHECK_FALSE(r.total_reflection);

    for (double dphi : {0.0, 0.3, pi, 2.5}) {
        r = analyze(pi, dphi, 1, 1);
        CHECK(r.fipt);
        CHECK(r.fipt_multiple == 0);
        CHECK_FALSE(r.total_reflection);
        CHECK_FALSE(r.optimal_conversion);
    }
    CHECK(analyze(-3 * pi, 0.2, 1, 1).fipt_multiple == -2);
    CHECK(analyze(5 * pi, 0.2, 1, 1).fipt_multiple == 2);
}

TEST_CASE("tolerance rules")
{
    CHECK_THROWS_AS(analyze(0, 0, 1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(analyze(0, 0, 1, 1, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(analyze(0, 0, 0.0, 1), std::invalid_argument);
    CHECK(analyze(pi + 1e-10, 0, 1, 1).fipt);
    CHECK_FALSE(analyze(pi + 1e-8, 0, 1, 1).fipt);
    CHECK(analyze(pi + 1e-3, 0, 1, 1, 1e-2).fipt);
    CHECK(analyze(0, 0, 1, 1, 0.05).tolerance_used == 0.05);
}

TEST_CASE("periodic in both phases")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double p1 = u(rng), dp = u(rng);
        const auto a = analyze(p1, dp, 1, 1);
        const auto b = analyze(p1 + 2 * pi, dp, 1, 1);
        const auto c = analyze(p1, dp + 2 * pi, 1, 1);
        for (const auto* x : {&b, &c}) {
            CHECK(x->fipt == a.fipt);
            CHECK(x->total_reflection.has_value() == a.total_reflection.has_value());
            REQUIRE(x->optimal_conversion.has_value() == a.optimal_conversion.has_value());
            if (a.optimal_conversion) {
                CHECK_NEAR(x->optimal_conversion->eta_star, a.optimal_conversion->eta_star,
                           1e-9 * std::max(1.0, a.optimal_conversion->eta_star));
                CHECK_NEAR(x->optimal_conversion->delta_star, a.optimal_conversion->delta_star,
                           1e-9 * std::max(1.0, std::abs(a.optimal_conversion->delta_star)));
            }
        }
    }
}

TEST_CASE("report invariants on random configurations")
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double g1 = 0.2 + 3 * u(rng);
        double p1 = -4 * pi + 8 * pi * u(rng);
        double dp = -4 * pi + 8 * pi * u(rng);
        // a third of the draws sit on a special manifold
        const int kind = i % 3;
        if (kind == 1) p1 = (2.0 * std::round(p1 / (2 * pi)) + 1.0) * pi;
        if (kind == 2) dp = p1 - (2.0 * std::round((p1 - dp) / (2 * pi)) + 1.0) * pi;
        const double eta = 4 * u(rng);
        const auto r = analyze(p1, dp, g1, eta, 1e-9);

        if (r.fipt) {
            for (int k = 0; k < 100; ++k) {
                const double d = -20 + 40 * u(rng);
                const auto a = giant_lambda_amplitudes(ModelParams::from_ratio(g1, eta, p1, dp), d);
                CHECK(std::abs(a.T1 - 1.0) <= 1e-12);
            }
        }
        if (r.total_reflection && eta > 0) {
            const auto a = giant_lambda_amplitudes(ModelParams::from_ratio(g1, eta, p1, dp),
                                                   r.total_reflection->delta_star);
            CHECK(a.R1 >= 1.0 - 1e-10);
        }
        if (r.optimal_conversion) {
            const auto& oc = *r.optimal_conversion;
            const auto p = ModelParams::from_ratio(g1, oc.eta_star, p1, dp);
            const auto a = giant_lambda_amplitudes(p, oc.delta_star);
            CHECK(std::abs(a.Tc - 0.5) <= 1e-10);
            const auto s = sagnac_amplitudes(p, oc.delta_star);
            CHECK(std::abs(s.Tc_tilde - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("trajectory examples")
{
    SweepSpec spec;
    spec.mode = SweepMode::DeltaDphi;
    spec.phi1 = 0;
    spec.eta = 1;
    spec.scan_axis = {2 * pi, 2 * pi + 1.0, 2};
    auto t = extremum_trajectory(spec, ExtremumTarget::MaxTc);
    REQUIRE(t.size() == 2);
    CHECK_FALSE(t[0].flat);
    CHECK_NEAR(t[0].delta, 0.0, 1e-6);
    CHECK_NEAR(t[0].value, 0.5, 1e-12);

    spec.scan_axis = {pi, pi + 1.0, 2};
    t = extremum_trajectory(spec, ExtremumTarget::MaxR1);
    CHECK_NEAR(t[0].delta, 0.0, 1e-6);
    CHECK_NEAR(t[0].value, 1.0, 1e-12);
    t = extremum_trajectory(spec, ExtremumTarget::MinT1);
    CHECK_NEAR(t[0].delta, 0.0, 1e-6);
    CHECK_NEAR(t[0].value, 0.0, 1e-12);

    spec.phi1 = pi;
    spec.scan_axis = {0, 4 * pi, 9};
    t = extremum_trajectory(spec, ExtremumTarget::MaxTc);
    for (const auto& p : t) CHECK(p.flat);

    spec.delta_axis.count = 2;
    CHECK_THROWS_AS(extremum_trajectory(spec, ExtremumTarget::MaxTc), std::invalid_argument);
}

TEST_CASE("trajectory follows the effective detuning")
{
    // eta = 1, phi1 = 0, dphi scan: conversion optimum lies on eta_star = 1 only
    // where cos(phi2) = 1, otherwise the Tc peak still tracks delta_shift.
    SweepSpec spec;
    spec.mode = SweepMode::DeltaDphi;
    spec.phi1 = pi / 2;
    spec.eta = 1;
    spec.scan_axis = {0.1, 4 * pi - 0.1, 41};
    const auto t = extremum_trajectory(spec, ExtremumTarget::MaxTc);
    for (const auto& p : t) {
        const auto e = effective_params(spec.params_at(p.scan_value));
        if (e.gamma2_eff < 1e-6) continue;
        CHECK_NEAR(p.delta, e.delta_shift, 1e-6);
    }

    // delta-eta, phi1 = 0, dphi = pi/2: the eta = 2 column peaks at delta = -4
    SweepSpec g = figure_preset("fig3g").spec;
    g.scan_axis = {2.0, 3.0, 2};
    const auto tg = extremum_trajectory(g, ExtremumTarget::MaxTc);
    CHECK_NEAR(tg[0].delta, -4.0, 1e-6);
    CHECK_NEAR(tg[0].value, 0.5, 1e-10);
}

TEST_CASE("refine grid extremum on fig3g")
{
    const auto spec = figure_preset("fig3g").spec;
    const auto best = refine_grid_extremum(spec, ExtremumTarget::MaxTc);
    CHECK_NEAR(best.scan_value, 2.0, 1e-3);
    CHECK_NEAR(best.delta, -4.0, 1e-3);
    CHECK_NEAR(best.value, 0.5, 1e-6);
}

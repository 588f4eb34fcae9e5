// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "gls/conditions.hpp"
#include "gls/model.hpp"
#include "gls/sweep.hpp"
#include "gls/verify.hpp"

#ifndef GLS_CLI_PATH
#error "GLS_CLI_PATH must point at the giant-lambda-scatter executable"
#endif

using namespace gls;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

void report(int id, const char* name, bool pass, const std::string& detail)
{
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << detail << std::endl;
}

SweepSpec column(double phi1, double eta, double dphi, double gamma_loss = 0.0)
{
    SweepSpec s;
    s.mode = SweepMode::DeltaDphi;
    s.phi1 = phi1;
    s.eta = eta;
    s.gamma_loss = gamma_loss;
    s.scan_axis = {dphi, dphi + 1.0, 2};  // only column 0 is used
    return s;
}

void criteria_1_2()
{
    const OracleReport r = run_oracle_suite(10000, 20261014);
    const bool ok1 = r.singular == 0 && r.max_rel_dev <= 1e-10 && r.max_rel_dev_sagnac <= 1e-10;
    report(1, "oracle equivalence", ok1,
           "max relative deviation " + sci(r.max_rel_dev) + " (waveguide), " + sci(r.max_rel_dev_sagnac) +
               " (Sagnac) over " + std::to_string(r.draws) + " draws, " + std::to_string(r.singular) +
               " singular; tol 1e-10");
    const bool ok2 = r.max_unitarity <= 1e-12 && r.max_unitarity_sagnac <= 1e-12 && r.max_t2_r2 <= 1e-14;
    report(2, "unitarity", ok2,
           "max |T1+R1+Tc-1| " + sci(r.max_unitarity) + ", max |T1~+Tc~-1| " + sci(r.max_unitarity_sagnac) +
               " (tol 1e-12); max ||t2|-|r2|| " + sci(r.max_t2_r2) + " (tol 1e-14)");
}

void criterion_3()
{
    const auto a = giant_lambda_amplitudes(ModelParams::from_ratio(1, 1, 0, 2 * pi), 0.0);
    report(3, "small-atom optimum", std::abs(a.Tc - 0.5) <= 1e-10,
           "Tc = " + std::to_string(a.Tc) + ", |Tc-0.5| = " + sci(std::abs(a.Tc - 0.5)) + " (tol 1e-10)");
}

void criterion_4()
{
    const ModelParams p = ModelParams::from_ratio(1, 1, 0, pi);
    const double r1 = giant_lambda_amplitudes(p, 0.0).R1;
    const Axis grid{-8, 8, 321};
    double max_tc = 0;
    for (std::size_t i = 0; i < grid.count; ++i) max_tc = std::max(max_tc, giant_lambda_amplitudes(p, grid.value(i)).Tc);

    const auto t = extremum_trajectory(column(pi / 2, 1, 3 * pi / 2), ExtremumTarget::MaxR1);
    const double peak = t[0].delta;
    const bool ok = std::abs(r1 - 1.0) <= 1e-10 && max_tc <= 1e-12 && !t[0].flat && std::abs(peak - 2.0) <= 1e-6;
    report(4, "total reflection", ok,
           "R1(0) - 1 = " + sci(r1 - 1.0) + " (tol 1e-10), max Tc over 321 cells " + sci(max_tc) +
               " (tol 1e-12); phi1=pi/2, dphi=3pi/2 peak at delta = " + std::to_string(peak) + ", |peak-2| = " +
               sci(std::abs(peak - 2.0)) + " (tol 1e-6)");
}

void criterion_5()
{
    double worst = 0;
    const Axis grid{-8, 8, 321};
    for (std::size_t i = 0; i < grid.count; ++i) {
        const auto a = giant_lambda_amplitudes(ModelParams::from_ratio(1, 1, pi, 0.3), grid.value(i));
        worst = std::max(worst, std::abs(a.T1 - 1.0));
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double eta = 4 * u(rng), dphi = -4 * pi + 8 * pi * u(rng);
        const ModelParams p = ModelParams::from_ratio(1, eta, pi, dphi);
        for (std::size_t i = 0; i < grid.count; i += 8) {
            try {
                worst = std::max(worst, std::abs(giant_lambda_amplitudes(p, grid.value(i)).T1 - 1.0));
            } catch (const SingularPointError&) {
                worst = std::numeric_limits<double>::infinity();
            }
        }
        const double d = -20 + 40 * u(rng);
        worst = std::max(worst, std::abs(giant_lambda_amplitudes(p, d).T1 - 1.0));
    }
    report(5, "FIPT", worst <= 1e-12,
           "phi1 = pi: max |T1-1| " + sci(worst) + " over the 321-point grid and 1000 random (eta, dphi) (tol 1e-12)");
}

void criterion_6()
{
    const auto spec = figure_preset("fig3g").spec;
    const auto best = refine_grid_extremum(spec, ExtremumTarget::MaxTc);
    const auto s = sagnac_amplitudes(spec.params_at(best.scan_value), best.delta);

    auto sspec = figure_preset("fig5c").spec;
    const auto sbest = refine_grid_extremum(sspec, ExtremumTarget::MaxTcTilde);

    const bool ok = std::abs(best.scan_value - 2.0) <= 1e-3 && std::abs(best.delta + 4.0) <= 1e-3 &&
                    std::abs(best.value - 0.5) <= 1e-6 && std::abs(s.Tc_tilde - 1.0) <= 1e-6 &&
                    std::abs(sbest.value - 1.0) <= 1e-6;
    report(6, "general optimum", ok,
           "fig3g refined maximum at eta = " + std::to_string(best.scan_value) + ", delta = " +
               std::to_string(best.delta) + ", Tc - 0.5 = " + sci(best.value - 0.5) +
               "; Sagnac there Tc~ - 1 = " + sci(s.Tc_tilde - 1.0) + "; fig5c refined max Tc~ - 1 = " +
               sci(sbest.value - 1.0) + " at eta = " + std::to_string(sbest.scan_value) + ", delta = " +
               std::to_string(sbest.delta));
}

void criterion_7()
{
    std::mt19937_64 rng(77);
    double max_tc = 0;
    for (int k = 0; k < 100000; ++k) {
        const RandomDraw d = random_draw(rng, true);
        try {
            max_tc = std::max(max_tc, giant_lambda_amplitudes(d.params, d.delta).Tc);
        } catch (const SingularPointError&) {
        }
    }
    // the same bound at the analytic optima of random phases
    std::uniform_real_distribution<double> u(-4 * pi, 4 * pi);
    for (int k = 0; k < 10000; ++k) {
        const double p1 = u(rng), dp = u(rng);
        const auto r = analyze(p1, dp, 1.0, 1.0);
        if (!r.optimal_conversion) continue;
        const auto& oc = *r.optimal_conversion;
        max_tc = std::max(max_tc, giant_lambda_amplitudes(ModelParams::from_ratio(1, oc.eta_star, p1, dp),
                                                          oc.delta_star).Tc);
    }
    report(7, "conversion bound", max_tc <= 0.5 + 1e-12,
           "max Tc - 0.5 = " + sci(max_tc - 0.5) + " over 1e5 random draws and 1e4 analytic optima (tol 1e-12)");
}

void criterion_8()
{
    const auto s = sagnac_amplitudes(ModelParams::from_ratio(1, 1, 0, 2 * pi), 0.0);
    report(8, "Sagnac optimum", std::abs(s.Tc_tilde - 1.0) <= 1e-10,
           "Tc~ - 1 = " + sci(s.Tc_tilde - 1.0) + " (tol 1e-10)");
}

void criterion_9()
{
    const auto lossless = giant_lambda_amplitudes(ModelParams::from_ratio(1, 1, 0, 2 * pi, 0.0), 0.0);
    const auto lossy = giant_lambda_amplitudes(ModelParams::from_ratio(1, 1, 0, 2 * pi, 0.5), 0.0);
    const double total = lossy.T1 + lossy.R1 + lossy.Tc;

    double shift = 0;
    for (double dphi : {2 * pi, 0.0, pi / 2, 3 * pi / 2, 2.5}) {
        for (double phi1 : {0.0, pi / 2}) {
            const auto a = extremum_trajectory(column(phi1, 1, dphi, 0.0), ExtremumTarget::MaxTc);
            const auto b = extremum_trajectory(column(phi1, 1, dphi, 0.5), ExtremumTarget::MaxTc);
            if (a[0].flat || b[0].flat) continue;
            shift = std::max(shift, std::abs(a[0].delta - b[0].delta));
        }
    }
    const bool ok = total < 1.0 && lossy.Tc < lossless.Tc && shift <= 1e-6;
    report(9, "dissipation", ok,
           "gamma = 0.5: T1+R1+Tc = " + std::to_string(total) + " (< 1), Tc " + std::to_string(lossless.Tc) +
               " -> " + std::to_string(lossy.Tc) + "; max Tc peak shift " + sci(shift) + " (tol 1e-6)");
}

void criterion_10()
{
    const auto rows = run_lattice_suite();
    const auto verdicts = judge_lattice_suite(rows);
    bool ok = verdicts.size() == 3;
    std::string detail;
    for (const auto& v : verdicts) {
        ok = ok && v.pass;
        std::string devs;
        for (const auto& r : rows) {
            if (r.name == v.name) devs += (devs.empty() ? "" : "/") + sci(r.comparison.max_abs_dev);
        }
        detail += v.name + " dev(sigma 20/40/80) " + devs + (v.monotone ? " monotone" : " NOT monotone") +
                  ", drift " + sci(v.max_norm_drift) + "; ";
    }
    report(10, "lattice cross-check", ok, detail + "tol 0.03 at sigma=40, drift 1e-8");
}

std::string run_command(const std::string& cmd, int& status)
{
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 65536> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

void criterion_11()
{
    const std::string cli = GLS_CLI_PATH;
    std::array<std::string, 4> outputs;
    int bad = 0;
    const char* threads[] = {"1", "1", "4", "4"};
    for (int i = 0; i < 4; ++i) {
        int status = 0;
        outputs[i] = run_command("GLS_THREADS=" + std::string(threads[i]) + " '" + cli + "' figure fig2a", status);
        if (status != 0 || outputs[i].empty()) ++bad;
    }
    bool same = true;
    for (int i = 1; i < 4; ++i) same = same && outputs[i] == outputs[0];
    report(11, "determinism", bad == 0 && same,
           "figure fig2a twice each with GLS_THREADS=1 and 4: " + std::to_string(outputs[0].size()) + " bytes, " +
               (same ? "byte-identical" : "DIFFERENT") + (bad ? ", command failed" : ""));
}

}  // namespace

int main()
{
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}

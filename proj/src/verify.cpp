#include "gls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gls/boundary.hpp"

namespace gls {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMonotoneSlack = 1e-9;

LatticeScenario fipt_on_resonance(double sigma)
{
    return fipt_scenario(sigma, 0.0);
}

}  // namespace

RandomDraw random_draw(std::mt19937_64& rng, bool lossless)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RandomDraw d;
    const double gamma1 = 10.0 * (1.0 - unit(rng));  // (0, 10]
    const double gamma2 = 10.0 * unit(rng);
    const double phi1 = -4.0 * kPi + 8.0 * kPi * unit(rng);
    const double phi2 = -4.0 * kPi + 8.0 * kPi * unit(rng);
    const double loss = lossless ? 0.0 : 2.0 * unit(rng);
    d.params = ModelParams{gamma1, gamma2, phi1, phi2, loss};
    d.delta = -50.0 + 100.0 * unit(rng);
    return d;
}

double relative_deviation(const std::vector<cdouble>& a, const std::vector<cdouble>& b)
{
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return den > 0.0 ? num / den : num;
}

OracleReport run_oracle_suite(std::size_t draws, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    OracleReport rep;
    rep.draws = draws;
    for (std::size_t n = 0; n < draws; ++n) {
        const RandomDraw d = random_draw(rng);
        try {
            const auto closed = giant_lambda_amplitudes(d.params, d.delta);
            const auto raw = solve_giant(d.params, d.delta);
            const auto mapped = reference_plane_map(raw, d.params);
            rep.max_rel_dev = std::max(rep.max_rel_dev,
                                       relative_deviation({mapped.begin(), mapped.end()},
                                                          {closed.t1, closed.r1, closed.t2, closed.r2}));
            const auto sc = sagnac_amplitudes(d.params, d.delta);
            const auto ss = solve_sagnac(d.params, d.delta);
            rep.max_rel_dev_sagnac = std::max(
                rep.max_rel_dev_sagnac, relative_deviation({ss.t1_tilde, ss.t2_tilde}, {sc.t1_tilde, sc.t2_tilde}));
            rep.max_residual = std::max({rep.max_residual, raw.max_residual, ss.max_residual});

            ModelParams lossless = d.params;
            lossless.gamma_loss = 0.0;
            const auto a = giant_lambda_amplitudes(lossless, d.delta);
            const auto s = sagnac_amplitudes(lossless, d.delta);
            rep.max_unitarity = std::max(rep.max_unitarity, std::abs(a.T1 + a.R1 + a.Tc - 1.0));
            rep.max_unitarity_sagnac = std::max(rep.max_unitarity_sagnac, std::abs(s.T1_tilde + s.Tc_tilde - 1.0));
            rep.max_t2_r2 = std::max(rep.max_t2_r2, std::abs(std::abs(a.t2) - std::abs(a.r2)));
            rep.max_Tc = std::max(rep.max_Tc, a.Tc);
        } catch (const SingularPointError&) {
            ++rep.singular;
        } catch (const SingularMatrixError&) {
            ++rep.singular;
        }
    }
    return rep;
}

std::vector<LatticeCase> lattice_cases()
{
    return {{"optimum", &optimum_scenario},
            {"total-reflection", &total_reflection_scenario},
            {"fipt", &fipt_on_resonance}};
}

std::vector<LatticeSweepRow> run_lattice_suite()
{
    std::vector<LatticeSweepRow> rows;
    for (const auto& c : lattice_cases()) {
        for (double sigma : kLatticeSigmas) {
            const LatticeConfig config = make_lattice_config(c.scenario(sigma));
            rows.push_back({c.name, sigma, config.n_sites, compare_to_analytic(config)});
        }
    }
    return rows;
}

std::vector<LatticeCaseVerdict> judge_lattice_suite(const std::vector<LatticeSweepRow>& rows)
{
    std::vector<LatticeCaseVerdict> out;
    for (const auto& c : lattice_cases()) {
        LatticeCaseVerdict v;
        v.name = c.name;
        std::vector<double> devs;
        bool have40 = false;
        for (const auto& r : rows) {
            if (r.name != c.name) continue;
            devs.push_back(r.comparison.max_abs_dev);
            v.max_norm_drift = std::max(v.max_norm_drift, r.comparison.max_norm_drift);
            if (r.sigma == 40.0) {
                v.dev_at_40 = r.comparison.max_abs_dev;
                have40 = true;
            }
        }
        v.monotone = devs.size() >= 2;
        for (std::size_t i = 1; i < devs.size(); ++i) {
            if (devs[i] > devs[i - 1] + kMonotoneSlack) v.monotone = false;
        }
        v.pass = have40 && v.dev_at_40 <= kLatticeTolerance && v.monotone && v.max_norm_drift <= kMaxNormDrift;
        out.push_back(v);
    }
    return out;
}

}  // namespace gls

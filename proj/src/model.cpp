#include "gls/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gls {

namespace {

constexpr cdouble I{0.0, 1.0};

// |D| below this fraction of the natural scale of D counts as singular.
constexpr double kSingularRelTol = 1e-13;

void check_finite(double value, const char* name)
{
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

void check_denominator(cdouble den, double scale, double delta)
{
    if (!(std::abs(den) > kSingularRelTol * scale)) {
        std::ostringstream msg;
        msg << "singular point: scattering denominator vanishes at delta=" << delta;
        throw SingularPointError(msg.str());
    }
}

// cos(phi/2), flushed to zero when it is at rounding level of an odd
// multiple of pi so that fully suppressed channels report exactly zero.
double half_angle_cos(double phi)
{
    const double c = std::cos(0.5 * phi);
    const double floor = std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(phi));
    return std::abs(c) <= floor ? 0.0 : c;
}

double denominator_scale(double gamma1, double gamma2, double gamma_loss, double delta)
{
    return std::abs(delta) + gamma_loss + 4.0 * gamma1 + 4.0 * gamma2;
}

}  // namespace

ModelParams ModelParams::from_ratio(double gamma1, double eta, double phi1, double dphi,
                                    double gamma_loss)
{
    ModelParams p;
    p.gamma1 = gamma1;
    p.gamma2 = eta * gamma1;
    p.phi1 = phi1;
    p.phi2 = phi1 - dphi;
    p.gamma_loss = gamma_loss;
    return p;
}

void ModelParams::validate() const
{
    check_finite(gamma1, "gamma1");
    check_finite(gamma2, "gamma2");
    check_finite(phi1, "phi1");
    check_finite(phi2, "phi2");
    check_finite(gamma_loss, "gamma_loss");
    if (!(gamma1 > 0.0)) throw std::invalid_argument("gamma1 must be > 0");
    if (gamma2 < 0.0) throw std::invalid_argument("gamma2 must be >= 0");
    if (gamma_loss < 0.0) throw std::invalid_argument("gamma_loss must be >= 0");
}

ScatteringAmplitudes ScatteringAmplitudes::from_amplitudes(cdouble t1, cdouble r1, cdouble t2,
                                                           cdouble r2)
{
    ScatteringAmplitudes a;
    a.t1 = t1;
    a.r1 = r1;
    a.t2 = t2;
    a.r2 = r2;
    a.T1 = std::norm(t1);
    a.R1 = std::norm(r1);
    a.Tc = std::norm(t2) + std::norm(r2);
    a.loss = 1.0 - a.T1 - a.R1 - a.Tc;
    return a;
}

SagnacAmplitudes SagnacAmplitudes::from_amplitudes(cdouble t1, cdouble t2)
{
    SagnacAmplitudes a;
    a.t1_tilde = t1;
    a.t2_tilde = t2;
    a.T1_tilde = std::norm(t1);
    a.Tc_tilde = std::norm(t2);
    a.loss = 1.0 - a.T1_tilde - a.Tc_tilde;
    return a;
}

cdouble one_plus_expi(double phi)
{
    return 2.0 * std::cos(0.5 * phi) * std::polar(1.0, 0.5 * phi);
}

cdouble scattering_denominator(const ModelParams& p, double delta)
{
    const cdouble detuning{delta, p.gamma_loss};
    return detuning + 2.0 * I * p.gamma1 * one_plus_expi(p.phi1)
           + 2.0 * I * p.gamma2 * one_plus_expi(p.phi2);
}

ScatteringAmplitudes giant_lambda_amplitudes(const ModelParams& p, double delta)
{
    p.validate();
    check_finite(delta, "delta");

    const cdouble detuning{delta, p.gamma_loss};
    const cdouble c1 = one_plus_expi(p.phi1);
    const cdouble c2 = one_plus_expi(p.phi2);
    const cdouble c2_conj = one_plus_expi(-p.phi2);
    const cdouble den = scattering_denominator(p, delta);
    check_denominator(den, denominator_scale(p.gamma1, p.gamma2, p.gamma_loss, delta), delta);

    const double g12 = std::sqrt(p.gamma1 * p.gamma2);
    const cdouble t1 = (detuning - 2.0 * p.gamma1 * std::sin(p.phi1) + 2.0 * I * p.gamma2 * c2) / den;
    const cdouble r1 = -I * p.gamma1 * c1 * c1 / den;
    const cdouble t2 = -I * g12 * c1 * c2_conj / den;
    const cdouble r2 = -I * g12 * c1 * c2 / den;
    return ScatteringAmplitudes::from_amplitudes(t1, r1, t2, r2);
}

ScatteringAmplitudes small_atom_amplitudes(double gamma1, double gamma2, double gamma_loss,
                                           double delta)
{
    ModelParams{gamma1, gamma2, 0.0, 0.0, gamma_loss}.validate();
    check_finite(delta, "delta");

    const cdouble detuning{delta, gamma_loss};
    const cdouble den = detuning + 4.0 * I * gamma1 + 4.0 * I * gamma2;
    check_denominator(den, denominator_scale(gamma1, gamma2, gamma_loss, delta), delta);

    const double g12 = std::sqrt(gamma1 * gamma2);
    const cdouble t1 = (detuning + 4.0 * I * gamma2) / den;
    const cdouble r1 = -4.0 * I * gamma1 / den;
    const cdouble t2 = -4.0 * I * g12 / den;
    return ScatteringAmplitudes::from_amplitudes(t1, r1, t2, t2);
}

ScatteringAmplitudes two_level_amplitudes(double gamma1, double phi1, double gamma_loss,
                                          double delta)
{
    ModelParams{gamma1, 0.0, phi1, 0.0, gamma_loss}.validate();
    check_finite(delta, "delta");

    const cdouble detuning{delta, gamma_loss};
    const cdouble c1 = one_plus_expi(phi1);
    const cdouble den = detuning + 2.0 * I * gamma1 * c1;
    check_denominator(den, denominator_scale(gamma1, 0.0, gamma_loss, delta), delta);

    const cdouble t1 = (detuning - 2.0 * gamma1 * std::sin(phi1)) / den;
    const cdouble r1 = -I * gamma1 * c1 * c1 / den;
    return ScatteringAmplitudes::from_amplitudes(t1, r1, 0.0, 0.0);
}

SagnacAmplitudes sagnac_amplitudes(const ModelParams& p, double delta)
{
    p.validate();
    check_finite(delta, "delta");

    // Even-mode couplings are sqrt(2) g_j, hence rates 2 Gamma_j.
    const double gt1 = 2.0 * p.gamma1;
    const double gt2 = 2.0 * p.gamma2;
    const cdouble detuning{delta, p.gamma_loss};
    const cdouble den = detuning + I * gt1 * one_plus_expi(p.phi1) + I * gt2 * one_plus_expi(p.phi2);
    check_denominator(den, denominator_scale(p.gamma1, p.gamma2, p.gamma_loss, delta), delta);

    const cdouble t1 = (detuning - I * gt1 * one_plus_expi(-p.phi1) + I * gt2 * one_plus_expi(p.phi2)) / den;
    const cdouble t2 = -4.0 * I * std::sqrt(gt1 * gt2) * std::cos(0.5 * p.phi1)
                       * std::cos(0.5 * p.phi2) / den;
    return SagnacAmplitudes::from_amplitudes(t1, t2);
}

EffectiveParams effective_params(const ModelParams& p)
{
    p.validate();
    EffectiveParams e;
    e.delta_shift = 2.0 * (p.gamma1 * std::sin(p.phi1) + p.gamma2 * std::sin(p.phi2));
    // 2 Gamma (1 + cos phi) = 4 Gamma cos^2(phi/2)
    const double c1 = half_angle_cos(p.phi1);
    const double c2 = half_angle_cos(p.phi2);
    e.gamma1_eff = 4.0 * p.gamma1 * c1 * c1;
    e.gamma2_eff = 4.0 * p.gamma2 * c2 * c2;
    e.gamma_eff = e.gamma1_eff + e.gamma2_eff;
    if (e.gamma1_eff > 0.0) {
        e.eta_eff = e.gamma2_eff / e.gamma1_eff;
    }
    return e;
}

}  // namespace gls

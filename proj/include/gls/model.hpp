#pragma once

// Closed-form single-photon scattering for a Lambda-type atom coupled to a
// waveguide at two points.  All rates and detunings share one (arbitrary)
// unit; phases are in radians.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace gls {

using cdouble = std::complex<double>;

/// Raised when the common denominator of the amplitudes vanishes, i.e. both
/// effective decay rates and the intrinsic loss are zero at Delta_eff = 0.
class SingularPointError : public std::domain_error {
public:
    explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

struct ModelParams {
    double gamma1 = 1.0;      // decay rate per coupling point, |g> <-> |e>
    double gamma2 = 1.0;      // decay rate per coupling point, |f> <-> |e>
    double phi1 = 0.0;        // k d
    double phi2 = 0.0;        // q d
    double gamma_loss = 0.0;  // intrinsic dissipation of |e>

    /// Builds parameters from the figure-style knobs: eta = gamma2/gamma1 and
    /// dphi = phi1 - phi2.
    static ModelParams from_ratio(double gamma1, double eta, double phi1, double dphi,
                                  double gamma_loss = 0.0);

    double eta() const { return gamma2 / gamma1; }
    double dphi() const { return phi1 - phi2; }

    /// Throws std::invalid_argument unless gamma1 > 0, gamma2 >= 0,
    /// gamma_loss >= 0 and everything is finite.
    void validate() const;
};

struct ScatteringAmplitudes {
    cdouble t1, r1, t2, r2;
    double T1 = 0, R1 = 0, Tc = 0, loss = 0;

    static ScatteringAmplitudes from_amplitudes(cdouble t1, cdouble r1, cdouble t2, cdouble r2);
};

struct SagnacAmplitudes {
    cdouble t1_tilde, t2_tilde;
    double T1_tilde = 0, Tc_tilde = 0, loss = 0;

    static SagnacAmplitudes from_amplitudes(cdouble t1, cdouble t2);
};

struct EffectiveParams {
    double delta_shift = 0;  // Delta_eff = Delta - delta_shift
    double gamma1_eff = 0;
    double gamma2_eff = 0;
    double gamma_eff = 0;
    std::optional<double> eta_eff;  // empty when gamma1_eff == 0
};

/// 1 + exp(i phi), evaluated as 2 cos(phi/2) exp(i phi/2) so that the
/// modulus stays accurate near odd multiples of pi.
cdouble one_plus_expi(double phi);

/// Common denominator Delta + i gamma + 2i Gamma1 (1 + e^{i phi1}) + 2i Gamma2 (1 + e^{i phi2}).
/// Shared by the waveguide and the Sagnac models.
cdouble scattering_denominator(const ModelParams& params, double delta);

ScatteringAmplitudes giant_lambda_amplitudes(const ModelParams& params, double delta);

/// Coincident coupling points (d = 0): rates are quadrupled.
ScatteringAmplitudes small_atom_amplitudes(double gamma1, double gamma2, double gamma_loss,
                                           double delta);

/// Gamma2 = 0: the f-channel is decoupled, t2 = r2 = 0.
ScatteringAmplitudes two_level_amplitudes(double gamma1, double phi1, double gamma_loss,
                                          double delta);

/// Even-mode (Sagnac-coupled) model.  Takes the bare per-point rates; the
/// even-mode rates 2*gamma_j are formed internally.
SagnacAmplitudes sagnac_amplitudes(const ModelParams& params, double delta);

EffectiveParams effective_params(const ModelParams& params);

}  // namespace gls

#pragma once

#include <optional>

namespace gls {

/// Physical layout of the two coupling points (SI units).
struct GeometryParams {
    double d = 0;        // separation, m
    double v_g = 0;      // group velocity, m/s
    double omega_e = 0;  // |g> <-> |e> transition, rad/s
    double omega_f = 0;  // |g> <-> |f> splitting, rad/s

    /// Throws std::invalid_argument unless d, v_g, omega_e > 0, omega_f >= 0
    /// and all are finite.
    void validate() const;
};

inline constexpr double kMarkovThreshold = 0.01;

struct GeometryPhases {
    double phi1 = 0;  // omega_e d / v_g
    double dphi = 0;  // omega_f d / v_g
    double delay = 0; // d / v_g, s
    bool markov_warning = false;
};

/// Phases at resonance.  markov_warning is set when d/v_g (Gamma1 + Gamma2)
/// exceeds 0.01 (decay_sum in rad/s; no check without it).
GeometryPhases phases_from_geometry(const GeometryParams& geom, std::optional<double> decay_sum = std::nullopt);

/// GaAs-type values: omega_e/2pi = 3.7e14 Hz, omega_f/2pi = 6 GHz,
/// v_g = 2e8 m/s, d chosen so that dphi = pi.
GeometryParams gaas_preset();

}  // namespace gls

#include "gls/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gls {

void GeometryParams::validate() const
{
    for (double v : {d, v_g, omega_e, omega_f}) {
        if (!std::isfinite(v)) throw std::invalid_argument("geometry: values must be finite");
    }
    if (!(d > 0.0)) throw std::invalid_argument("geometry: d must be > 0");
    if (!(v_g > 0.0)) throw std::invalid_argument("geometry: v_g must be > 0");
    if (!(omega_e > 0.0)) throw std::invalid_argument("geometry: omega_e must be > 0");
    if (!(omega_f >= 0.0)) throw std::invalid_argument("geometry: omega_f must be >= 0");
}

GeometryPhases phases_from_geometry(const GeometryParams& geom, std::optional<double> decay_sum)
{
    geom.validate();
    GeometryPhases out;
    out.delay = geom.d / geom.v_g;
    out.phi1 = geom.omega_e * out.delay;
    out.dphi = geom.omega_f * out.delay;
    if (decay_sum) {
        if (!(*decay_sum >= 0.0) || !std::isfinite(*decay_sum)) {
            throw std::invalid_argument("geometry: decay rate sum must be >= 0");
        }
        out.markov_warning = out.delay * *decay_sum > kMarkovThreshold;
    }
    return out;
}

GeometryParams gaas_preset()
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    GeometryParams g;
    g.omega_e = two_pi * 3.7e14;
    g.omega_f = two_pi * 6e9;
    g.v_g = 2e8;
    g.d = std::numbers::pi * g.v_g / g.omega_f;
    return g;
}

}  // namespace gls

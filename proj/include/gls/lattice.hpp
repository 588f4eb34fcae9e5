#pragma once

// Time-domain check of the closed forms: a single excitation on a
// tight-binding waveguide with two channels (atom left in |g> or in |f>)
// coupled to the excited state at two sites.
//
// State layout (dimension 2 n_sites + 1):
//   [0, n)        photon in the g-channel, atom in |g>
//   [n, 2n)       photon in the f-channel, atom in |f> (on-site energy omega_f)
//   2n            atom in |e>, no photon
// Band: omega(kappa) = -2 J cos(kappa); carrier energy E = -2 J cos(k0).

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gls/model.hpp"

namespace gls {

struct Wavepacket {
    double carrier = std::numbers::pi / 2;  // k0
    double sigma = 40.0;                    // std of |psi|^2 in sites
    double center = 0.0;                    // launch site
};

struct Integrator {
    double dt = 0.02;
    double final_time = 0.0;
};

struct LatticeConfig {
    std::size_t n_sites = 400;
    double hopping = 1.0;  // J
    std::size_t site1 = 0;
    std::size_t site2 = 0;
    double g1 = 0.0;
    double g2 = 0.0;
    double omega_f = 0.0;
    double delta = 0.0;  // carrier energy minus omega_e
    Wavepacket packet;
    Integrator integrator;

    std::size_t dimension() const { return 2 * n_sites + 1; }
    std::size_t d_sites() const { return site2 - site1; }
    double carrier_energy() const;
    double atom_energy() const { return carrier_energy() - delta; }
};

/// Continuum-model parameters a lattice configuration corresponds to at its
/// carrier: Gamma_j = g_j^2 / v_j with v_k = 2J sin k0 and v_q = 2J sin q,
/// phi1 = k0 d, phi2 = q d, cos q = cos k0 + omega_f / (2J).
struct ChannelMapping {
    double k0 = 0, q = 0;
    double v_k = 0, v_q = 0;
    ModelParams params;
    double delta = 0;
};

ChannelMapping map_to_model(const LatticeConfig& config);

/// Physical knobs for a comparison run; make_lattice_config sizes the chain
/// and the run time from them.
struct LatticeScenario {
    double sigma = 40.0;
    std::size_t d_sites = 4;
    double gamma1 = 0.05;
    double gamma2 = 0.05;
    double omega_f = 0.0;
    double delta = 0.0;
    double carrier = std::numbers::pi / 2;
    double hopping = 1.0;
    double dt = 0.02;
};

LatticeConfig make_lattice_config(const LatticeScenario& scenario);

/// The three reference scenarios (J = 1, k0 = pi/2).
LatticeScenario optimum_scenario(double sigma);          // d=4, omega_f=0, eta=1, Delta=0
LatticeScenario total_reflection_scenario(double sigma); // d=7, q d = 3 pi, Delta = Delta*
LatticeScenario fipt_scenario(double sigma, double delta = 0.0);  // d=2, k0 d = pi

/// Checks the invariants a scattering comparison needs (chain length, packet
/// width, carrier window, |omega_f| < J/2, and packet placement at the final
/// time).  Throws std::invalid_argument describing the first violation.
void validate_scattering_config(const LatticeConfig& config);

/// Real symmetric operator in CSR form.
class SparseHamiltonian {
public:
    struct Entry {
        std::size_t row, col;
        double value;
    };

    SparseHamiltonian() = default;
    SparseHamiltonian(std::size_t dim, std::vector<Entry> entries);

    std::size_t dimension() const { return dim_; }
    double at(std::size_t row, std::size_t col) const;
    void apply(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
    /// max |H_ij - conj(H_ji)|
    double hermiticity_defect() const;
    /// Gershgorin bounds on the spectrum.
    std::pair<double, double> spectral_bounds() const;
    std::vector<std::vector<double>> to_dense() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<std::size_t> cols_;
    std::vector<double> values_;
};

/// Throws std::invalid_argument for inconsistent dimensions or sites.
SparseHamiltonian build_hamiltonian(const LatticeConfig& config);

class NormDriftError : public std::runtime_error {
public:
    explicit NormDriftError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kMaxNormDrift = 1e-8;

struct PropagationResult {
    std::vector<std::complex<double>> state;
    double max_norm_drift = 0;
    std::size_t steps = 0;
    double time = 0;
};

/// Normalized Gaussian packet in the g-channel.
std::vector<std::complex<double>> initial_wavepacket(const LatticeConfig& config);

/// Chebyshev expansion of exp(-i H dt) per step.  Requires dt <= 0.02/J;
/// throws NormDriftError if |<psi|psi> - 1| ever exceeds 1e-8.
PropagationResult propagate(const LatticeConfig& config);
PropagationResult propagate(const SparseHamiltonian& hamiltonian, std::vector<std::complex<double>> state,
                            double dt, double final_time);

struct WavepacketResult {
    double T1_est = 0;
    double R1_est = 0;
    double Tc_est = 0;
    double residual_atom_population = 0;  // atom plus photons between the coupling sites
    double norm_error = 0;
};

WavepacketResult measure(const LatticeConfig& config, std::span<const std::complex<double>> state);

/// <n> over sites [offset, offset + count), normalized by that block's weight.
double packet_center(std::span<const std::complex<double>> state, std::size_t offset, std::size_t count);

struct LatticeComparison {
    ChannelMapping mapping;
    ScatteringAmplitudes analytic;
    WavepacketResult lattice;
    double max_norm_drift = 0;
    double max_abs_dev = 0;  // over T1, R1, Tc
};

LatticeComparison compare_to_analytic(const LatticeConfig& config);

}  // namespace gls

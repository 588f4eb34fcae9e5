#include "gls/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gls {

namespace {

using cd = std::complex<double>;

constexpr double kMaxDtTimesJ = 0.02;
constexpr double kChebyshevCutoff = 1e-18;

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void check_basic(const LatticeConfig& c)
{
    if (c.n_sites == 0) throw std::invalid_argument("lattice: n_sites must be >= 1");
    if (!(c.hopping > 0.0) || !std::isfinite(c.hopping)) throw std::invalid_argument("lattice: hopping must be > 0");
    if (c.site1 > c.site2) throw std::invalid_argument("lattice: site1 must not exceed site2");
    if (c.site2 >= c.n_sites) throw std::invalid_argument("lattice: coupling site outside the chain");
    for (double v : {c.g1, c.g2, c.omega_f, c.delta, c.packet.carrier}) {
        if (!std::isfinite(v)) throw std::invalid_argument("lattice: parameters must be finite");
    }
}

double group_velocity(double hopping, double kappa)
{
    return 2.0 * hopping * std::sin(kappa);
}

}  // namespace

double LatticeConfig::carrier_energy() const
{
    return -2.0 * hopping * std::cos(packet.carrier);
}

ChannelMapping map_to_model(const LatticeConfig& config)
{
    check_basic(config);
    ChannelMapping m;
    m.k0 = config.packet.carrier;
    const double cos_q = std::cos(m.k0) + config.omega_f / (2.0 * config.hopping);
    if (!(std::abs(cos_q) < 1.0)) throw std::invalid_argument("lattice: f-channel carrier lies outside the band");
    m.q = std::acos(cos_q);
    m.v_k = group_velocity(config.hopping, m.k0);
    m.v_q = group_velocity(config.hopping, m.q);
    if (!(m.v_k > 0.0)) throw std::invalid_argument("lattice: carrier must lie in (0, pi)");
    const double d = static_cast<double>(config.d_sites());
    m.params.gamma1 = config.g1 * config.g1 / m.v_k;
    m.params.gamma2 = config.g2 * config.g2 / m.v_q;
    m.params.phi1 = m.k0 * d;
    m.params.phi2 = m.q * d;
    m.params.gamma_loss = 0.0;
    m.delta = config.delta;
    return m;
}

LatticeConfig make_lattice_config(const LatticeScenario& s)
{
    if (!(s.sigma > 0.0) || !(s.hopping > 0.0)) throw std::invalid_argument("lattice: sigma and hopping must be > 0");
    if (!(s.gamma1 >= 0.0) || !(s.gamma2 >= 0.0)) throw std::invalid_argument("lattice: decay rates must be >= 0");

    LatticeConfig c;
    c.hopping = s.hopping;
    c.omega_f = s.omega_f;
    c.delta = s.delta;
    c.packet.carrier = s.carrier;
    c.packet.sigma = s.sigma;

    const double cos_q = std::cos(s.carrier) + s.omega_f / (2.0 * s.hopping);
    if (!(std::abs(cos_q) < 1.0)) throw std::invalid_argument("lattice: f-channel carrier lies outside the band");
    const double v_k = group_velocity(s.hopping, s.carrier);
    const double v_q = group_velocity(s.hopping, std::acos(cos_q));
    const double v_min = std::min(v_k, v_q);
    const double v_max = std::max(v_k, v_q);
    const double d = static_cast<double>(s.d_sites);

    // Launch 6 sigma before site1; run until the slowest packet is 4 sigma
    // clear of the coupling region, leaving >= 6 sigma to each chain end.
    const double t_final = (10.0 * s.sigma + d) / v_min;
    const auto n1 = static_cast<std::size_t>(std::ceil(v_max * t_final));
    const auto tail = static_cast<std::size_t>(std::ceil(v_max * t_final - 3.0 * s.sigma) + std::ceil(3.0 * s.sigma));
    c.site1 = n1;
    c.site2 = n1 + s.d_sites;
    c.n_sites = c.site2 + 1 + tail;
    c.packet.center = static_cast<double>(n1) - 6.0 * s.sigma;
    c.integrator.dt = s.dt;
    c.integrator.final_time = t_final;

    c.g1 = std::sqrt(s.gamma1 * v_k);
    c.g2 = std::sqrt(s.gamma2 * v_q);
    return c;
}

LatticeScenario optimum_scenario(double sigma)
{
    LatticeScenario s;
    s.sigma = sigma;
    s.d_sites = 4;
    s.gamma1 = 0.05;
    s.gamma2 = 0.05;
    s.omega_f = 0.0;
    s.delta = 0.0;
    return s;
}

LatticeScenario total_reflection_scenario(double sigma)
{
    LatticeScenario s;
    s.sigma = sigma;
    s.d_sites = 7;
    s.gamma1 = 0.25;
    s.gamma2 = 0.05;
    s.omega_f = 2.0 * std::cos(3.0 * std::numbers::pi / 7.0);
    // Delta* = 2 Gamma1 sin(7 pi / 2); sin(phi2) = 0
    s.delta = -2.0 * s.gamma1;
    return s;
}

LatticeScenario fipt_scenario(double sigma, double delta)
{
    LatticeScenario s;
    s.sigma = sigma;
    s.d_sites = 2;
    s.gamma1 = 0.05;
    s.gamma2 = 0.5;
    s.omega_f = -0.45;
    s.delta = delta;
    return s;
}

void validate_scattering_config(const LatticeConfig& c)
{
    check_basic(c);
    auto fail = [](const std::string& msg) { throw std::invalid_argument("lattice: " + msg); };
    const double J = c.hopping;
    const double sigma = c.packet.sigma;
    if (c.n_sites < 400) fail("n_sites must be >= 400");
    if (c.d_sites() < 1) fail("coupling sites must be separated by >= 1 site");
    if (!(sigma >= 20.0)) fail("packet width sigma must be >= 20 sites");
    if (std::abs(c.packet.carrier - std::numbers::pi / 2) > 0.3) fail("carrier k0 must lie within pi/2 +- 0.3");
    if (!(std::abs(c.omega_f) < 0.5 * J)) fail("|omega_f| must be < J/2");
    if (!(c.integrator.dt > 0.0) || c.integrator.dt > kMaxDtTimesJ / J * (1.0 + 1e-12)) fail("dt must be in (0, 0.02/J]");
    if (!(c.integrator.final_time > 0.0)) fail("final time must be > 0");

    const ChannelMapping m = map_to_model(c);
    const double v_min = std::min(m.v_k, m.v_q);
    const double v_max = std::max(m.v_k, m.v_q);
    const double T = c.integrator.final_time;
    const double n1 = static_cast<double>(c.site1);
    const double n2 = static_cast<double>(c.site2);
    const double last = static_cast<double>(c.n_sites - 1);
    const double x0 = c.packet.center;
    if (x0 < 3.0 * sigma) fail("packet launched within 3 sigma of the chain start");
    if (n1 - x0 < 3.0 * sigma) fail("packet launched within 3 sigma of the coupling region");
    // outgoing centers at T: reflected in [n1 - (vT - (n1 - x0))], transmitted at x0 + vT
    if (v_min * T - (n1 - x0) < 3.0 * sigma) fail("reflected packet within 3 sigma of the coupling region at T");
    if (n1 - (v_max * T - (n1 - x0)) < 3.0 * sigma) fail("reflected packet within 3 sigma of the chain start at T");
    if (x0 + v_min * T < n2 + 3.0 * sigma) fail("transmitted packet within 3 sigma of the coupling region at T");
    if (x0 + v_max * T > last - 3.0 * sigma) fail("transmitted packet within 3 sigma of the chain end at T");
}

SparseHamiltonian::SparseHamiltonian(std::size_t dim, std::vector<Entry> entries) : dim_(dim)
{
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    row_start_.assign(dim + 1, 0);
    for (const Entry& e : entries) {
        if (e.row >= dim || e.col >= dim) throw std::invalid_argument("sparse entry outside the matrix");
        cols_.push_back(e.col);
        values_.push_back(e.value);
        ++row_start_[e.row + 1];
    }
    for (std::size_t i = 0; i < dim; ++i) row_start_[i + 1] += row_start_[i];

    // merge duplicates (two couplings on one site)
    std::vector<std::size_t> start(dim + 1, 0);
    std::vector<std::size_t> cols;
    std::vector<double> vals;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
            if (cols.size() > start[i] && cols.back() == cols_[k]) {
                vals.back() += values_[k];
            } else {
                cols.push_back(cols_[k]);
                vals.push_back(values_[k]);
            }
        }
        start[i + 1] = cols.size();
    }
    row_start_ = std::move(start);
    cols_ = std::move(cols);
    values_ = std::move(vals);
}

double SparseHamiltonian::at(std::size_t row, std::size_t col) const
{
    if (row >= dim_ || col >= dim_) throw std::out_of_range("sparse index");
    const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row]);
    const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row + 1]);
    const auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col) return 0.0;
    return values_[static_cast<std::size_t>(it - cols_.begin())];
}

void SparseHamiltonian::apply(std::span<const cd> in, std::span<cd> out) const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        cd acc{};
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) acc += values_[k] * in[cols_[k]];
        out[i] = acc;
    }
}

double SparseHamiltonian::hermiticity_defect() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
            worst = std::max(worst, std::abs(values_[k] - at(cols_[k], i)));
        }
    }
    return worst;
}

std::pair<double, double> SparseHamiltonian::spectral_bounds() const
{
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double diag = 0.0, radius = 0.0;
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
            if (cols_[k] == i) diag = values_[k];
            else radius += std::abs(values_[k]);
        }
        if (i == 0 || diag - radius < lo) lo = diag - radius;
        if (i == 0 || diag + radius > hi) hi = diag + radius;
    }
    return {lo, hi};
}

std::vector<std::vector<double>> SparseHamiltonian::to_dense() const
{
    std::vector<std::vector<double>> m(dim_, std::vector<double>(dim_, 0.0));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) m[i][cols_[k]] = values_[k];
    }
    return m;
}

SparseHamiltonian build_hamiltonian(const LatticeConfig& config)
{
    check_basic(config);
    const std::size_t n = config.n_sites;
    const std::size_t e = 2 * n;
    const double J = config.hopping;
    std::vector<SparseHamiltonian::Entry> entries;
    entries.reserve(8 * n);

    auto link = [&](std::size_t a, std::size_t b, double v) {
        entries.push_back({a, b, v});
        entries.push_back({b, a, v});
    };
    for (std::size_t channel = 0; channel < 2; ++channel) {
        const std::size_t off = channel * n;
        for (std::size_t s = 0; s + 1 < n; ++s) link(off + s, off + s + 1, -J);
    }
    if (config.omega_f != 0.0) {
        for (std::size_t s = 0; s < n; ++s) entries.push_back({n + s, n + s, config.omega_f});
    }
    for (std::size_t site : {config.site1, config.site2}) {
        if (config.g1 != 0.0) link(e, site, config.g1);
        if (config.g2 != 0.0) link(e, n + site, config.g2);
    }
    entries.push_back({e, e, config.atom_energy()});
    return SparseHamiltonian(config.dimension(), std::move(entries));
}

std::vector<cd> initial_wavepacket(const LatticeConfig& config)
{
    check_basic(config);
    std::vector<cd> psi(config.dimension());
    const double sigma = config.packet.sigma;
    if (!(sigma > 0.0)) throw std::invalid_argument("lattice: sigma must be > 0");
    double norm2 = 0.0;
    for (std::size_t s = 0; s < config.n_sites; ++s) {
        const double x = static_cast<double>(s) - config.packet.center;
        const double amp = std::exp(-x * x / (4.0 * sigma * sigma));
        psi[s] = std::polar(amp, config.packet.carrier * static_cast<double>(s));
        norm2 += amp * amp;
    }
    if (!(norm2 > 0.0)) throw std::invalid_argument("lattice: packet has no weight on the chain");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& v : psi) v *= scale;
    return psi;
}

PropagationResult propagate(const SparseHamiltonian& h, std::vector<cd> state, double dt, double final_time)
{
    const std::size_t dim = h.dimension();
    if (state.size() != dim) throw std::invalid_argument("propagate: state dimension mismatch");
    if (!(dt > 0.0) || !(final_time >= 0.0)) throw std::invalid_argument("propagate: dt must be > 0 and T >= 0");

    double norm0 = 0.0;
    for (const auto& v : state) norm0 += std::norm(v);
    if (!(norm0 > 0.0)) throw std::invalid_argument("propagate: zero state");

    PropagationResult result;
    result.steps = static_cast<std::size_t>(std::ceil(final_time / dt - 1e-12));
    if (result.steps == 0) {
        result.state = std::move(state);
        return result;
    }
    const double step = final_time / static_cast<double>(result.steps);

    // exp(-i H t) = exp(-i c t) sum_k (2 - delta_k0) (-i)^k J_k(R t) T_k((H - c)/R)
    const auto [lo, hi] = h.spectral_bounds();
    const double center = 0.5 * (hi + lo);
    const double radius = std::max(0.5 * (hi - lo) * 1.01, 1e-12);
    const double x = radius * step;
    std::vector<cd> coeff;
    for (std::size_t k = 0;; ++k) {
        const double jk = std::cyl_bessel_j(static_cast<double>(k), x);
        static constexpr cd kPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        coeff.push_back((k == 0 ? 1.0 : 2.0) * kPowers[k % 4] * jk);
        if (static_cast<double>(k) > x && std::abs(jk) < kChebyshevCutoff) break;
        if (k > 200) throw std::runtime_error("propagate: Chebyshev series did not converge");
    }
    const cd phase = std::polar(1.0, -center * step);

    std::vector<cd> prev(dim), cur(dim), next(dim), acc(dim);
    auto apply_scaled = [&](const std::vector<cd>& in, std::vector<cd>& out) {
        h.apply(in, out);
        for (std::size_t i = 0; i < dim; ++i) out[i] = (out[i] - center * in[i]) / radius;
    };

    for (std::size_t s = 0; s < result.steps; ++s) {
        prev = state;
        apply_scaled(prev, cur);
        for (std::size_t i = 0; i < dim; ++i) acc[i] = coeff[0] * prev[i] + coeff[1] * cur[i];
        for (std::size_t k = 2; k < coeff.size(); ++k) {
            apply_scaled(cur, next);
            for (std::size_t i = 0; i < dim; ++i) {
                next[i] = 2.0 * next[i] - prev[i];
                acc[i] += coeff[k] * next[i];
            }
            std::swap(prev, cur);
            std::swap(cur, next);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            state[i] = phase * acc[i];
            norm += std::norm(state[i]);
        }
        const double drift = std::abs(norm / norm0 - 1.0);
        result.max_norm_drift = std::max(result.max_norm_drift, drift);
        if (drift > kMaxNormDrift) {
            throw NormDriftError("propagate: norm drift " + format_double(drift) + " exceeds 1e-8 at step " +
                                 std::to_string(s + 1) + " of " + std::to_string(result.steps));
        }
    }
    result.time = final_time;
    result.state = std::move(state);
    return result;
}

PropagationResult propagate(const LatticeConfig& config)
{
    check_basic(config);
    if (!(config.integrator.dt > 0.0) || config.integrator.dt > kMaxDtTimesJ / config.hopping * (1.0 + 1e-12)) {
        throw std::invalid_argument("propagate: dt must be in (0, 0.02/J]");
    }
    return propagate(build_hamiltonian(config), initial_wavepacket(config), config.integrator.dt,
                     config.integrator.final_time);
}

WavepacketResult measure(const LatticeConfig& config, std::span<const cd> state)
{
    check_basic(config);
    if (state.size() != config.dimension()) throw std::invalid_argument("measure: state dimension mismatch");
    const std::size_t n = config.n_sites;
    WavepacketResult r;
    double total = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const double pg = std::norm(state[s]);
        const double pf = std::norm(state[n + s]);
        total += pg + pf;
        if (s < config.site1) {
            r.R1_est += pg;
            r.Tc_est += pf;
        } else if (s > config.site2) {
            r.T1_est += pg;
            r.Tc_est += pf;
        } else {
            r.residual_atom_population += pg + pf;
        }
    }
    const double pe = std::norm(state[2 * n]);
    r.residual_atom_population += pe;
    total += pe;
    r.norm_error = std::abs(total - 1.0);
    return r;
}

double packet_center(std::span<const cd> state, std::size_t offset, std::size_t count)
{
    if (offset + count > state.size()) throw std::invalid_argument("packet_center: block outside the state");
    double w = 0.0, m = 0.0;
    for (std::size_t s = 0; s < count; ++s) {
        const double p = std::norm(state[offset + s]);
        w += p;
        m += p * static_cast<double>(s);
    }
    if (!(w > 0.0)) throw std::invalid_argument("packet_center: block has no weight");
    return m / w;
}

LatticeComparison compare_to_analytic(const LatticeConfig& config)
{
    validate_scattering_config(config);
    LatticeComparison c;
    c.mapping = map_to_model(config);
    c.analytic = giant_lambda_amplitudes(c.mapping.params, c.mapping.delta);
    const PropagationResult run = propagate(config);
    c.max_norm_drift = run.max_norm_drift;
    c.lattice = measure(config, run.state);
    c.max_abs_dev = std::max({std::abs(c.lattice.T1_est - c.analytic.T1), std::abs(c.lattice.R1_est - c.analytic.R1),
                              std::abs(c.lattice.Tc_est - c.analytic.Tc)});
    return c;
}

}  // namespace gls

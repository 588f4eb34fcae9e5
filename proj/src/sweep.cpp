#include "gls/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace gls {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

struct CellValues {
    double T1 = kNaN, R1 = kNaN, Tc = kNaN, loss = kNaN;
    double T1_tilde = kNaN, Tc_tilde = kNaN, loss_tilde = kNaN;
};

CellValues evaluate_cell(const SweepSpec& spec, double delta, double scan_value)
{
    CellValues c;
    const ModelParams p = spec.params_at(scan_value);
    try {
        const auto a = giant_lambda_amplitudes(p, delta);
        c.T1 = a.T1;
        c.R1 = a.R1;
        c.Tc = a.Tc;
        c.loss = a.loss;
        if (spec.sagnac) {
            const auto s = sagnac_amplitudes(p, delta);
            c.T1_tilde = s.T1_tilde;
            c.Tc_tilde = s.Tc_tilde;
            c.loss_tilde = s.loss;
        }
    } catch (const SingularPointError&) {
        c = CellValues{};
    }
    return c;
}

}  // namespace

std::string_view sweep_mode_name(SweepMode mode)
{
    return mode == SweepMode::DeltaDphi ? "delta-dphi" : "delta-eta";
}

std::optional<SweepMode> parse_sweep_mode(std::string_view name)
{
    if (name == "delta-dphi") return SweepMode::DeltaDphi;
    if (name == "delta-eta") return SweepMode::DeltaEta;
    return std::nullopt;
}

double Axis::value(std::size_t i) const
{
    if (i + 1 == count) return max;
    return min + (max - min) * (static_cast<double>(i) / static_cast<double>(count - 1));
}

void Axis::validate(const char* name) const
{
    if (count < 2) throw std::invalid_argument(std::string(name) + ": count must be >= 2");
    if (!std::isfinite(min) || !std::isfinite(max)) throw std::invalid_argument(std::string(name) + ": bounds must be finite");
    if (!(min < max)) throw std::invalid_argument(std::string(name) + ": min must be < max");
}

void SweepSpec::validate() const
{
    delta_axis.validate("delta axis");
    scan_axis.validate("scan axis");
    if (mode == SweepMode::DeltaEta && scan_axis.min < 0.0) {
        throw std::invalid_argument("scan axis: eta must be >= 0");
    }
    params_at(scan_axis.min).validate();
    params_at(scan_axis.max).validate();
}

ModelParams SweepSpec::params_at(double scan_value) const
{
    if (mode == SweepMode::DeltaDphi) return ModelParams::from_ratio(gamma1, eta, phi1, scan_value, gamma_loss);
    return ModelParams::from_ratio(gamma1, scan_value, phi1, dphi, gamma_loss);
}

std::string_view quantity_name(Quantity q)
{
    switch (q) {
    case Quantity::T1: return "T1";
    case Quantity::R1: return "R1";
    case Quantity::Tc: return "Tc";
    case Quantity::Loss: return "loss";
    case Quantity::T1Tilde: return "T1_tilde";
    case Quantity::TcTilde: return "Tc_tilde";
    case Quantity::LossTilde: return "loss_tilde";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name)
{
    for (auto q : {Quantity::T1, Quantity::R1, Quantity::Tc, Quantity::Loss, Quantity::T1Tilde,
                   Quantity::TcTilde, Quantity::LossTilde}) {
        if (quantity_name(q) == name) return q;
    }
    return std::nullopt;
}

bool is_sagnac_quantity(Quantity q)
{
    return q == Quantity::T1Tilde || q == Quantity::TcTilde || q == Quantity::LossTilde;
}

const std::vector<double>& SweepResult::values(Quantity q) const
{
    switch (q) {
    case Quantity::T1: return T1;
    case Quantity::R1: return R1;
    case Quantity::Tc: return Tc;
    case Quantity::Loss: return loss;
    case Quantity::T1Tilde: return T1_tilde;
    case Quantity::TcTilde: return Tc_tilde;
    case Quantity::LossTilde: return loss_tilde;
    }
    throw std::invalid_argument("unknown quantity");
}

std::optional<double> evaluate_quantity(const SweepSpec& spec, Quantity q, double delta, double scan_value)
{
    const ModelParams p = spec.params_at(scan_value);
    try {
        if (is_sagnac_quantity(q)) {
            const auto s = sagnac_amplitudes(p, delta);
            if (q == Quantity::T1Tilde) return s.T1_tilde;
            if (q == Quantity::TcTilde) return s.Tc_tilde;
            return s.loss;
        }
        const auto a = giant_lambda_amplitudes(p, delta);
        switch (q) {
        case Quantity::T1: return a.T1;
        case Quantity::R1: return a.R1;
        case Quantity::Tc: return a.Tc;
        default: return a.loss;
        }
    } catch (const SingularPointError&) {
        return std::nullopt;
    }
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads)
{
    spec.validate();
    SweepResult r;
    r.spec = spec;
    const std::size_t rows = spec.delta_axis.count;
    const std::size_t cols = spec.scan_axis.count;
    const std::size_t cells = rows * cols;
    r.T1.assign(cells, kNaN);
    r.R1.assign(cells, kNaN);
    r.Tc.assign(cells, kNaN);
    r.loss.assign(cells, kNaN);
    if (spec.sagnac) {
        r.T1_tilde.assign(cells, kNaN);
        r.Tc_tilde.assign(cells, kNaN);
        r.loss_tilde.assign(cells, kNaN);
    }

    // Each worker owns a disjoint set of rows and writes only those cells.
    auto fill_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < rows; i += stride) {
            const double delta = spec.delta_axis.value(i);
            for (std::size_t j = 0; j < cols; ++j) {
                const CellValues c = evaluate_cell(spec, delta, spec.scan_axis.value(j));
                const std::size_t k = i * cols + j;
                r.T1[k] = c.T1;
                r.R1[k] = c.R1;
                r.Tc[k] = c.Tc;
                r.loss[k] = c.loss;
                if (spec.sagnac) {
                    r.T1_tilde[k] = c.T1_tilde;
                    r.Tc_tilde[k] = c.Tc_tilde;
                    r.loss_tilde[k] = c.loss_tilde;
                }
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(threads, rows);
    if (workers <= 1) {
        fill_rows(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
    }

    r.undefined_cells = static_cast<std::size_t>(
        std::count_if(r.T1.begin(), r.T1.end(), [](double v) { return std::isnan(v); }));
    return r;
}

FigurePreset figure_preset(std::string_view id)
{
    constexpr Quantity kPanelQuantity[] = {Quantity::T1, Quantity::R1, Quantity::Tc};
    const Axis eta_axis{0.0, 4.0, 321};

    auto bad = [&] { return std::invalid_argument("unknown figure id: " + std::string(id)); };
    if (id.size() != 5 || id.substr(0, 3) != "fig") throw bad();
    const char figure = id[3];
    const int panel = id[4] - 'a';

    FigurePreset preset;
    preset.id = std::string(id);
    SweepSpec& s = preset.spec;

    switch (figure) {
    case '2':  // dphi scans at eta = 1; (a)-(c) phi1 = 0, (d)-(f) phi1 = pi/2
        if (panel < 0 || panel > 5) throw bad();
        s.mode = SweepMode::DeltaDphi;
        s.phi1 = panel < 3 ? 0.0 : kPi / 2;
        s.eta = 1.0;
        preset.quantity = kPanelQuantity[panel % 3];
        break;
    case '3':  // eta scans at phi1 = 0; dphi = 2pi, pi, pi/2 by row
        if (panel < 0 || panel > 8) throw bad();
        s.mode = SweepMode::DeltaEta;
        s.phi1 = 0.0;
        s.dphi = panel < 3 ? 2 * kPi : (panel < 6 ? kPi : kPi / 2);
        s.scan_axis = eta_axis;
        preset.quantity = kPanelQuantity[panel % 3];
        break;
    case '4':  // Sagnac, dphi scans at eta = 1
        if (panel < 0 || panel > 1) throw bad();
        s.mode = SweepMode::DeltaDphi;
        s.sagnac = true;
        s.phi1 = panel == 0 ? 0.0 : kPi / 2;
        s.eta = 1.0;
        preset.quantity = Quantity::TcTilde;
        break;
    case '5':  // Sagnac, eta scans at phi1 = 0
        if (panel < 0 || panel > 2) throw bad();
        s.mode = SweepMode::DeltaEta;
        s.sagnac = true;
        s.phi1 = 0.0;
        s.dphi = panel == 0 ? 2 * kPi : (panel == 1 ? kPi : kPi / 2);
        s.scan_axis = eta_axis;
        preset.quantity = Quantity::TcTilde;
        break;
    default:
        throw bad();
    }
    return preset;
}

std::vector<std::string> figure_ids()
{
    std::vector<std::string> ids;
    for (char c = 'a'; c <= 'f'; ++c) ids.push_back(std::string("fig2") + c);
    for (char c = 'a'; c <= 'i'; ++c) ids.push_back(std::string("fig3") + c);
    for (char c = 'a'; c <= 'b'; ++c) ids.push_back(std::string("fig4") + c);
    for (char c = 'a'; c <= 'c'; ++c) ids.push_back(std::string("fig5") + c);
    return ids;
}

}  // namespace gls

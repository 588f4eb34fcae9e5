#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gls/model.hpp"

namespace gls {

enum class SweepMode { DeltaDphi, DeltaEta };

std::string_view sweep_mode_name(SweepMode mode);
std::optional<SweepMode> parse_sweep_mode(std::string_view name);

struct Axis {
    double min = 0;
    double max = 1;
    std::size_t count = 2;

    /// Node i of an evenly spaced grid; exact at both ends.
    double value(std::size_t i) const;
    double spacing() const { return (max - min) / static_cast<double>(count - 1); }
    void validate(const char* name) const;
};

struct SweepSpec {
    SweepMode mode = SweepMode::DeltaDphi;
    double phi1 = 0.0;
    double eta = 1.0;   // fixed in delta-dphi mode
    double dphi = 0.0;  // fixed in delta-eta mode
    double gamma1 = 1.0;
    double gamma_loss = 0.0;
    bool sagnac = false;
    Axis delta_axis{-8.0, 8.0, 321};
    Axis scan_axis{0.0, 12.566370614359172, 321};

    void validate() const;
    /// Model parameters for one column (a dphi or eta value on the scan axis).
    ModelParams params_at(double scan_value) const;
};

/// Scalar quantities a sweep can report per cell.
enum class Quantity { T1, R1, Tc, Loss, T1Tilde, TcTilde, LossTilde };

std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);
bool is_sagnac_quantity(Quantity q);

/// Row-major grids (row = delta index, column = scan index).  Cells where the
/// amplitudes are undefined (singular denominator) hold NaN.
struct SweepResult {
    SweepSpec spec;
    std::vector<double> T1, R1, Tc, loss;
    std::vector<double> T1_tilde, Tc_tilde, loss_tilde;  // empty unless spec.sagnac
    std::size_t undefined_cells = 0;

    std::size_t rows() const { return spec.delta_axis.count; }
    std::size_t cols() const { return spec.scan_axis.count; }
    std::size_t index(std::size_t delta_i, std::size_t scan_j) const { return delta_i * cols() + scan_j; }
    const std::vector<double>& values(Quantity q) const;
};

/// Evaluates one quantity of the model at (delta, scan value); empty at a
/// singular point.
std::optional<double> evaluate_quantity(const SweepSpec& spec, Quantity q, double delta, double scan_value);

/// Fills every cell of the grid.  threads = 0 uses the hardware concurrency.
/// Results do not depend on the thread count.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

struct FigurePreset {
    std::string id;
    SweepSpec spec;
    Quantity quantity;  // the panel's plotted quantity
};

/// Scan layouts of the published panels (fig2a..f, fig3a..i, fig4a..b,
/// fig5a..c).  Throws std::invalid_argument for an unknown id.
FigurePreset figure_preset(std::string_view id);
std::vector<std::string> figure_ids();

}  // namespace gls

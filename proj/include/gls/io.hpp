#pragma once

#include <ostream>
#include <span>
#include <string>

#include "gls/sweep.hpp"
#include "json.hpp"

namespace gls {

/// Shortest locale-independent rendering with at most `digits` significant
/// digits; empty for NaN, "-0" normalized to "0".
std::string format_number(double v, int digits = 12);

/// Rounds to 15 significant digits for JSON output; NaN and inf become null.
nlohmann::json json_number(double v);

/// `# giant-lambda-scatter v<version>`, a column header row, then one row per
/// grid cell in row-major order (delta outer, scan inner).
void write_sweep_csv(const SweepResult& result, std::ostream& out);

struct HeatmapSpec {
    std::string title;
    std::string x_label;  // scan axis
    std::string y_label;  // delta axis
    double x_min = 0, x_max = 1;
    double y_min = 0, y_max = 1;
    int cell_px = 2;
};

/// Row-major values (rows = y, cols = x); NaN cells are drawn gray.
void write_svg_heatmap(std::span<const double> values, std::size_t rows, std::size_t cols,
                       const HeatmapSpec& spec, std::ostream& out);

}  // namespace gls

#include "gls/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "gls/version.hpp"

namespace gls {

namespace {

struct Rgb {
    int r, g, b;
};

// Linear ramp between two endpoints, t in [0, 1].
constexpr Rgb kLow{13, 8, 135};
constexpr Rgb kHigh{240, 249, 33};
constexpr Rgb kUndefined{128, 128, 128};

Rgb ramp(double t)
{
    t = std::clamp(t, 0.0, 1.0);
    auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
    return {mix(kLow.r, kHigh.r), mix(kLow.g, kHigh.g), mix(kLow.b, kHigh.b)};
}

std::string hex(Rgb c)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "#";
    for (int v : {c.r, c.g, c.b}) {
        s += digits[(v >> 4) & 15];
        s += digits[v & 15];
    }
    return s;
}

std::string escape_xml(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string format_number(double v, int digits)
{
    if (std::isnan(v)) return {};
    if (v == 0.0) return "0";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
    if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return std::string(buf.data(), res.ptr);
}

nlohmann::json json_number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    if (v == 0.0) return 0.0;
    const std::string s = format_number(v, 15);
    double rounded = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), rounded);
    return rounded;
}

void write_sweep_csv(const SweepResult& r, std::ostream& out)
{
    const bool sagnac = r.spec.sagnac;
    const char* scan_name = r.spec.mode == SweepMode::DeltaDphi ? "dphi" : "eta";
    std::string text;
    text.reserve(r.T1.size() * (sagnac ? 140 : 90) + 128);
    text += "# ";
    text += kProgramName;
    text += " v";
    text += kVersion;
    text += "\ndelta,";
    text += scan_name;
    text += ",T1,R1,Tc,loss";
    if (sagnac) text += ",T1_tilde,Tc_tilde,loss_tilde";
    text += '\n';

    auto field = [&text](double v) {
        text += ',';
        text += format_number(v);
    };
    for (std::size_t i = 0; i < r.rows(); ++i) {
        const std::string delta = format_number(r.spec.delta_axis.value(i));
        for (std::size_t j = 0; j < r.cols(); ++j) {
            const std::size_t k = r.index(i, j);
            text += delta;
            field(r.spec.scan_axis.value(j));
            field(r.T1[k]);
            field(r.R1[k]);
            field(r.Tc[k]);
            field(r.loss[k]);
            if (sagnac) {
                field(r.T1_tilde[k]);
                field(r.Tc_tilde[k]);
                field(r.loss_tilde[k]);
            }
            text += '\n';
        }
    }
    out << text;
}

void write_svg_heatmap(std::span<const double> values, std::size_t rows, std::size_t cols,
                       const HeatmapSpec& spec, std::ostream& out)
{
    if (values.size() != rows * cols || rows == 0 || cols == 0) {
        throw std::invalid_argument("heatmap: values do not match rows x cols");
    }
    if (spec.cell_px < 1) throw std::invalid_argument("heatmap: cell size must be >= 1 px");

    double lo = INFINITY, hi = -INFINITY;
    for (double v : values) {
        if (std::isnan(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const bool any = lo <= hi;
    const double span = any && hi > lo ? hi - lo : 1.0;

    const int px = spec.cell_px;
    const int margin_left = 60, margin_top = 30, margin_bottom = 40;
    const int w = static_cast<int>(cols) * px;
    const int h = static_cast<int>(rows) * px;
    const int width = margin_left + w + 20;
    const int height = margin_top + h + margin_bottom;

    std::string s;
    s.reserve(rows * cols * 64 + 1024);
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- ";
    s += kProgramName;
    s += " v";
    s += kVersion;
    s += " heatmap. Color map: linear in value from rgb(13,8,135) at min=";
    s += any ? format_number(lo) : "n/a";
    s += " to rgb(240,249,33) at max=";
    s += any ? format_number(hi) : "n/a";
    s += "; undefined cells rgb(128,128,128). x: ";
    s += escape_xml(spec.x_label);
    s += " left to right, y: ";
    s += escape_xml(spec.y_label);
    s += " bottom to top. -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" shape-rendering=\"crispEdges\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
    s += "<text x=\"" + std::to_string(margin_left) + "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape_xml(spec.title) + "</text>\n";

    for (std::size_t i = 0; i < rows; ++i) {
        // row 0 (smallest y) at the bottom
        const int y = margin_top + static_cast<int>(rows - 1 - i) * px;
        for (std::size_t j = 0; j < cols; ++j) {
            const double v = values[i * cols + j];
            const Rgb c = std::isnan(v) ? kUndefined : ramp((v - lo) / span);
            s += "<rect x=\"" + std::to_string(margin_left + static_cast<int>(j) * px) + "\" y=\"" +
                 std::to_string(y) + "\" width=\"" + std::to_string(px) + "\" height=\"" + std::to_string(px) +
                 "\" fill=\"" + hex(c) + "\"/>\n";
        }
    }

    const int axis_y = margin_top + h + 16;
    s += "<text x=\"" + std::to_string(margin_left) + "\" y=\"" + std::to_string(axis_y) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + format_number(spec.x_min, 6) + "</text>\n";
    s += "<text x=\"" + std::to_string(margin_left + w) + "\" y=\"" + std::to_string(axis_y) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + format_number(spec.x_max, 6) +
         "</text>\n";
    s += "<text x=\"" + std::to_string(margin_left + w / 2) + "\" y=\"" + std::to_string(axis_y + 16) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + escape_xml(spec.x_label) +
         "</text>\n";
    s += "<text x=\"" + std::to_string(margin_left - 4) + "\" y=\"" + std::to_string(margin_top + h) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + format_number(spec.y_min, 6) +
         "</text>\n";
    s += "<text x=\"" + std::to_string(margin_left - 4) + "\" y=\"" + std::to_string(margin_top + 10) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" + format_number(spec.y_max, 6) +
         "</text>\n";
    s += "<text x=\"14\" y=\"" + std::to_string(margin_top + h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         std::to_string(margin_top + h / 2) + ")\">" + escape_xml(spec.y_label) + "</text>\n";
    s += "</svg>\n";
    out << s;
}

}  // namespace gls

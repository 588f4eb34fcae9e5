#include <numbers>
#include <sstream>

#include "gls/io.hpp"
#include "helpers.hpp"

using namespace gls;
constexpr double pi = std::numbers::pi;

TEST_CASE("number formatting")
{
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-8) == "-8");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(pi) == "3.14159265359");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(NAN).empty());
    CHECK(format_number(0.999999999999999) == "1");
}

TEST_CASE("json numbers carry 15 significant digits")
{
    CHECK(json_number(1.0 / 3.0).dump() == "0.333333333333333");
    CHECK(json_number(0.5).dump() == "0.5");
    CHECK(json_number(NAN).is_null());
    CHECK(json_number(INFINITY).is_null());
    nlohmann::json j;
    j["b"] = 1;
    j["a"] = 2;
    CHECK(j.dump() == R"({"a":2,"b":1})");
}

TEST_CASE("sweep CSV layout")
{
    SweepSpec s;
    s.mode = SweepMode::DeltaEta;
    s.phi1 = 0;
    s.dphi = 2 * pi;
    s.sagnac = true;
    s.delta_axis = {-1, 1, 3};
    s.scan_axis = {0, 2, 2};
    const auto r = run_sweep(s);
    std::ostringstream os;
    write_sweep_csv(r, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "# giant-lambda-scatter v0.1.0");
    std::getline(is, line);
    CHECK(line == "delta,eta,T1,R1,Tc,loss,T1_tilde,Tc_tilde,loss_tilde");
    int rows = 0;
    std::string first;
    while (std::getline(is, line)) {
        if (rows == 0) first = line;
        ++rows;
    }
    CHECK(rows == 6);
    CHECK(first.rfind("-1,0,0.0588235294118,0.941176470588,0,", 0) == 0);
}

TEST_CASE("undefined cells are empty fields")
{
    SweepSpec s;
    s.phi1 = pi;
    s.delta_axis = {-1, 1, 3};
    s.scan_axis = {0, 2 * pi, 3};
    const auto r = run_sweep(s);
    std::ostringstream os;
    write_sweep_csv(r, os);
    CHECK(os.str().find("\n0,0,,,,\n") != std::string::npos);
    CHECK(os.str().find("loss\n") != std::string::npos);
}

TEST_CASE("svg heatmap")
{
    const std::vector<double> v{0.0, 0.5, NAN, 1.0};
    HeatmapSpec h;
    h.title = "t<1>";
    h.cell_px = 3;
    std::ostringstream a, b;
    write_svg_heatmap(v, 2, 2, h, a);
    write_svg_heatmap(v, 2, 2, h, b);
    CHECK(a.str() == b.str());
    const std::string s = a.str();
    CHECK(s.find("<svg") != std::string::npos);
    CHECK(s.find("rgb(13,8,135)") != std::string::npos);
    CHECK(s.find("fill=\"#0d0887\"") != std::string::npos);  // min
    CHECK(s.find("fill=\"#f0f921\"") != std::string::npos);  // max
    CHECK(s.find("fill=\"#808080\"") != std::string::npos);  // NaN
    CHECK(s.find("t&lt;1&gt;") != std::string::npos);
    CHECK_THROWS_AS(write_svg_heatmap(v, 3, 2, h, a), std::invalid_argument);
}

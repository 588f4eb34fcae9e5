#include "gls/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace gls {

namespace {

constexpr cdouble I{0.0, 1.0};

double max_of(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

LinearSystem assemble_giant_system(const ModelParams& p, double delta)
{
    p.validate();
    const double g1 = std::sqrt(p.gamma1);
    const double g2 = std::sqrt(p.gamma2);
    const cdouble detuning{delta, p.gamma_loss};
    // e^{-i k d/2}, e^{+i k d/2}, and the same for q
    const cdouble em1 = std::polar(1.0, -0.5 * p.phi1);
    const cdouble ep1 = std::polar(1.0, 0.5 * p.phi1);
    const cdouble em2 = std::polar(1.0, -0.5 * p.phi2);
    const cdouble ep2 = std::polar(1.0, 0.5 * p.phi2);

    LinearSystem sys{ComplexMatrix(kGiantUnknowns), std::vector<cdouble>(kGiantUnknowns)};
    auto& m = sys.matrix;
    auto& b = sys.rhs;

    // 0 = -i (A - 1) e^{-ikd/2} + g1 u_e
    m(0, kA) = -I * em1;
    m(0, kUe) = g1;
    b[0] = -I * em1;
    // 0 = -i (t1 - A) e^{ikd/2} + g1 u_e
    m(1, kT1) = -I * ep1;
    m(1, kA) = I * ep1;
    m(1, kUe) = g1;
    // 0 = -i (r1 - B) e^{ikd/2} + g1 u_e
    m(2, kR1) = -I * ep1;
    m(2, kB) = I * ep1;
    m(2, kUe) = g1;
    // 0 = -i B e^{-ikd/2} + g1 u_e
    m(3, kB) = -I * em1;
    m(3, kUe) = g1;
    // 0 = -i M e^{-iqd/2} + g2 u_e
    m(4, kM) = -I * em2;
    m(4, kUe) = g2;
    // 0 = -i (t2 - M) e^{iqd/2} + g2 u_e
    m(5, kT2) = -I * ep2;
    m(5, kM) = I * ep2;
    m(5, kUe) = g2;
    // 0 = -i (r2 - N) e^{iqd/2} + g2 u_e
    m(6, kR2) = -I * ep2;
    m(6, kN) = I * ep2;
    m(6, kUe) = g2;
    // 0 = -i N e^{-iqd/2} + g2 u_e
    m(7, kN) = -I * em2;
    m(7, kUe) = g2;
    // 0 = g1/2 [(A + B + 1) e^{-ikd/2} + (A + B + t1 + r1) e^{ikd/2}]
    //   + g2/2 [(M + N) e^{-iqd/2} + (M + N + t2 + r2) e^{iqd/2}] - Delta u_e
    m(8, kA) = 0.5 * g1 * (em1 + ep1);
    m(8, kB) = 0.5 * g1 * (em1 + ep1);
    m(8, kT1) = 0.5 * g1 * ep1;
    m(8, kR1) = 0.5 * g1 * ep1;
    m(8, kM) = 0.5 * g2 * (em2 + ep2);
    m(8, kN) = 0.5 * g2 * (em2 + ep2);
    m(8, kT2) = 0.5 * g2 * ep2;
    m(8, kR2) = 0.5 * g2 * ep2;
    m(8, kUe) = -detuning;
    b[8] = -0.5 * g1 * em1;
    return sys;
}

FullSolution solve_giant(const ModelParams& params, double delta)
{
    const auto sys = assemble_giant_system(params, delta);
    const auto x = solve_dense(sys.matrix, sys.rhs);
    FullSolution s;
    s.A = x[kA];
    s.B = x[kB];
    s.M = x[kM];
    s.N = x[kN];
    s.t1 = x[kT1];
    s.r1 = x[kR1];
    s.t2 = x[kT2];
    s.r2 = x[kR2];
    s.u_e = x[kUe];
    s.max_residual = max_of(residuals(sys.matrix, x, sys.rhs));
    return s;
}

LinearSystem assemble_sagnac_system(const ModelParams& p, double delta)
{
    p.validate();
    const double g1 = std::sqrt(2.0 * p.gamma1);
    const double g2 = std::sqrt(2.0 * p.gamma2);
    const cdouble detuning{delta, p.gamma_loss};
    const cdouble em1 = std::polar(1.0, -0.5 * p.phi1);
    const cdouble ep1 = std::polar(1.0, 0.5 * p.phi1);
    const cdouble em2 = std::polar(1.0, -0.5 * p.phi2);
    const cdouble ep2 = std::polar(1.0, 0.5 * p.phi2);

    LinearSystem sys{ComplexMatrix(kSagnacUnknowns), std::vector<cdouble>(kSagnacUnknowns)};
    auto& m = sys.matrix;
    auto& b = sys.rhs;

    // 0 = -i (A~ - 1) e^{-i phi1/2} + g~1 u_e
    m(0, kAt) = -I * em1;
    m(0, kUet) = g1;
    b[0] = -I * em1;
    // 0 = -i (t~1 - A~) e^{i phi1/2} + g~1 u_e
    m(1, kT1t) = -I * ep1;
    m(1, kAt) = I * ep1;
    m(1, kUet) = g1;
    // 0 = -i B~ e^{-i phi2/2} + g~2 u_e
    m(2, kBt) = -I * em2;
    m(2, kUet) = g2;
    // 0 = -i (t~2 - B~) e^{i phi2/2} + g~2 u_e
    m(3, kT2t) = -I * ep2;
    m(3, kBt) = I * ep2;
    m(3, kUet) = g2;
    // 0 = g~1/2 [(A~ + 1) e^{-i phi1/2} + (A~ + t~1) e^{i phi1/2}]
    //   + g~2/2 [B~ e^{-i phi2/2} + (B~ + t~2) e^{i phi2/2}] - Delta u_e
    m(4, kAt) = 0.5 * g1 * (em1 + ep1);
    m(4, kT1t) = 0.5 * g1 * ep1;
    m(4, kBt) = 0.5 * g2 * (em2 + ep2);
    m(4, kT2t) = 0.5 * g2 * ep2;
    m(4, kUet) = -detuning;
    b[4] = -0.5 * g1 * em1;
    return sys;
}

SagnacSolution solve_sagnac(const ModelParams& params, double delta)
{
    const auto sys = assemble_sagnac_system(params, delta);
    const auto x = solve_dense(sys.matrix, sys.rhs);
    SagnacSolution s;
    s.A_tilde = x[kAt];
    s.B_tilde = x[kBt];
    s.t1_tilde = x[kT1t];
    s.t2_tilde = x[kT2t];
    s.u_e = x[kUet];
    s.max_residual = max_of(residuals(sys.matrix, x, sys.rhs));
    return s;
}

std::array<cdouble, 4> reference_plane_map(const FullSolution& s, const ModelParams& p)
{
    return {s.t1, s.r1 * std::polar(1.0, p.phi1), s.t2 * std::polar(1.0, 0.5 * (p.phi1 - p.phi2)),
            s.r2 * std::polar(1.0, 0.5 * (p.phi1 + p.phi2))};
}

}  // namespace gls

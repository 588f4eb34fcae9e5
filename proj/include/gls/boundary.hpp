#pragma once

// Raw boundary-condition systems for the two-point coupled atom, assembled
// row by row from the delta-function matching conditions and solved with
// solve_dense.  Used as an exactness oracle for the closed forms in
// model.hpp.
//
// Conventions: v_g = 1, g_j = sqrt(Gamma_j), k d = phi1, q d = phi2, and the
// intrinsic loss enters the atom row as Delta -> Delta + i gamma.

#include <array>
#include <vector>

#include "gls/dense_solver.hpp"
#include "gls/model.hpp"

namespace gls {

struct LinearSystem {
    ComplexMatrix matrix;
    std::vector<cdouble> rhs;
};

/// Unknown ordering of the nine-unknown system.
enum GiantUnknown : std::size_t { kA = 0, kB, kM, kN, kT1, kR1, kT2, kR2, kUe, kGiantUnknowns };

/// Unknown ordering of the Sagnac (even-mode) system.
enum SagnacUnknown : std::size_t { kAt = 0, kBt, kT1t, kT2t, kUet, kSagnacUnknowns };

struct FullSolution {
    cdouble A, B, M, N;  // inter-point amplitudes (g: A right, B left; f: M right, N left)
    cdouble t1, r1, t2, r2;
    cdouble u_e;
    double max_residual = 0;  // max_i |(A x - b)_i| of the assembled system
};

struct SagnacSolution {
    cdouble A_tilde, B_tilde;
    cdouble t1_tilde, t2_tilde;
    cdouble u_e;
    double max_residual = 0;
};

LinearSystem assemble_giant_system(const ModelParams& params, double delta);
FullSolution solve_giant(const ModelParams& params, double delta);

LinearSystem assemble_sagnac_system(const ModelParams& params, double delta);
SagnacSolution solve_sagnac(const ModelParams& params, double delta);

/// The matching ansatz references every wave to x = 0, whereas the closed
/// forms quote r1 relative to the incident wave at the first coupling point
/// and t2, r2 with the corresponding half-phase offsets.  Converts the raw
/// solver amplitudes (t1, r1, t2, r2) to the closed-form convention:
///   r1 * e^{i phi1},  t2 * e^{i (phi1 - phi2)/2},  r2 * e^{i (phi1 + phi2)/2}.
/// Moduli are unchanged.
std::array<cdouble, 4> reference_plane_map(const FullSolution& solution, const ModelParams& params);

}  // namespace gls

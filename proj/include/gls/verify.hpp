#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gls/lattice.hpp"
#include "gls/model.hpp"

namespace gls {

struct RandomDraw {
    ModelParams params;
    double delta = 0;
};

/// gamma1 in (0, 10], gamma2 in [0, 10], phi1 and phi2 in [-4 pi, 4 pi],
/// delta in [-50, 50], gamma_loss in [0, 2] (0 when lossless).
RandomDraw random_draw(std::mt19937_64& rng, bool lossless = false);

/// max_i |a_i - b_i| / max_i |b_i|
double relative_deviation(const std::vector<cdouble>& a, const std::vector<cdouble>& b);

struct OracleReport {
    std::size_t draws = 0;
    std::size_t singular = 0;           // skipped draws (no solution)
    double max_rel_dev = 0;             // closed form vs nine-unknown solve
    double max_rel_dev_sagnac = 0;      // closed form vs even-mode solve
    double max_residual = 0;            // of the assembled systems
    double max_unitarity = 0;           // |T1 + R1 + Tc - 1| with gamma_loss = 0
    double max_unitarity_sagnac = 0;    // |T1~ + Tc~ - 1| with gamma_loss = 0
    double max_t2_r2 = 0;               // ||t2| - |r2||
    double max_Tc = 0;                  // over the lossless draws
};

/// Evaluates every draw with its own loss for the oracle comparison and
/// again with gamma_loss = 0 for the conservation checks.
OracleReport run_oracle_suite(std::size_t draws, std::uint64_t seed);

struct LatticeCase {
    std::string name;
    LatticeScenario (*scenario)(double sigma);
};

/// optimum, total-reflection, fipt
std::vector<LatticeCase> lattice_cases();

struct LatticeSweepRow {
    std::string name;
    double sigma = 0;
    std::size_t n_sites = 0;
    LatticeComparison comparison;
};

inline constexpr double kLatticeTolerance = 0.03;
inline constexpr double kLatticeSigmas[] = {20.0, 40.0, 80.0};

struct LatticeCaseVerdict {
    std::string name;
    double dev_at_40 = 0;
    double max_norm_drift = 0;
    bool monotone = false;
    bool pass = false;
};

std::vector<LatticeSweepRow> run_lattice_suite();
/// Deviation at sigma = 40 <= 0.03, deviation non-increasing over
/// sigma = 20, 40, 80 (1e-9 slack), norm drift <= 1e-8.
std::vector<LatticeCaseVerdict> judge_lattice_suite(const std::vector<LatticeSweepRow>& rows);

}  // namespace gls

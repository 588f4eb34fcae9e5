#include <numbers>
#include <random>

#include "gls/boundary.hpp"
#include "helpers.hpp"

using namespace gls;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
const cd I{0, 1};

namespace {

void check_mapped(const ModelParams& p, double delta, double tol)
{
    const auto raw = solve_giant(p, delta);
    const auto m = reference_plane_map(raw, p);
    const auto c = giant_lambda_amplitudes(p, delta);
    CHECK_NEAR(m[0], c.t1, tol);
    CHECK_NEAR(m[1], c.r1, tol);
    CHECK_NEAR(m[2], c.t2, tol);
    CHECK_NEAR(m[3], c.r2, tol);
    CHECK(raw.max_residual <= 1e-12);
}

}  // namespace

TEST_CASE("zero phases solved by hand")
{
    const auto s = solve_giant({1, 1, 0, 0, 0}, 0.0);
    CHECK_NEAR(s.A, cd(0.75, 0), 1e-14);
    CHECK_NEAR(s.B, cd(-0.25, 0), 1e-14);
    CHECK_NEAR(s.M, cd(-0.25, 0), 1e-14);
    CHECK_NEAR(s.N, cd(-0.25, 0), 1e-14);
    CHECK_NEAR(s.t1, cd(0.5, 0), 1e-14);
    CHECK_NEAR(s.r1, cd(-0.5, 0), 1e-14);
    CHECK_NEAR(s.t2, cd(-0.5, 0), 1e-14);
    CHECK_NEAR(s.r2, cd(-0.5, 0), 1e-14);
    CHECK_NEAR(s.u_e, -0.25 * I, 1e-14);

    const auto sys = assemble_giant_system({1, 1, 0, 0, 0}, 0.0);
    const std::vector<cd> x{s.A, s.B, s.M, s.N, s.t1, s.r1, s.t2, s.r2, s.u_e};
    for (double r : residuals(sys.matrix, x, sys.rhs)) CHECK(r <= 1e-14);
}

TEST_CASE("decoupled f-channel")
{
    const auto s = solve_giant({1.5, 0, 0.4, -0.8, 0.1}, 0.7);
    CHECK(std::abs(s.M) <= 1e-15);
    CHECK(std::abs(s.N) <= 1e-15);
    CHECK(std::abs(s.t2) <= 1e-15);
    CHECK(std::abs(s.r2) <= 1e-15);
}

TEST_CASE("generic point")
{
    check_mapped({1, 2, 0.7, -1.1, 0}, 0.3, 1e-10);
    check_mapped({1, 2, 0.7, -1.1, 0.4}, -2.3, 1e-10);
}

TEST_CASE("system shape")
{
    const auto sys = assemble_giant_system({1, 2, 0.7, -1.1, 0}, 0.3);
    CHECK(sys.matrix.size() == kGiantUnknowns);
    CHECK(sys.rhs.size() == kGiantUnknowns);
    const auto ss = assemble_sagnac_system({1, 2, 0.7, -1.1, 0}, 0.3);
    CHECK(ss.matrix.size() == kSagnacUnknowns);
}

TEST_CASE("sagnac solve")
{
    auto s = solve_sagnac({1, 1, 0, 0, 0}, 0.0);
    CHECK_NEAR(s.t2_tilde, cd(-1, 0), 1e-14);
    CHECK_NEAR(s.t1_tilde, cd(0, 0), 1e-14);

    s = solve_sagnac({1, 1, pi, 0.3, 0}, 0.8);
    CHECK(std::abs(s.t2_tilde) <= 1e-14);

    const ModelParams p{1, 0.5, 0.3, -0.9, 0};
    s = solve_sagnac(p, 1.2);
    const auto c = sagnac_amplitudes(p, 1.2);
    CHECK_NEAR(s.t1_tilde, c.t1_tilde, 1e-10);
    CHECK_NEAR(s.t2_tilde, c.t2_tilde, 1e-10);
    CHECK(s.max_residual <= 1e-12);
}

TEST_CASE("random oracle agreement and solver unitarity")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const ModelParams p{10 * (1 - u(rng)), 10 * u(rng), -4 * pi + 8 * pi * u(rng), -4 * pi + 8 * pi * u(rng),
                            0};
        const double d = -50 + 100 * u(rng);
        const auto raw = solve_giant(p, d);
        const double total = std::norm(raw.t1) + std::norm(raw.r1) + std::norm(raw.t2) + std::norm(raw.r2);
        CHECK(std::abs(total - 1.0) <= 1e-10);
        const double scale = std::max({std::abs(raw.t1), std::abs(raw.r1), std::abs(raw.t2), std::abs(raw.r2)});
        const auto m = reference_plane_map(raw, p);
        const auto c = giant_lambda_amplitudes(p, d);
        CHECK(std::abs(m[0] - c.t1) <= 1e-10 * scale);
        CHECK(std::abs(m[1] - c.r1) <= 1e-10 * scale);
        CHECK(std::abs(m[2] - c.t2) <= 1e-10 * scale);
        CHECK(std::abs(m[3] - c.r2) <= 1e-10 * scale);
        CHECK(raw.max_residual <= 1e-12);
    }
}

TEST_CASE("reference map keeps moduli")
{
    const ModelParams p{1, 2, 0.7, -1.1, 0};
    const auto raw = solve_giant(p, 0.3);
    const auto m = reference_plane_map(raw, p);
    CHECK_NEAR(std::abs(m[1]), std::abs(raw.r1), 1e-15);
    CHECK_NEAR(std::abs(m[2]), std::abs(raw.t2), 1e-15);
    CHECK_NEAR(std::abs(m[3]), std::abs(raw.r2), 1e-15);
    CHECK(m[0] == raw.t1);
}

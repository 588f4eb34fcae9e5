#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gls {

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Small square complex matrix, row-major.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    value_type& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const value_type& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    std::vector<value_type> multiply(std::span<const value_type> x) const;

    /// Largest entry modulus.
    double max_abs() const;

private:
    std::size_t n_ = 0;
    std::vector<value_type> data_;
};

inline constexpr std::size_t kMaxDenseSize = 16;

/// Gaussian elimination with partial (row) pivoting.  Throws
/// SingularMatrixError when a pivot falls below 1e-14 times the largest
/// initial entry, std::invalid_argument on shape problems.
std::vector<std::complex<double>> solve_dense(const ComplexMatrix& matrix,
                                              std::span<const std::complex<double>> rhs);

/// Per-row |(A x - b)_i|.
std::vector<double> residuals(const ComplexMatrix& matrix, std::span<const std::complex<double>> x,
                              std::span<const std::complex<double>> rhs);

}  // namespace gls

#include "gls/dense_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace gls {

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<ComplexMatrix::value_type> ComplexMatrix::multiply(std::span<const value_type> x) const
{
    if (x.size() != n_) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<value_type> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        value_type acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<std::complex<double>> solve_dense(const ComplexMatrix& matrix,
                                              std::span<const std::complex<double>> rhs)
{
    const std::size_t n = matrix.size();
    if (n == 0 || n > kMaxDenseSize) throw std::invalid_argument("solve_dense: size must be in [1, 16]");
    if (rhs.size() != n) throw std::invalid_argument("solve_dense: rhs dimension mismatch");

    const double threshold = 1e-14 * matrix.max_abs();
    ComplexMatrix a = matrix;
    std::vector<std::complex<double>> b(rhs.begin(), rhs.end());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (!(best >= threshold) || best == 0.0) {
            std::ostringstream msg;
            msg << "solve_dense: singular matrix (pivot " << best << " at column " << k << ")";
            throw SingularMatrixError(msg.str());
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto factor = a(i, k) / a(k, k);
            if (factor == 0.0) continue;
            a(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }

    std::vector<std::complex<double>> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        auto acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= a(ii, j) * x[j];
        x[ii] = acc / a(ii, ii);
    }
    return x;
}

std::vector<double> residuals(const ComplexMatrix& matrix, std::span<const std::complex<double>> x,
                              std::span<const std::complex<double>> rhs)
{
    const auto ax = matrix.multiply(x);
    if (rhs.size() != ax.size()) throw std::invalid_argument("residuals: rhs dimension mismatch");
    std::vector<double> r(ax.size());
    for (std::size_t i = 0; i < ax.size(); ++i) r[i] = std::abs(ax[i] - rhs[i]);
    return r;
}

}  // namespace gls

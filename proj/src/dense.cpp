#include "fde/dense.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace fde {

std::size_t dense_cap()
{
    const char* env = std::getenv("FDE_DENSE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultDenseCap;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw InvalidArgument(std::string("FDE_DENSE_CAP is not a positive integer: ") + env);
    }
    return static_cast<std::size_t>(v);
}

void check_dense_cap(std::size_t order)
{
    const std::size_t cap = dense_cap();
    if (order > cap) {
        throw DenseCapExceeded("dense order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    }
}

DenseMatrix balance(const DenseMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw InvalidArgument("balance needs a square matrix");
    }
    DenseMatrix b = a;
    const Eigen::Index n = b.rows();
    constexpr double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j != i) {
                    c += std::abs(b(j, i));
                    r += std::abs(b(i, j));
                }
            }
            if (c == 0.0 || r == 0.0) {
                continue;
            }
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                b.row(i) /= f;
                b.col(i) *= f;
            }
        }
    }
    return b;
}

ComplexSpectrum dense_eigenvalues(const DenseMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw InvalidArgument("dense_eigenvalues needs a square matrix");
    }
    check_dense_cap(static_cast<std::size_t>(a.rows()));
    if (!a.allFinite()) {
        throw NumericalFailure("dense_eigenvalues: non-finite entries");
    }
    ComplexSpectrum out;
    if (a.rows() == 0) {
        return out;
    }
    Eigen::EigenSolver<DenseMatrix> solver(balance(a), false);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("dense_eigenvalues: QR iteration did not converge");
    }
    const auto& ev = solver.eigenvalues();
    out.values.assign(ev.data(), ev.data() + ev.size());
    return out;
}

double dense_condition_number(const DenseMatrix& a)
{
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw InvalidArgument("dense_condition_number needs a nonempty square matrix");
    }
    check_dense_cap(static_cast<std::size_t>(a.rows()));
    const DenseMatrix ata = a.transpose() * a;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(ata, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("dense_condition_number: symmetric eigensolve failed");
    }
    const auto& ev = solver.eigenvalues();  // ascending
    const double smax = std::sqrt(std::max(ev(ev.size() - 1), 0.0));
    const double smin = std::sqrt(std::max(ev(0), 0.0));
    if (!(smin >= 1e-14 * smax) || smax == 0.0) {
        throw SingularOperator("dense_condition_number: matrix is numerically singular");
    }
    return smax / smin;
}

}  // namespace fde

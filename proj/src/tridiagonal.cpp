#include "fde/tridiagonal.hpp"

#include "fde/errors.hpp"

#include <cmath>
#include <string>

namespace fde {

TridiagonalOperator::TridiagonalOperator(std::vector<double> sub, std::vector<double> diag,
                                         std::vector<double> sup)
    : sub_(std::move(sub)), diag_(std::move(diag)), sup_(std::move(sup))
{
    const std::size_t n = diag_.size();
    if (n == 0 || sub_.size() + 1 != n || sup_.size() + 1 != n) {
        throw InvalidArgument("tridiagonal needs diag of size n and off-diagonals of size n-1");
    }
    upper_.assign(n > 1 ? n - 1 : 0, 0.0);
    pivot_.assign(n, 0.0);
    double p = diag_[0];
    for (std::size_t i = 0;; ++i) {
        if (std::abs(p) < 1e-14) {
            throw SingularOperator("Thomas elimination hit a zero pivot at row " + std::to_string(i));
        }
        pivot_[i] = p;
        if (i + 1 == n) {
            break;
        }
        upper_[i] = sup_[i] / p;
        p = diag_[i + 1] - sub_[i] * upper_[i];
    }
}

std::vector<double> TridiagonalOperator::apply(std::span<const double> v) const
{
    const std::size_t n = size();
    if (v.size() != n) {
        throw InvalidArgument("tridiagonal apply size mismatch");
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = diag_[i] * v[i];
        if (i > 0) {
            s += sub_[i - 1] * v[i - 1];
        }
        if (i + 1 < n) {
            s += sup_[i] * v[i + 1];
        }
        out[i] = s;
    }
    return out;
}

std::vector<double> TridiagonalOperator::solve(std::span<const double> b) const
{
    const std::size_t n = size();
    if (b.size() != n) {
        throw InvalidArgument("tridiagonal solve size mismatch");
    }
    std::vector<double> x(n);
    x[0] = b[0] / pivot_[0];
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = (b[i] - sub_[i - 1] * x[i - 1]) / pivot_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= upper_[i] * x[i + 1];
    }
    return x;
}

Eigen::MatrixXd TridiagonalOperator::dense() const
{
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = diag_[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            a(i + 1, i) = sub_[static_cast<std::size_t>(i)];
            a(i, i + 1) = sup_[static_cast<std::size_t>(i)];
        }
    }
    return a;
}

std::vector<double> thomas_solve(const TridiagonalOperator& a, std::span<const double> b)
{
    return a.solve(b);
}

}  // namespace fde

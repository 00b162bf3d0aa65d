#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fde {

namespace detail {
class RealFft;
}

/// Real n x n Toeplitz matrix stored by its first column and first row.
///
/// Products are computed in O(n log n) by embedding the matrix in a circulant
/// of order 2n whose spectrum is computed once at construction. The operator is
/// immutable; `apply` and `apply_transpose` may be called concurrently.
class ToeplitzOperator {
public:
    ToeplitzOperator(std::vector<double> first_column, std::vector<double> first_row);

    std::size_t size() const noexcept { return column_.size(); }
    const std::vector<double>& first_column() const noexcept { return column_; }
    const std::vector<double>& first_row() const noexcept { return row_; }

    /// Entry t_{i-j}.
    double entry(std::size_t i, std::size_t j) const noexcept
    {
        return i >= j ? column_[i - j] : row_[j - i];
    }

    std::vector<double> apply(std::span<const double> v) const;
    std::vector<double> apply_transpose(std::span<const double> v) const;
    void apply(std::span<const double> v, std::span<double> out) const;
    void apply_transpose(std::span<const double> v, std::span<double> out) const;

    ToeplitzOperator transposed() const { return {row_, column_}; }

    Eigen::MatrixXd dense() const;

private:
    void multiply(std::span<const double> v, std::span<double> out, bool transpose) const;

    std::vector<double> column_;
    std::vector<double> row_;
    std::shared_ptr<const detail::RealFft> fft_;
    std::vector<std::complex<double>> spectrum_;  // of the 2n circulant embedding
};

std::vector<double> toeplitz_matvec(const ToeplitzOperator& t, std::span<const double> v);

}  // namespace fde

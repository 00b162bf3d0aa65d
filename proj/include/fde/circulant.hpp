#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fde/toeplitz.hpp"

namespace fde {

/// Real circulant matrix C = F^* diag(eigenvalues) F, with eigenvalues the DFT of the first column.
class CirculantOperator {
public:
    explicit CirculantOperator(std::vector<double> first_column);

    std::size_t size() const noexcept { return column_.size(); }
    const std::vector<double>& first_column() const noexcept { return column_; }
    /// Full length-n spectrum.
    std::vector<std::complex<double>> eigenvalues() const;

    std::vector<double> apply(std::span<const double> v) const;
    /// Throws SingularOperator if an eigenvalue modulus is below 1e-14.
    std::vector<double> apply_inverse(std::span<const double> v) const;

    /// First column of the transposed circulant.
    std::vector<double> transposed_column() const;

    Eigen::MatrixXd dense() const;

private:
    std::vector<double> column_;
    std::shared_ptr<const detail::RealFft> fft_;
    std::vector<std::complex<double>> spectrum_;  // half spectrum of length n/2+1
};

/// Strang circulant of a Toeplitz matrix: copies the central band and wraps it.
/// For even n the k = n/2 entry is (t_{n/2} + t_{-n/2}) / 2.
CirculantOperator strang_circulant(const ToeplitzOperator& t);

}  // namespace fde

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace fde {

using DenseMatrix = Eigen::MatrixXd;

struct ComplexSpectrum {
    std::vector<std::complex<double>> values;
};

inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Largest order accepted by dense routines; FDE_DENSE_CAP overrides the default.
std::size_t dense_cap();

/// Throws DenseCapExceeded if `order` is above dense_cap().
void check_dense_cap(std::size_t order);

/// Diagonal similarity D^{-1} A D with power-of-two D that roughly equalizes row and column norms.
DenseMatrix balance(const DenseMatrix& a);

/// All eigenvalues of a real square matrix (balancing, Hessenberg reduction, shifted QR).
/// Throws NumericalFailure when the QR iteration does not converge.
ComplexSpectrum dense_eigenvalues(const DenseMatrix& a);

/// sigma_max / sigma_min from the extreme eigenvalues of A^T A.
/// Throws SingularOperator if sigma_min < 1e-14 sigma_max.
double dense_condition_number(const DenseMatrix& a);

}  // namespace fde

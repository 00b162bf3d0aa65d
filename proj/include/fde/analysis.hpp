#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fde/dense.hpp"
#include "fde/discretization.hpp"
#include "fde/krylov.hpp"
#include "fde/preconditioners.hpp"

namespace fde {

inline constexpr std::uint64_t kAnalysisSeed = 0xFDE;

/// Columns op(e_j), j = 0..n-1. Throws DenseCapExceeded above dense_cap().
DenseMatrix materialize(const LinearOperator& op, std::size_t n);

/// Dense P^{-1} M.
DenseMatrix materialize_preconditioned(const FdeSystem1D& sys, const Preconditioner& p);
DenseMatrix materialize_preconditioned(const FdeSystem2D& sys, const Preconditioner& p);

struct Circle {
    std::complex<double> center;
    double radius = 0.0;
    /// Indices (into the input) of the 1 to 3 points that determine the circle.
    std::vector<std::size_t> support;
};

/// Minimal enclosing circle of points in the plane (Welzl, randomized incremental form).
/// The input order is shuffled with a generator seeded by `seed`, so results are reproducible.
Circle smallest_enclosing_circle(std::span<const std::complex<double>> points, std::uint64_t seed = kAnalysisSeed);

struct SpectrumReport {
    std::vector<std::complex<double>> eigenvalues;
    std::complex<double> center;
    double radius = 0.0;
    double kappa = 1.0;
    std::vector<std::complex<double>> scaled_eigenvalues;  // eigenvalues / center
    std::vector<std::size_t> support;
};

/// Eigenvalues, their enclosing circle, lambda / c0 and the condition number.
/// Throws NumericalFailure when the circle center is zero.
SpectrumReport spectrum_report(const DenseMatrix& a, std::uint64_t seed = kAnalysisSeed);

}  // namespace fde

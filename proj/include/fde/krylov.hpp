#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fde {

using LinearOperator = std::function<std::vector<double>(std::span<const double>)>;

struct GmresConfig {
    double rel_tolerance = 1e-7;
    /// Defaults to the system order.
    std::optional<std::size_t> max_iterations;
};

struct SolveStats {
    std::size_t iterations = 0;
    /// ||P^{-1}(b - A x_k)|| / ||P^{-1} b|| for k = 0..iterations.
    std::vector<double> residual_history;
    bool converged = false;
};

struct GmresResult {
    std::vector<double> x;
    SolveStats stats;
};

/// Full (non-restarted) GMRES on P^{-1} A x = P^{-1} b using modified Gram-Schmidt with
/// selective reorthogonalization and Givens rotations for the least-squares problem.
/// Stops once the preconditioned residual falls to rel_tolerance * ||P^{-1} b||.
/// Throws NumericalFailure on non-finite values.
GmresResult gmres(const LinearOperator& apply_a, const LinearOperator& apply_pinv, std::span<const double> b,
                  std::span<const double> x0, const GmresConfig& cfg = {});

}  // namespace fde

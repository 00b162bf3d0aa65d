#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fde {

/// Fractional differentiation order, restricted to the open interval (1, 2).
class FractionalOrder {
public:
    explicit FractionalOrder(double value);

    double value() const noexcept { return value_; }

    friend bool operator==(FractionalOrder, FractionalOrder) = default;

private:
    double value_;
};

enum class Stencil { FirstOrder, SecondOrder };

/// Selects the symbol family: first order uses g/p, second order uses w/q.
struct SymbolSpec {
    FractionalOrder alpha;
    Stencil stencil;
};

/// Grünwald-type weight sequence, indices 0..kmax.
struct CoefficientSequence {
    FractionalOrder alpha;
    std::vector<double> values;
};

/// g_k = (-1)^k binom(alpha, k) via g_k = g_{k-1} (1 - (alpha+1)/k).
CoefficientSequence grunwald_coeffs(FractionalOrder alpha, std::size_t kmax);

/// Weighted-shifted weights w_0 = (alpha/2) g_0, w_k = (alpha/2) g_k + ((2-alpha)/2) g_{k-1}.
CoefficientSequence shifted_weights(FractionalOrder alpha, std::size_t kmax);

/// Principal-branch (1 - e^{i theta})^alpha, evaluated in polar form so that
/// small |theta| does not suffer from cancellation.
std::complex<double> one_minus_exp_pow(double alpha, double theta);

/// Symbol of the first-order Grünwald Toeplitz matrix: -e^{-i theta} (1 - e^{i theta})^alpha.
std::complex<double> eval_g(FractionalOrder alpha, double theta);

/// Symbol of the second-order Toeplitz matrix:
/// -((2 - alpha (1 - e^{-i theta})) / 2) (1 - e^{i theta})^alpha.
std::complex<double> eval_w(FractionalOrder alpha, double theta);

/// Real even symbol p(theta) = g(theta) + g(-theta) or q(theta) = w(theta) + w(-theta).
/// Throws NumericalFailure if the imaginary residue exceeds 1e-10.
double eval_symbol(const SymbolSpec& spec, double theta);

/// q_alpha(theta1) + s_over_r * q_beta(theta2).
double eval_symbol_2d(FractionalOrder alpha, FractionalOrder beta, double s_over_r,
                      double theta1, double theta2);

}  // namespace fde

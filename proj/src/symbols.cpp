#include "fde/symbols.hpp"

#include "fde/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fde {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta)
{
    if (!(theta >= -kPi - 1e-12 && theta <= kPi + 1e-12)) {
        throw InvalidArgument("theta must lie in [-pi, pi], got " + std::to_string(theta));
    }
}

}  // namespace

FractionalOrder::FractionalOrder(double value) : value_(value)
{
    if (!(value > 1.0 && value < 2.0)) {
        throw InvalidArgument("fractional order must lie in (1, 2), got " + std::to_string(value));
    }
}

CoefficientSequence grunwald_coeffs(FractionalOrder alpha, std::size_t kmax)
{
    const double a = alpha.value();
    std::vector<double> g(kmax + 1);
    g[0] = 1.0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        g[k] = g[k - 1] * (1.0 - (a + 1.0) / static_cast<double>(k));
    }
    return {alpha, std::move(g)};
}

CoefficientSequence shifted_weights(FractionalOrder alpha, std::size_t kmax)
{
    const double a = alpha.value();
    const auto g = grunwald_coeffs(alpha, kmax).values;
    std::vector<double> w(kmax + 1);
    w[0] = 0.5 * a * g[0];
    for (std::size_t k = 1; k <= kmax; ++k) {
        w[k] = 0.5 * a * g[k] + 0.5 * (2.0 - a) * g[k - 1];
    }
    return {alpha, std::move(w)};
}

std::complex<double> one_minus_exp_pow(double alpha, double theta)
{
    if (theta == 0.0) {
        return {0.0, 0.0};
    }
    // 1 - e^{i t} = 2|sin(t/2)| e^{i (t - sgn(t) pi) / 2}
    const double modulus = 2.0 * std::abs(std::sin(0.5 * theta));
    const double arg = 0.5 * (theta - std::copysign(kPi, theta));
    return std::polar(std::pow(modulus, alpha), alpha * arg);
}

std::complex<double> eval_g(FractionalOrder alpha, double theta)
{
    check_theta(theta);
    const std::complex<double> shift = std::polar(1.0, -theta);
    return -shift * one_minus_exp_pow(alpha.value(), theta);
}

std::complex<double> eval_w(FractionalOrder alpha, double theta)
{
    check_theta(theta);
    const double a = alpha.value();
    const std::complex<double> one_minus_conj = 1.0 - std::polar(1.0, -theta);
    const std::complex<double> factor = 0.5 * (2.0 - a * one_minus_conj);
    return -factor * one_minus_exp_pow(a, theta);
}

double eval_symbol(const SymbolSpec& spec, double theta)
{
    const std::complex<double> sum = spec.stencil == Stencil::FirstOrder
                                         ? eval_g(spec.alpha, theta) + eval_g(spec.alpha, -theta)
                                         : eval_w(spec.alpha, theta) + eval_w(spec.alpha, -theta);
    if (std::abs(sum.imag()) > 1e-10) {
        throw NumericalFailure("symbol has imaginary residue " + std::to_string(sum.imag()));
    }
    return sum.real();
}

double eval_symbol_2d(FractionalOrder alpha, FractionalOrder beta, double s_over_r,
                      double theta1, double theta2)
{
    if (!(s_over_r > 0.0)) {
        throw InvalidArgument("s/r must be positive");
    }
    return eval_symbol({alpha, Stencil::SecondOrder}, theta1) +
           s_over_r * eval_symbol({beta, Stencil::SecondOrder}, theta2);
}

}  // namespace fde

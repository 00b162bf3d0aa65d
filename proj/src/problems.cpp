#include "fde/problems.hpp"

#include "fde/errors.hpp"

#include <cmath>

namespace fde {

void validate(const Grid1D& g)
{
    if (g.n < 1 || g.M < 1 || !(g.R > g.L) || !(g.ht > 0.0)) {
        throw InvalidArgument("invalid 1D grid");
    }
}

void validate(const Grid2D& g)
{
    if (g.n1 < 1 || g.n2 < 1 || g.M < 1 || !(g.R1 > g.L1) || !(g.R2 > g.L2) || !(g.ht > 0.0)) {
        throw InvalidArgument("invalid 2D grid");
    }
}

double gamma_function(double z)
{
    if (!(z > 0.0)) {
        throw InvalidArgument("gamma_function needs z > 0");
    }
    return std::tgamma(z);
}

Problem1D example1(FractionalOrder alpha)
{
    const double a = alpha.value();
    const double ga = gamma_function(3.0 - a);
    Problem1D p{
        .id = "ex1",
        .alpha = alpha,
        .L = 0.0,
        .R = 2.0,
        .d_plus = [a, ga](double x, double) { return ga * std::pow(x, a); },
        .d_minus = [a, ga](double x, double) { return ga * std::pow(2.0 - x, a); },
        .source =
            [a](double x, double t) {
                const double y = 2.0 - x;
                return -32.0 * std::exp(-t) *
                       (x * x + y * y * (8.0 + x * x) / 8.0 - 3.0 * (x * x * x + y * y * y) / (3.0 - a) +
                        3.0 * (std::pow(x, 4) + std::pow(y, 4)) / ((4.0 - a) * (3.0 - a)));
            },
        .exact = [](double x, double t) { return 4.0 * std::exp(-t) * x * x * (2.0 - x) * (2.0 - x); },
        .u0 = [](double x) { return 4.0 * x * x * (2.0 - x) * (2.0 - x); },
        .make_grid =
            [](std::size_t n_plus_1) {
                if (n_plus_1 < 2 || n_plus_1 % 2 != 0) {
                    throw InvalidArgument("ex1 needs an even n1+1 >= 2");
                }
                Grid1D g;
                g.L = 0.0;
                g.R = 2.0;
                g.n = n_plus_1 - 1;
                g.ht = g.hx();
                g.M = n_plus_1 / 2;
                return g;
            },
    };
    return p;
}

double f_gamma(double gamma, double x, double y)
{
    const double g = gamma;
    const double px = 8.0 * std::pow(x, 2.0 - g) - 24.0 * std::pow(x, 3.0 - g) / (3.0 - g) +
                      24.0 * std::pow(x, 4.0 - g) / ((4.0 - g) * (3.0 - g));
    return px * std::pow(1.0 + x, g) * (1.0 + y) * (1.0 + y) * y * y * (2.0 - y) * (2.0 - y);
}

Problem2D example2d(FractionalOrder alpha, FractionalOrder beta, std::string id)
{
    const double a = alpha.value();
    const double b = beta.value();
    const double ga = gamma_function(3.0 - a);
    const double gb = gamma_function(3.0 - b);
    auto bump = [](double x) { return x * x * (2.0 - x) * (2.0 - x); };
    Problem2D p{
        .id = std::move(id),
        .alpha = alpha,
        .beta = beta,
        .L1 = 0.0,
        .R1 = 2.0,
        .L2 = 0.0,
        .R2 = 2.0,
        .d_plus = [a, ga](double x, double y, double) { return ga * std::pow(1.0 + x, a) * (1.0 + y) * (1.0 + y); },
        .d_minus = [a, ga](double x, double y, double) { return ga * std::pow(3.0 - x, a) * (3.0 - y) * (3.0 - y); },
        .e_plus = [b, gb](double x, double y, double) { return gb * (1.0 + x) * (1.0 + x) * std::pow(1.0 + y, b); },
        .e_minus = [b, gb](double x, double y, double) { return gb * (3.0 - x) * (3.0 - x) * std::pow(3.0 - y, b); },
        .source =
            [a, b, bump](double x, double y, double t) {
                return -16.0 * std::exp(-t) *
                       (bump(x) * bump(y) + f_gamma(a, x, y) + f_gamma(a, 2.0 - x, 2.0 - y) + f_gamma(b, y, x) +
                        f_gamma(b, 2.0 - y, 2.0 - x));
            },
        .exact = [bump](double x, double y, double t) { return 16.0 * std::exp(-t) * bump(x) * bump(y); },
        .u0 = [bump](double x, double y) { return 16.0 * bump(x) * bump(y); },
        .make_grid =
            [](std::size_t n) {
                if (n < 1) {
                    throw InvalidArgument("2D examples need n >= 1");
                }
                Grid2D g;
                g.L1 = g.L2 = 0.0;
                g.R1 = g.R2 = 2.0;
                g.n1 = g.n2 = n;
                g.M = n;
                g.ht = 1.0 / static_cast<double>(n + 1);
                return g;
            },
    };
    return p;
}

Problem2D example2() { return example2d(FractionalOrder(1.8), FractionalOrder(1.6), "ex2"); }

Problem2D example3() { return example2d(FractionalOrder(1.8), FractionalOrder(1.2), "ex3"); }

Problem problem_by_id(const std::string& id, std::optional<double> alpha)
{
    if (id == "ex1") {
        if (!alpha) {
            throw InvalidArgument("ex1 needs --alpha");
        }
        return example1(FractionalOrder(*alpha));
    }
    if (id == "ex2") {
        return example2();
    }
    if (id == "ex3") {
        return example3();
    }
    throw InvalidArgument("unknown problem id '" + id + "' (expected ex1, ex2 or ex3)");
}

}  // namespace fde

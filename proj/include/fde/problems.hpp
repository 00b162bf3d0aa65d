#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "fde/grid.hpp"
#include "fde/symbols.hpp"

namespace fde {

using Sampler1D = std::function<double(double x, double t)>;
using Sampler2D = std::function<double(double x, double y, double t)>;

struct Problem1D {
    std::string id;
    FractionalOrder alpha;
    double L;
    double R;
    Sampler1D d_plus;
    Sampler1D d_minus;
    Sampler1D source;
    Sampler1D exact;
    std::function<double(double x)> u0;
    /// Grid for a given size parameter, following the example's coupling of h_x, h_t and M.
    std::function<Grid1D(std::size_t)> make_grid;
};

struct Problem2D {
    std::string id;
    FractionalOrder alpha;
    FractionalOrder beta;
    double L1;
    double R1;
    double L2;
    double R2;
    Sampler2D d_plus;
    Sampler2D d_minus;
    Sampler2D e_plus;
    Sampler2D e_minus;
    Sampler2D source;
    Sampler2D exact;
    std::function<double(double x, double y)> u0;
    std::function<Grid2D(std::size_t)> make_grid;
};

using Problem = std::variant<Problem1D, Problem2D>;

/// Gamma function for z > 0.
double gamma_function(double z);

/// 1D problem on [0, 2] x [0, 1] with d_+ = Gamma(3-a) x^a, d_- = Gamma(3-a) (2-x)^a and
/// exact solution 4 e^{-t} x^2 (2-x)^2. make_grid(n1 + 1) sets h_x = h_t = 2/(n1+1), M = (n1+1)/2;
/// n1 + 1 must be even.
Problem1D example1(FractionalOrder alpha);

/// Helper of the 2D source terms.
double f_gamma(double gamma, double x, double y);

/// 2D problem on [0, 2]^2 with exact solution 16 e^{-t} x^2 (2-x)^2 y^2 (2-y)^2.
/// make_grid(n) sets n1 = n2 = M = n, h = 2/(n+1), h_t = 1/(M+1).
Problem2D example2d(FractionalOrder alpha, FractionalOrder beta, std::string id);
Problem2D example2();  // alpha = 1.8, beta = 1.6
Problem2D example3();  // alpha = 1.8, beta = 1.2

/// "ex1" (alpha required), "ex2", "ex3". Throws InvalidArgument otherwise.
Problem problem_by_id(const std::string& id, std::optional<double> alpha = std::nullopt);

}  // namespace fde

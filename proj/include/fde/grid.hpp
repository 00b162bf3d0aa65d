#pragma once

#include <cstddef>

namespace fde {

/// Uniform space-time grid on [L, R] x [0, M h_t]; nodes x_0 and x_{n+1} are boundary nodes.
struct Grid1D {
    double L = 0.0;
    double R = 1.0;
    std::size_t n = 1;  // interior points
    std::size_t M = 1;  // time steps
    double ht = 1.0;

    double hx() const noexcept { return (R - L) / static_cast<double>(n + 1); }
    double x(std::size_t i) const noexcept { return L + static_cast<double>(i) * hx(); }
    double t(std::size_t m) const noexcept { return static_cast<double>(m) * ht; }
    double final_time() const noexcept { return t(M); }
};

/// Tensor grid on [L1, R1] x [L2, R2]; unknowns are ordered x-fastest (i + n1 * j).
struct Grid2D {
    double L1 = 0.0;
    double R1 = 1.0;
    double L2 = 0.0;
    double R2 = 1.0;
    std::size_t n1 = 1;
    std::size_t n2 = 1;
    std::size_t M = 1;
    double ht = 1.0;

    double hx() const noexcept { return (R1 - L1) / static_cast<double>(n1 + 1); }
    double hy() const noexcept { return (R2 - L2) / static_cast<double>(n2 + 1); }
    double x(std::size_t i) const noexcept { return L1 + static_cast<double>(i) * hx(); }
    double y(std::size_t j) const noexcept { return L2 + static_cast<double>(j) * hy(); }
    double t(std::size_t m) const noexcept { return static_cast<double>(m) * ht; }
    double final_time() const noexcept { return t(M); }
    std::size_t size() const noexcept { return n1 * n2; }
};

/// Throws InvalidArgument unless n, M >= 1 and all steps are positive.
void validate(const Grid1D& g);
void validate(const Grid2D& g);

}  // namespace fde

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fde/dense.hpp"
#include "fde/grid.hpp"
#include "fde/problems.hpp"
#include "fde/symbols.hpp"
#include "fde/toeplitz.hpp"

namespace fde {

/// Lower-Hessenberg Grünwald matrix: first column -[c_1..c_n], first row -[c_1, c_0, 0, ...],
/// with c = g (first order) or w (second order).
ToeplitzOperator build_grunwald_toeplitz(FractionalOrder alpha, std::size_t n, Stencil stencil);

struct DiffusionField1D {
    std::vector<double> d_plus;
    std::vector<double> d_minus;
};

struct DiffusionField2D {
    std::vector<double> d_plus;
    std::vector<double> d_minus;
    std::vector<double> e_plus;
    std::vector<double> e_minus;
};

/// nu I + D_+ T + D_- T^T, with `h_alpha` = h_x^alpha used by the right-hand side.
class FdeSystem1D {
public:
    FdeSystem1D(FractionalOrder alpha, Stencil stencil, double nu, double h_alpha, DiffusionField1D field);

    std::size_t size() const noexcept { return field_.d_plus.size(); }
    FractionalOrder alpha() const noexcept { return alpha_; }
    Stencil stencil() const noexcept { return stencil_; }
    double nu() const noexcept { return nu_; }
    double h_alpha() const noexcept { return h_alpha_; }
    const DiffusionField1D& field() const noexcept { return field_; }
    const ToeplitzOperator& toeplitz() const noexcept { return t_; }

    std::vector<double> apply(std::span<const double> v) const;
    /// nu u_prev + h_x^alpha f.
    std::vector<double> rhs(std::span<const double> u_prev, std::span<const double> f) const;
    DenseMatrix dense() const;

private:
    FractionalOrder alpha_;
    Stencil stencil_;
    double nu_;
    double h_alpha_;
    DiffusionField1D field_;
    ToeplitzOperator t_;
};

/// (1/r) I + A_x + (s/r) A_y on an n1 x n2 grid ordered x-fastest, second-order stencil.
/// A_x = D_+ (I (x) S_a) + D_- (I (x) S_a^T), A_y = E_+ (S_b (x) I) + E_- (S_b^T (x) I).
class FdeSystem2D {
public:
    FdeSystem2D(FractionalOrder alpha, FractionalOrder beta, std::size_t n1, std::size_t n2, double r, double s,
                double hx_alpha, DiffusionField2D field);

    std::size_t n1() const noexcept { return n1_; }
    std::size_t n2() const noexcept { return n2_; }
    std::size_t size() const noexcept { return n1_ * n2_; }
    FractionalOrder alpha() const noexcept { return alpha_; }
    FractionalOrder beta() const noexcept { return beta_; }
    double r() const noexcept { return r_; }
    double s() const noexcept { return s_; }
    double s_over_r() const noexcept { return s_ / r_; }
    double hx_alpha() const noexcept { return hx_alpha_; }
    const DiffusionField2D& field() const noexcept { return field_; }
    const ToeplitzOperator& tx() const noexcept { return tx_; }
    const ToeplitzOperator& ty() const noexcept { return ty_; }

    std::vector<double> apply(std::span<const double> v) const;
    /// ((1/r) I - A_x - (s/r) A_y) u_prev + 2 h_x^alpha f_half.
    std::vector<double> rhs(std::span<const double> u_prev, std::span<const double> f_half) const;
    DenseMatrix dense() const;

private:
    // ax = A_x v, ay = A_y v
    void split_apply(std::span<const double> v, std::vector<double>& ax, std::vector<double>& ay) const;

    FractionalOrder alpha_;
    FractionalOrder beta_;
    std::size_t n1_;
    std::size_t n2_;
    double r_;
    double s_;
    double hx_alpha_;
    DiffusionField2D field_;
    ToeplitzOperator tx_;
    ToeplitzOperator ty_;
};

DiffusionField1D sample_field(const Problem1D& problem, const Grid1D& grid, double t);
DiffusionField2D sample_field(const Problem2D& problem, const Grid2D& grid, double t);

/// Interior samples of a function at time t.
std::vector<double> sample_interior(const Sampler1D& f, const Grid1D& grid, double t);
std::vector<double> sample_interior(const Sampler2D& f, const Grid2D& grid, double t);

/// nu = h_x^alpha / h_t.
FdeSystem1D assemble_1d(const Problem1D& problem, const Grid1D& grid, double t_m, Stencil stencil);
/// r = h_t / (2 h_x^alpha), s = h_t / (2 h_y^beta).
FdeSystem2D assemble_2d(const Problem2D& problem, const Grid2D& grid, double t_m);

std::vector<double> system_matvec_1d(const FdeSystem1D& sys, std::span<const double> v);
std::vector<double> system_matvec_2d(const FdeSystem2D& sys, std::span<const double> v);
std::vector<double> rhs_1d(const FdeSystem1D& sys, std::span<const double> u_prev, std::span<const double> f);
std::vector<double> rhs_2d(const FdeSystem2D& sys_prev, std::span<const double> u_prev,
                           std::span<const double> f_half);

}  // namespace fde

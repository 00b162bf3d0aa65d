#include "fde/discretization.hpp"

#include "fde/errors.hpp"

#include <cmath>
#include <string>

namespace fde {

namespace {

void check_size(std::size_t got, std::size_t want, const char* what)
{
    if (got != want) {
        throw InvalidArgument(std::string(what) + ": size " + std::to_string(got) + ", expected " +
                              std::to_string(want));
    }
}

void check_nonnegative(const std::vector<double>& v, const char* what)
{
    for (double x : v) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw InvalidArgument(std::string(what) + " must be finite and nonnegative");
        }
    }
}

}  // namespace

ToeplitzOperator build_grunwald_toeplitz(FractionalOrder alpha, std::size_t n, Stencil stencil)
{
    if (n < 1) {
        throw InvalidArgument("build_grunwald_toeplitz needs n >= 1");
    }
    const auto c = stencil == Stencil::FirstOrder ? grunwald_coeffs(alpha, n) : shifted_weights(alpha, n);
    std::vector<double> col(n);
    std::vector<double> row(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        col[k] = -c.values[k + 1];
    }
    row[0] = col[0];
    if (n > 1) {
        row[1] = -c.values[0];
    }
    return {std::move(col), std::move(row)};
}

FdeSystem1D::FdeSystem1D(FractionalOrder alpha, Stencil stencil, double nu, double h_alpha, DiffusionField1D field)
    : alpha_(alpha),
      stencil_(stencil),
      nu_(nu),
      h_alpha_(h_alpha),
      field_(std::move(field)),
      t_(build_grunwald_toeplitz(alpha, field_.d_plus.size(), stencil))
{
    check_size(field_.d_minus.size(), field_.d_plus.size(), "d_minus");
    check_nonnegative(field_.d_plus, "d_plus");
    check_nonnegative(field_.d_minus, "d_minus");
    if (!std::isfinite(nu_) || !std::isfinite(h_alpha_)) {
        throw InvalidArgument("nu and h^alpha must be finite");
    }
}

std::vector<double> FdeSystem1D::apply(std::span<const double> v) const
{
    const std::size_t n = size();
    check_size(v.size(), n, "system_matvec_1d");
    std::vector<double> tv(n);
    std::vector<double> ttv(n);
    t_.apply(v, tv);
    t_.apply_transpose(v, ttv);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = nu_ * v[i] + field_.d_plus[i] * tv[i] + field_.d_minus[i] * ttv[i];
    }
    return out;
}

std::vector<double> FdeSystem1D::rhs(std::span<const double> u_prev, std::span<const double> f) const
{
    const std::size_t n = size();
    check_size(u_prev.size(), n, "rhs_1d u_prev");
    check_size(f.size(), n, "rhs_1d f");
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = nu_ * u_prev[i] + h_alpha_ * f[i];
    }
    return b;
}

DenseMatrix FdeSystem1D::dense() const
{
    const DenseMatrix t = t_.dense();
    const auto n = static_cast<Eigen::Index>(size());
    DenseMatrix a = nu_ * DenseMatrix::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        a.row(i) += field_.d_plus[k] * t.row(i) + field_.d_minus[k] * t.col(i).transpose();
    }
    return a;
}

FdeSystem2D::FdeSystem2D(FractionalOrder alpha, FractionalOrder beta, std::size_t n1, std::size_t n2, double r,
                         double s, double hx_alpha, DiffusionField2D field)
    : alpha_(alpha),
      beta_(beta),
      n1_(n1),
      n2_(n2),
      r_(r),
      s_(s),
      hx_alpha_(hx_alpha),
      field_(std::move(field)),
      tx_(build_grunwald_toeplitz(alpha, n1, Stencil::SecondOrder)),
      ty_(build_grunwald_toeplitz(beta, n2, Stencil::SecondOrder))
{
    const std::size_t n = n1 * n2;
    check_size(field_.d_plus.size(), n, "d_plus");
    check_size(field_.d_minus.size(), n, "d_minus");
    check_size(field_.e_plus.size(), n, "e_plus");
    check_size(field_.e_minus.size(), n, "e_minus");
    check_nonnegative(field_.d_plus, "d_plus");
    check_nonnegative(field_.d_minus, "d_minus");
    check_nonnegative(field_.e_plus, "e_plus");
    check_nonnegative(field_.e_minus, "e_minus");
    if (!(r > 0.0) || !(s > 0.0) || !std::isfinite(r) || !std::isfinite(s)) {
        throw InvalidArgument("r and s must be positive");
    }
}

void FdeSystem2D::split_apply(std::span<const double> v, std::vector<double>& ax, std::vector<double>& ay) const
{
    const std::size_t n = size();
    check_size(v.size(), n, "system_matvec_2d");
    ax.assign(n, 0.0);
    ay.assign(n, 0.0);
    const auto& f = field_;

    std::vector<double> a(n1_);
    std::vector<double> b(n1_);
    for (std::size_t j = 0; j < n2_; ++j) {
        const auto line = v.subspan(j * n1_, n1_);
        tx_.apply(line, a);
        tx_.apply_transpose(line, b);
        for (std::size_t i = 0; i < n1_; ++i) {
            const std::size_t k = i + n1_ * j;
            ax[k] = f.d_plus[k] * a[i] + f.d_minus[k] * b[i];
        }
    }

    std::vector<double> line(n2_);
    a.resize(n2_);
    b.resize(n2_);
    for (std::size_t i = 0; i < n1_; ++i) {
        for (std::size_t j = 0; j < n2_; ++j) {
            line[j] = v[i + n1_ * j];
        }
        ty_.apply(line, a);
        ty_.apply_transpose(line, b);
        for (std::size_t j = 0; j < n2_; ++j) {
            const std::size_t k = i + n1_ * j;
            ay[k] = f.e_plus[k] * a[j] + f.e_minus[k] * b[j];
        }
    }
}

std::vector<double> FdeSystem2D::apply(std::span<const double> v) const
{
    std::vector<double> ax;
    std::vector<double> ay;
    split_apply(v, ax, ay);
    const double sr = s_over_r();
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = v[k] / r_ + ax[k] + sr * ay[k];
    }
    return out;
}

std::vector<double> FdeSystem2D::rhs(std::span<const double> u_prev, std::span<const double> f_half) const
{
    check_size(f_half.size(), size(), "rhs_2d f");
    std::vector<double> ax;
    std::vector<double> ay;
    split_apply(u_prev, ax, ay);
    const double sr = s_over_r();
    std::vector<double> b(u_prev.size());
    for (std::size_t k = 0; k < u_prev.size(); ++k) {
        b[k] = u_prev[k] / r_ - ax[k] - sr * ay[k] + 2.0 * hx_alpha_ * f_half[k];
    }
    return b;
}

DenseMatrix FdeSystem2D::dense() const
{
    const DenseMatrix sa = tx_.dense();
    const DenseMatrix sb = ty_.dense();
    const auto n1 = static_cast<Eigen::Index>(n1_);
    const auto n2 = static_cast<Eigen::Index>(n2_);
    const Eigen::Index n = n1 * n2;
    const double sr = s_over_r();
    DenseMatrix a = DenseMatrix::Identity(n, n) / r_;
    for (Eigen::Index j = 0; j < n2; ++j) {
        for (Eigen::Index i = 0; i < n1; ++i) {
            const Eigen::Index row = i + n1 * j;
            const auto k = static_cast<std::size_t>(row);
            for (Eigen::Index c = 0; c < n1; ++c) {
                a(row, c + n1 * j) += field_.d_plus[k] * sa(i, c) + field_.d_minus[k] * sa(c, i);
            }
            for (Eigen::Index l = 0; l < n2; ++l) {
                a(row, i + n1 * l) += sr * (field_.e_plus[k] * sb(j, l) + field_.e_minus[k] * sb(l, j));
            }
        }
    }
    return a;
}

DiffusionField1D sample_field(const Problem1D& problem, const Grid1D& grid, double t)
{
    return {sample_interior(problem.d_plus, grid, t), sample_interior(problem.d_minus, grid, t)};
}

DiffusionField2D sample_field(const Problem2D& problem, const Grid2D& grid, double t)
{
    return {sample_interior(problem.d_plus, grid, t), sample_interior(problem.d_minus, grid, t),
            sample_interior(problem.e_plus, grid, t), sample_interior(problem.e_minus, grid, t)};
}

std::vector<double> sample_interior(const Sampler1D& f, const Grid1D& grid, double t)
{
    std::vector<double> out(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        out[i] = f(grid.x(i + 1), t);
    }
    return out;
}

std::vector<double> sample_interior(const Sampler2D& f, const Grid2D& grid, double t)
{
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.n2; ++j) {
        for (std::size_t i = 0; i < grid.n1; ++i) {
            out[i + grid.n1 * j] = f(grid.x(i + 1), grid.y(j + 1), t);
        }
    }
    return out;
}

FdeSystem1D assemble_1d(const Problem1D& problem, const Grid1D& grid, double t_m, Stencil stencil)
{
    validate(grid);
    const double ha = std::pow(grid.hx(), problem.alpha.value());
    return {problem.alpha, stencil, ha / grid.ht, ha, sample_field(problem, grid, t_m)};
}

FdeSystem2D assemble_2d(const Problem2D& problem, const Grid2D& grid, double t_m)
{
    validate(grid);
    const double hxa = std::pow(grid.hx(), problem.alpha.value());
    const double hyb = std::pow(grid.hy(), problem.beta.value());
    return {problem.alpha,
            problem.beta,
            grid.n1,
            grid.n2,
            grid.ht / (2.0 * hxa),
            grid.ht / (2.0 * hyb),
            hxa,
            sample_field(problem, grid, t_m)};
}

std::vector<double> system_matvec_1d(const FdeSystem1D& sys, std::span<const double> v) { return sys.apply(v); }

std::vector<double> system_matvec_2d(const FdeSystem2D& sys, std::span<const double> v) { return sys.apply(v); }

std::vector<double> rhs_1d(const FdeSystem1D& sys, std::span<const double> u_prev, std::span<const double> f)
{
    return sys.rhs(u_prev, f);
}

std::vector<double> rhs_2d(const FdeSystem2D& sys_prev, std::span<const double> u_prev,
                           std::span<const double> f_half)
{
    return sys_prev.rhs(u_prev, f_half);
}

}  // namespace fde

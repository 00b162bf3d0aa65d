#include <gtest/gtest.h>

#include "fde/discretization.hpp"
#include "fde/errors.hpp"
#include "fde/problems.hpp"

#include <cmath>
#include <random>

using Eigen::MatrixXd;
using Eigen::VectorXd;
using fde::FractionalOrder;
using fde::Stencil;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0)
{
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = u(rng);
    }
    return v;
}

VectorXd as_eigen(const std::vector<double>& v) { return Eigen::Map<const VectorXd>(v.data(), v.size()); }

double rel_err(const std::vector<double>& got, const VectorXd& want)
{
    return (as_eigen(got) - want).norm() / std::max(want.norm(), 1e-300);
}

// Grünwald matrix typed out entry by entry: a(i, j) = -c_{i-j+1} for j <= i+1.
MatrixXd grunwald_dense(const std::vector<double>& c, std::size_t n)
{
    MatrixXd t = MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= std::min(i + 1, n - 1); ++j) {
            t(i, j) = -c[i + 1 - j];
        }
    }
    return t;
}

MatrixXd kron(const MatrixXd& a, const MatrixXd& b)
{
    MatrixXd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return k;
}

fde::FdeSystem1D system_1d(double alpha, Stencil st, double nu, std::vector<double> dp, std::vector<double> dm)
{
    return {FractionalOrder(alpha), st, nu, 1.0, {std::move(dp), std::move(dm)}};
}

}  // namespace

TEST(GrunwaldToeplitz, FirstOrderLayout)
{
    const auto t = fde::build_grunwald_toeplitz(FractionalOrder(1.5), 3, Stencil::FirstOrder);
    const std::vector<double> col{1.5, -0.375, -0.0625};
    const std::vector<double> row{1.5, -1.0, 0.0};
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(t.first_column()[k], col[k], 1e-15);
        EXPECT_NEAR(t.first_row()[k], row[k], 1e-15);
    }
}

TEST(GrunwaldToeplitz, NearlyBidiagonalCloseToOrderOne)
{
    const auto t = fde::build_grunwald_toeplitz(FractionalOrder(1.0001), 3, Stencil::FirstOrder);
    const MatrixXd d = t.dense();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i - j > 1 || j - i > 1) {
                EXPECT_LT(std::abs(d(i, j)), 2e-4);
            }
        }
    }
    EXPECT_LT(std::abs(t.first_column()[1]), 2e-4);  // -g_2 is the first entry off the bidiagonal
}

TEST(GrunwaldToeplitz, SecondOrderLayout)
{
    const auto w = fde::shifted_weights(FractionalOrder(1.5), 3).values;
    const auto t = fde::build_grunwald_toeplitz(FractionalOrder(1.5), 3, Stencil::SecondOrder);
    EXPECT_NEAR(t.first_column()[0], 0.875, 1e-15);
    EXPECT_NEAR(t.first_column()[1], 0.09375, 1e-15);
    EXPECT_NEAR(t.first_column()[2], -w[3], 1e-15);
    EXPECT_NEAR(t.first_row()[0], 0.875, 1e-15);
    EXPECT_NEAR(t.first_row()[1], -0.75, 1e-15);
    EXPECT_NEAR(t.first_row()[2], 0.0, 0.0);
}

TEST(GrunwaldToeplitz, MatchesEntrywiseDefinition)
{
    for (auto st : {Stencil::FirstOrder, Stencil::SecondOrder}) {
        const auto c = st == Stencil::FirstOrder ? fde::grunwald_coeffs(FractionalOrder(1.3), 40).values
                                                 : fde::shifted_weights(FractionalOrder(1.3), 40).values;
        const auto t = fde::build_grunwald_toeplitz(FractionalOrder(1.3), 40, st);
        EXPECT_LT((t.dense() - grunwald_dense(c, 40)).norm(), 1e-15);
    }
}

TEST(Assemble1D, NuUnderExampleOneCoupling)
{
    const auto p = fde::example1(FractionalOrder(1.5));
    const auto sys = fde::assemble_1d(p, p.make_grid(64), 0.0, Stencil::FirstOrder);
    EXPECT_NEAR(sys.nu(), std::sqrt(2.0 / 64), 1e-15);
    EXPECT_NEAR(sys.nu(), 0.1767767, 1e-7);
    EXPECT_NEAR(sys.h_alpha(), std::pow(2.0 / 64, 1.5), 1e-15);
    EXPECT_EQ(sys.size(), 63u);
}

TEST(Assemble1D, DegenerateDiffusionIsShiftedIdentity)
{
    const auto sys = system_1d(1.5, Stencil::FirstOrder, 0.7, std::vector<double>(4, 0.0), std::vector<double>(4, 0.0));
    EXPECT_LT((sys.dense() - 0.7 * MatrixXd::Identity(4, 4)).norm(), 1e-15);
    const std::vector<double> v{1, 2, 3, 4};
    const auto r = sys.apply(v);
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(r[i], 0.7 * v[i], 1e-15);
    }
}

TEST(Assemble1D, EqualConstantCoefficientsGiveSpd)
{
    for (auto st : {Stencil::FirstOrder, Stencil::SecondOrder}) {
        const auto sys = system_1d(1.5, st, 0.1, std::vector<double>(16, 1.0), std::vector<double>(16, 1.0));
        const MatrixXd d = sys.dense();
        EXPECT_LT((d - d.transpose()).cwiseAbs().maxCoeff(), 1e-14);
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(d);
        EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    }
}

TEST(Assemble1D, FastOperatorMatchesDense)
{
    std::mt19937_64 rng(21);
    for (std::size_t n : {2u, 17u, 64u, 256u}) {
        for (auto st : {Stencil::FirstOrder, Stencil::SecondOrder}) {
            const auto dp = random_vector(n, rng, 0.0, 3.0);
            const auto dm = random_vector(n, rng, 0.0, 3.0);
            const auto sys = system_1d(1.4, st, 0.3, dp, dm);
            const auto c = st == Stencil::FirstOrder ? fde::grunwald_coeffs(FractionalOrder(1.4), n).values
                                                     : fde::shifted_weights(FractionalOrder(1.4), n).values;
            const MatrixXd t = grunwald_dense(c, n);
            const MatrixXd want = 0.3 * MatrixXd::Identity(n, n) + as_eigen(dp).asDiagonal() * t +
                                  as_eigen(dm).asDiagonal() * t.transpose();
            EXPECT_LT((sys.dense() - want).cwiseAbs().maxCoeff(), 1e-12);
            for (int probe = 0; probe < 20; ++probe) {
                const auto v = random_vector(n, rng);
                EXPECT_LT(rel_err(fde::system_matvec_1d(sys, v), want * as_eigen(v)), 1e-12);
            }
        }
    }
}

TEST(Assemble1D, ExampleOneUnitProbe)
{
    const auto p = fde::example1(FractionalOrder(1.5));
    const auto sys = fde::assemble_1d(p, p.make_grid(32), 0.0, Stencil::FirstOrder);
    std::vector<double> e(sys.size(), 0.0);
    e[0] = 1.0;
    const VectorXd want = sys.dense().col(0);
    EXPECT_LT(rel_err(sys.apply(e), want), 1e-12);
}

TEST(Assemble1D, TransposePairing)
{
    const std::size_t n = 12;
    const auto a = system_1d(1.6, Stencil::FirstOrder, 0.0, std::vector<double>(n, 1.0), std::vector<double>(n, 0.0));
    const auto b = system_1d(1.6, Stencil::FirstOrder, 0.0, std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));
    EXPECT_LT((a.dense() - b.dense().transpose()).norm(), 1e-15);
    std::mt19937_64 rng(22);
    const auto v = random_vector(n, rng);
    EXPECT_LT(rel_err(b.apply(v), a.dense().transpose() * as_eigen(v)), 1e-13);
}

TEST(Assemble1D, RejectsBadFields)
{
    EXPECT_THROW(system_1d(1.5, Stencil::FirstOrder, 1.0, {1, 2}, {1}), fde::InvalidArgument);
    EXPECT_THROW(system_1d(1.5, Stencil::FirstOrder, 1.0, {1, -2}, {1, 1}), fde::InvalidArgument);
    const auto sys = system_1d(1.5, Stencil::FirstOrder, 1.0, {1, 1}, {1, 1});
    EXPECT_THROW(sys.apply(std::vector<double>(3)), fde::InvalidArgument);
    EXPECT_THROW(sys.rhs(std::vector<double>(2), std::vector<double>(3)), fde::InvalidArgument);
}

TEST(Rhs1D, Formula)
{
    const fde::FdeSystem1D zero(FractionalOrder(1.5), Stencil::FirstOrder, 0.25, 0.01, {{1, 1, 1}, {1, 1, 1}});
    for (double x : fde::rhs_1d(zero, std::vector<double>(3, 0.0), std::vector<double>(3, 0.0))) {
        EXPECT_EQ(x, 0.0);
    }
    for (double x : fde::rhs_1d(zero, std::vector<double>(3, 1.0), std::vector<double>(3, 1.0))) {
        EXPECT_NEAR(x, 0.26, 1e-15);
    }
}

TEST(Rhs1D, ExampleOneFirstStepRegression)
{
    // Reference values from an independent script of the same formulas (alpha = 1.5, n1 = 63).
    const auto p = fde::example1(FractionalOrder(1.5));
    const auto g = p.make_grid(64);
    const auto sys = fde::assemble_1d(p, g, 0.0, Stencil::FirstOrder);
    std::vector<double> u0(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        u0[i] = p.u0(g.x(i + 1));
    }
    const auto b = sys.rhs(u0, fde::sample_interior(p.source, g, g.t(1)));
    EXPECT_NEAR(b[0], -0.10599688920623905, 1e-13);
    EXPECT_NEAR(b[31], 0.7542246894312071, 1e-13);
    EXPECT_NEAR(b[62], -0.10599688920623905, 1e-13);
}

TEST(Assemble1D, MinimalEigenvalueDecay)
{
    for (double a : {1.2, 1.5, 1.8}) {
        double lmin[2];
        int k = 0;
        for (std::size_t n : {63u, 127u}) {
            const auto sys = system_1d(a, Stencil::FirstOrder, 0.0, std::vector<double>(n, 1.0), std::vector<double>(n, 1.0));
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(sys.dense());
            lmin[k++] = es.eigenvalues().minCoeff();
        }
        const double ratio = lmin[1] / lmin[0];
        EXPECT_NEAR(ratio / std::pow(2.0, -a), 1.0, 0.15) << a;
    }
}

TEST(Assemble1D, SolutionAccuracyFirstOrder)
{
    // Implicit Euler with direct dense solves, independent of GMRES.
    auto error = [](std::size_t n_plus_1) {
        const auto p = fde::example1(FractionalOrder(1.5));
        const auto g = p.make_grid(n_plus_1);
        const auto sys = fde::assemble_1d(p, g, 0.0, Stencil::FirstOrder);
        const auto lu = sys.dense().partialPivLu();
        std::vector<double> u(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            u[i] = p.u0(g.x(i + 1));
        }
        for (std::size_t m = 1; m <= g.M; ++m) {
            const VectorXd x = lu.solve(as_eigen(sys.rhs(u, fde::sample_interior(p.source, g, g.t(m)))));
            u.assign(x.data(), x.data() + x.size());
        }
        const auto ex = fde::sample_interior(p.exact, g, g.final_time());
        return (as_eigen(u) - as_eigen(ex)).cwiseAbs().maxCoeff();
    };
    const double e6 = error(64);
    const double e7 = error(128);
    EXPECT_GE(e6 / e7, 1.5);
    EXPECT_LE(e6 / e7, 2.5);
}

// ---- 2D ------------------------------------------------------------------------

namespace {

fde::FdeSystem2D system_2d(std::size_t n1, std::size_t n2, double r, double s, fde::DiffusionField2D f,
                           double a = 1.8, double b = 1.6)
{
    return {FractionalOrder(a), FractionalOrder(b), n1, n2, r, s, 0.5, std::move(f)};
}

MatrixXd dense_2d(const fde::FdeSystem2D& sys)
{
    const std::size_t n1 = sys.n1();
    const std::size_t n2 = sys.n2();
    const MatrixXd sa = grunwald_dense(fde::shifted_weights(sys.alpha(), n1).values, n1);
    const MatrixXd sb = grunwald_dense(fde::shifted_weights(sys.beta(), n2).values, n2);
    const MatrixXd i1 = MatrixXd::Identity(n1, n1);
    const MatrixXd i2 = MatrixXd::Identity(n2, n2);
    const auto& f = sys.field();
    const MatrixXd ax = as_eigen(f.d_plus).asDiagonal() * kron(i2, sa) + as_eigen(f.d_minus).asDiagonal() * kron(i2, sa.transpose());
    const MatrixXd ay = as_eigen(f.e_plus).asDiagonal() * kron(sb, i1) + as_eigen(f.e_minus).asDiagonal() * kron(sb.transpose(), i1);
    return MatrixXd::Identity(n1 * n2, n1 * n2) / sys.r() + ax + sys.s_over_r() * ay;
}

fde::DiffusionField2D random_field(std::size_t n, std::mt19937_64& rng)
{
    return {random_vector(n, rng, 0, 2), random_vector(n, rng, 0, 2), random_vector(n, rng, 0, 2),
            random_vector(n, rng, 0, 2)};
}

}  // namespace

TEST(Assemble2D, SOverRForExampleTwo)
{
    const auto p = fde::example2();
    const auto sys = fde::assemble_2d(p, p.make_grid(16), 0.0);
    EXPECT_NEAR(sys.s_over_r(), std::pow(2.0, 0.2) * std::pow(17.0, -0.2), 1e-14);
    EXPECT_NEAR(sys.s_over_r(), 0.6518, 1e-4);
    EXPECT_NEAR(sys.r(), (1.0 / 17) / (2 * std::pow(2.0 / 17, 1.8)), 1e-14);
}

TEST(Assemble2D, DegenerateDiffusion)
{
    const std::size_t n = 12;
    const std::vector<double> z(n, 0.0);
    const auto sys = system_2d(4, 3, 0.4, 0.2, {z, z, z, z});
    std::mt19937_64 rng(30);
    const auto v = random_vector(n, rng);
    const auto r = fde::system_matvec_2d(sys, v);
    const auto b = fde::rhs_2d(sys, v, z);
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_NEAR(r[k], v[k] / 0.4, 1e-14);
        EXPECT_NEAR(b[k], v[k] / 0.4, 1e-14);
    }
    for (double x : fde::rhs_2d(sys, z, z)) {
        EXPECT_EQ(x, 0.0);
    }
}

TEST(Assemble2D, FastOperatorMatchesDenseKronecker)
{
    std::mt19937_64 rng(31);
    for (auto [n1, n2] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 4}, {5, 3}, {1, 6}, {32, 32}}) {
        const auto sys = system_2d(n1, n2, 0.3, 0.7, random_field(n1 * n2, rng));
        const MatrixXd d = dense_2d(sys);
        EXPECT_LT((sys.dense() - d).cwiseAbs().maxCoeff(), 1e-12 * d.cwiseAbs().maxCoeff());
        for (int probe = 0; probe < 20; ++probe) {
            const auto v = random_vector(n1 * n2, rng);
            EXPECT_LT(rel_err(sys.apply(v), d * as_eigen(v)), 1e-12);
        }
    }
}

TEST(Assemble2D, RhsMatchesDenseFormula)
{
    const auto p = fde::example2();
    const auto g = p.make_grid(8);
    const auto sys = fde::assemble_2d(p, g, 0.0);
    std::vector<double> u0(g.size());
    for (std::size_t j = 0; j < g.n2; ++j) {
        for (std::size_t i = 0; i < g.n1; ++i) {
            u0[i + g.n1 * j] = p.u0(g.x(i + 1), g.y(j + 1));
        }
    }
    const auto f = fde::sample_interior(p.source, g, 0.5 * g.ht);
    const MatrixXd m = dense_2d(sys);
    const MatrixXd b_op = 2.0 * MatrixXd::Identity(g.size(), g.size()) / sys.r() - m;
    const VectorXd want = b_op * as_eigen(u0) + 2.0 * sys.hx_alpha() * as_eigen(f);
    const auto b = fde::rhs_2d(sys, u0, f);
    EXPECT_LT(rel_err(b, want), 1e-12);
    // Values from an independent script.
    EXPECT_NEAR(b[0], -9.590643948589978, 1e-10);
    EXPECT_NEAR(b[27], 142.52356838098814, 1e-9);
    EXPECT_NEAR(b[63], -9.59064394858999, 1e-10);
}

TEST(Assemble2D, RejectsBadInput)
{
    std::mt19937_64 rng(32);
    auto f = random_field(6, rng);
    EXPECT_THROW(system_2d(2, 2, 1, 1, f), fde::InvalidArgument);
    EXPECT_THROW(system_2d(2, 3, 0, 1, f), fde::InvalidArgument);
    f.e_minus[2] = -1.0;
    EXPECT_THROW(system_2d(2, 3, 1, 1, f), fde::InvalidArgument);
}

#include <gtest/gtest.h>

#include "fde/analysis.hpp"
#include "fde/discretization.hpp"
#include "fde/errors.hpp"
#include "fde/problems.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using cd = std::complex<double>;
using Eigen::MatrixXd;

namespace {

bool encloses(const fde::Circle& c, std::span<const cd> pts, double tol = 1e-10)
{
    return std::all_of(pts.begin(), pts.end(), [&](cd p) { return std::abs(p - c.center) <= c.radius + tol; });
}

// O(n^4) reference: smallest circle among all pair and triple circumcircles that contain every point.
double brute_force_radius(const std::vector<cd>& pts)
{
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](cd c, double r) {
        if (r < best && std::all_of(pts.begin(), pts.end(), [&](cd p) { return std::abs(p - c) <= r * (1 + 1e-9) + 1e-12; })) {
            best = r;
        }
    };
    const std::size_t n = pts.size();
    if (n == 1) {
        return 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            consider(0.5 * (pts[i] + pts[j]), 0.5 * std::abs(pts[i] - pts[j]));
            for (std::size_t k = j + 1; k < n; ++k) {
                const cd a = pts[i];
                const cd b = pts[j] - a;
                const cd c = pts[k] - a;
                const double d = 2.0 * (b.real() * c.imag() - b.imag() * c.real());
                if (std::abs(d) < 1e-14) {
                    continue;
                }
                const double ux = (c.imag() * std::norm(b) - b.imag() * std::norm(c)) / d;
                const double uy = (b.real() * std::norm(c) - c.real() * std::norm(b)) / d;
                consider(a + cd(ux, uy), std::hypot(ux, uy));
            }
        }
    }
    return best;
}

}  // namespace

TEST(EnclosingCircle, SmallCases)
{
    const std::vector<cd> one{{2.0, -1.0}};
    auto c = fde::smallest_enclosing_circle(one);
    EXPECT_EQ(c.center, cd(2.0, -1.0));
    EXPECT_EQ(c.radius, 0.0);

    const std::vector<cd> pair{{0, 0}, {2, 0}};
    c = fde::smallest_enclosing_circle(pair);
    EXPECT_NEAR(std::abs(c.center - cd(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(c.radius, 1.0, 1e-15);

    const std::vector<cd> tri{{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
    c = fde::smallest_enclosing_circle(tri);
    EXPECT_NEAR(std::abs(c.center - cd(1, 1 / std::sqrt(3.0))), 0.0, 1e-14);
    EXPECT_NEAR(c.radius, 2 / std::sqrt(3.0), 1e-14);
    EXPECT_EQ(c.support.size(), 3u);

    // Obtuse triangle: the longest side is the diameter.
    const std::vector<cd> obtuse{{0, 0}, {4, 0}, {2, 0.5}};
    c = fde::smallest_enclosing_circle(obtuse);
    EXPECT_NEAR(c.radius, 2.0, 1e-14);

    const std::vector<cd> line{{0, 0}, {1, 0}, {3, 0}, {-2, 0}};
    c = fde::smallest_enclosing_circle(line);
    EXPECT_NEAR(c.radius, 2.5, 1e-14);
    EXPECT_NEAR(c.center.real(), 0.5, 1e-14);

    const std::vector<cd> dup{{1, 1}, {1, 1}, {1, 1}};
    c = fde::smallest_enclosing_circle(dup);
    EXPECT_NEAR(c.radius, 0.0, 1e-15);

    EXPECT_THROW(fde::smallest_enclosing_circle(std::vector<cd>{}), fde::InvalidArgument);
}

TEST(EnclosingCircle, AgreesWithBruteForce)
{
    std::mt19937_64 rng(70);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 25;
        std::vector<cd> pts(n);
        for (auto& p : pts) {
            p = {nd(rng), 0.3 * nd(rng)};
        }
        const auto c = fde::smallest_enclosing_circle(pts, 1234 + trial);
        EXPECT_TRUE(encloses(c, pts));
        EXPECT_NEAR(c.radius, brute_force_radius(pts), 1e-10) << trial;
        for (std::size_t s : c.support) {
            EXPECT_NEAR(std::abs(pts[s] - c.center), c.radius, 1e-9);
        }
    }
}

TEST(EnclosingCircle, RemovingInteriorPointKeepsCircle)
{
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cd> pts(30);
    for (auto& p : pts) {
        p = {u(rng), u(rng)};
    }
    const auto c = fde::smallest_enclosing_circle(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::find(c.support.begin(), c.support.end(), i) != c.support.end()) {
            continue;
        }
        auto fewer = pts;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_NEAR(fde::smallest_enclosing_circle(fewer).radius, c.radius, 1e-12);
    }
}

TEST(EnclosingCircle, ScalesAndTranslates)
{
    std::mt19937_64 rng(72);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cd> pts(20);
    for (auto& p : pts) {
        p = {u(rng), u(rng)};
    }
    const auto c = fde::smallest_enclosing_circle(pts);
    const cd shift(3.0, -2.0);
    std::vector<cd> moved(pts.size());
    std::transform(pts.begin(), pts.end(), moved.begin(), [&](cd p) { return 2.5 * p + shift; });
    const auto c2 = fde::smallest_enclosing_circle(moved);
    EXPECT_NEAR(c2.radius, 2.5 * c.radius, 1e-12);
    EXPECT_NEAR(std::abs(c2.center - (2.5 * c.center + shift)), 0.0, 1e-12);
}

TEST(EnclosingCircle, SeedReproducible)
{
    std::vector<cd> pts;
    for (int k = 0; k < 50; ++k) {
        pts.emplace_back(std::cos(0.3 * k) * (1 + 0.01 * k), std::sin(0.7 * k));
    }
    const auto a = fde::smallest_enclosing_circle(pts, 5);
    const auto b = fde::smallest_enclosing_circle(pts, 5);
    EXPECT_EQ(a.center, b.center);
    EXPECT_EQ(a.radius, b.radius);
    EXPECT_EQ(a.support, b.support);
}

TEST(SpectrumReport, Identity)
{
    const auto rep = fde::spectrum_report(MatrixXd::Identity(5, 5));
    EXPECT_NEAR(std::abs(rep.center - cd(1, 0)), 0.0, 1e-14);
    EXPECT_NEAR(rep.radius, 0.0, 1e-14);
    EXPECT_NEAR(rep.kappa, 1.0, 1e-12);
    for (const auto& l : rep.scaled_eigenvalues) {
        EXPECT_NEAR(std::abs(l - cd(1, 0)), 0.0, 1e-14);
    }
}

TEST(SpectrumReport, DiagonalAndOriginCentre)
{
    const MatrixXd a = Eigen::Vector3d(1, 2, 4).asDiagonal();
    const auto rep = fde::spectrum_report(a);
    EXPECT_NEAR(rep.center.real(), 2.5, 1e-13);
    EXPECT_NEAR(rep.radius, 1.5, 1e-13);
    EXPECT_NEAR(rep.kappa, 4.0, 1e-12);
    const MatrixXd b = Eigen::Vector2d(-1, 1).asDiagonal();
    EXPECT_THROW(fde::spectrum_report(b), fde::NumericalFailure);
}

TEST(SpectrumReport, KappaMatchesSingularValues)
{
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(-1, 1);
    MatrixXd a = 3 * MatrixXd::Identity(15, 15);
    for (int i = 0; i < 15; ++i) {
        for (int j = 0; j < 15; ++j) {
            a(i, j) += u(rng);
        }
    }
    const auto rep = fde::spectrum_report(a);
    Eigen::JacobiSVD<MatrixXd> svd(a);
    const auto s = svd.singularValues();
    EXPECT_NEAR(rep.kappa, s(0) / s(s.size() - 1), 1e-8 * rep.kappa);
}

TEST(SpectrumReport, SymmetricCoefficientsGiveRealSpectrum)
{
    // d_+ = d_- constant makes M symmetric, so P^{-1} M is similar to a symmetric matrix.
    const std::size_t n = 31;
    const fde::FdeSystem1D sys(fde::FractionalOrder(1.5), fde::Stencil::FirstOrder, 0.1, 1.0,
                               {std::vector<double>(n, 1.3), std::vector<double>(n, 1.3)});
    const auto p = fde::build_preconditioner_1d(fde::PreconditionerKind::SymbolTau1D, sys);
    const auto rep = fde::spectrum_report(fde::materialize_preconditioned(sys, p));
    for (const auto& l : rep.eigenvalues) {
        EXPECT_LT(std::abs(l.imag()), 1e-10);
        EXPECT_GT(l.real(), 0.0);
    }
}

TEST(SpectrumReport, ExampleOneConditionNumbers)
{
    auto kappa = [](double alpha, std::size_t n_plus_1, fde::PreconditionerKind kind) {
        const auto p = fde::example1(fde::FractionalOrder(alpha));
        const auto sys = fde::assemble_1d(p, p.make_grid(n_plus_1), 0.0, fde::Stencil::FirstOrder);
        return fde::spectrum_report(fde::materialize_preconditioned(sys, fde::build_preconditioner_1d(kind, sys)))
            .kappa;
    };
    EXPECT_NEAR(kappa(1.5, 64, fde::PreconditionerKind::SymbolTau1D), 16.1, 1.61);
    EXPECT_NEAR(kappa(1.8, 64, fde::PreconditionerKind::Deriv2), 1.6, 0.16);
}

TEST(Materialize, MatchesOperatorAndRespectsCap)
{
    const MatrixXd a = MatrixXd::Random(6, 6);
    const auto m = fde::materialize(
        [&](std::span<const double> v) {
            const Eigen::VectorXd r = a * Eigen::Map<const Eigen::VectorXd>(v.data(), 6);
            return std::vector<double>(r.data(), r.data() + 6);
        },
        6);
    EXPECT_LT((m - a).norm(), 1e-15);
    EXPECT_THROW(fde::materialize([](std::span<const double> v) { return std::vector<double>(v.begin(), v.end()); },
                                  fde::dense_cap() + 1),
                 fde::DenseCapExceeded);
}

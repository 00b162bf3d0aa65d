#include "fde/analysis.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace fde {

DenseMatrix materialize(const LinearOperator& op, std::size_t n)
{
    check_dense_cap(n);
    const auto m = static_cast<Eigen::Index>(n);
    DenseMatrix a(m, m);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const auto col = op(e);
        e[j] = 0.0;
        if (col.size() != n) {
            throw InvalidArgument("materialize: operator returned a vector of the wrong size");
        }
        a.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(col.data(), m);
    }
    return a;
}

DenseMatrix materialize_preconditioned(const FdeSystem1D& sys, const Preconditioner& p)
{
    if (p.size() != sys.size()) {
        throw InvalidArgument("preconditioner and system differ in size");
    }
    return materialize([&](std::span<const double> v) { return p.apply_inverse(sys.apply(v)); }, sys.size());
}

DenseMatrix materialize_preconditioned(const FdeSystem2D& sys, const Preconditioner& p)
{
    if (p.size() != sys.size()) {
        throw InvalidArgument("preconditioner and system differ in size");
    }
    return materialize([&](std::span<const double> v) { return p.apply_inverse(sys.apply(v)); }, sys.size());
}

namespace {

using Point = std::complex<double>;

struct Disk {
    Point c;
    double r = -1.0;  // empty
    std::vector<std::size_t> support;
};

bool contains(const Disk& d, Point p, double scale)
{
    return d.r >= 0.0 && std::abs(p - d.c) <= d.r * (1.0 + 1e-12) + 1e-14 * scale;
}

Disk disk2(Point a, Point b, std::size_t ia, std::size_t ib)
{
    return {0.5 * (a + b), 0.5 * std::abs(a - b), {ia, ib}};
}

Disk disk3(Point a, Point b, Point c, std::size_t ia, std::size_t ib, std::size_t ic)
{
    const Point ab = b - a;
    const Point ac = c - a;
    const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
    const double len = std::max({std::abs(ab), std::abs(ac), 1e-300});
    if (std::abs(d) <= 1e-12 * len * len) {
        // Collinear: the widest pair spans the other point.
        Disk best = disk2(a, b, ia, ib);
        for (const Disk& cand : {disk2(a, c, ia, ic), disk2(b, c, ib, ic)}) {
            if (cand.r > best.r) {
                best = cand;
            }
        }
        return best;
    }
    const double ab2 = std::norm(ab);
    const double ac2 = std::norm(ac);
    const Point off((ac.imag() * ab2 - ab.imag() * ac2) / d, (ab.real() * ac2 - ac.real() * ab2) / d);
    const Point center = a + off;
    const double r = std::max({std::abs(a - center), std::abs(b - center), std::abs(c - center)});
    return {center, r, {ia, ib, ic}};
}

}  // namespace

Circle smallest_enclosing_circle(std::span<const std::complex<double>> points, std::uint64_t seed)
{
    if (points.empty()) {
        throw InvalidArgument("smallest_enclosing_circle needs at least one point");
    }
    double scale = 0.0;
    for (const auto& p : points) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw InvalidArgument("smallest_enclosing_circle: non-finite point");
        }
        scale = std::max(scale, std::abs(p));
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    Disk d{points[order[0]], 0.0, {order[0]}};
    for (std::size_t i = 1; i < order.size(); ++i) {
        const std::size_t pi = order[i];
        if (contains(d, points[pi], scale)) {
            continue;
        }
        d = {points[pi], 0.0, {pi}};
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t pj = order[j];
            if (contains(d, points[pj], scale)) {
                continue;
            }
            d = disk2(points[pi], points[pj], pi, pj);
            for (std::size_t k = 0; k < j; ++k) {
                const std::size_t pk = order[k];
                if (contains(d, points[pk], scale)) {
                    continue;
                }
                d = disk3(points[pi], points[pj], points[pk], pi, pj, pk);
            }
        }
    }
    if (d.support.size() == 2 && points[d.support[0]] == points[d.support[1]]) {
        d.support.pop_back();
    }
    return {d.c, d.r, d.support};
}

SpectrumReport spectrum_report(const DenseMatrix& a, std::uint64_t seed)
{
    SpectrumReport rep;
    rep.eigenvalues = dense_eigenvalues(a).values;
    const Circle c = smallest_enclosing_circle(rep.eigenvalues, seed);
    if (c.center == std::complex<double>(0.0, 0.0)) {
        throw NumericalFailure("spectrum_report: enclosing circle is centred at the origin");
    }
    rep.center = c.center;
    rep.radius = c.radius;
    rep.support = c.support;
    rep.scaled_eigenvalues.reserve(rep.eigenvalues.size());
    for (const auto& l : rep.eigenvalues) {
        rep.scaled_eigenvalues.push_back(l / c.center);
    }
    rep.kappa = dense_condition_number(a);
    return rep;
}

}  // namespace fde

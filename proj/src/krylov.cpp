#include "fde/krylov.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fde {

namespace {

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void require_finite(double v, const char* where)
{
    if (!std::isfinite(v)) {
        throw NumericalFailure(std::string("gmres: non-finite value in ") + where);
    }
}

std::vector<double> checked(const LinearOperator& op, std::span<const double> v, std::size_t n, const char* what)
{
    auto out = op(v);
    if (out.size() != n) {
        throw InvalidArgument(std::string("gmres: ") + what + " returned a vector of the wrong size");
    }
    return out;
}

}  // namespace

GmresResult gmres(const LinearOperator& apply_a, const LinearOperator& apply_pinv, std::span<const double> b,
                  std::span<const double> x0, const GmresConfig& cfg)
{
    const std::size_t n = b.size();
    if (x0.size() != n) {
        throw InvalidArgument("gmres: x0 and b differ in size");
    }
    if (!(cfg.rel_tolerance > 0.0 && cfg.rel_tolerance < 1.0)) {
        throw InvalidArgument("gmres: rel_tolerance must lie in (0, 1)");
    }
    const std::size_t max_it = cfg.max_iterations.value_or(n);
    if (max_it < 1) {
        throw InvalidArgument("gmres: max_iterations must be >= 1");
    }
    for (double v : b) {
        require_finite(v, "b");
    }

    GmresResult res;
    res.x.assign(x0.begin(), x0.end());

    const double pb = norm(checked(apply_pinv, b, n, "preconditioner"));
    require_finite(pb, "||P^-1 b||");
    if (pb == 0.0) {
        res.x.assign(n, 0.0);
        res.stats.residual_history = {0.0};
        res.stats.converged = true;
        return res;
    }

    std::vector<double> r(n);
    {
        const auto ax = checked(apply_a, res.x, n, "operator");
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = b[i] - ax[i];
        }
    }
    std::vector<double> z = checked(apply_pinv, r, n, "preconditioner");
    const double beta = norm(z);
    require_finite(beta, "initial residual");
    const double threshold = cfg.rel_tolerance * pb;
    res.stats.residual_history.push_back(beta / pb);
    if (beta <= threshold) {
        res.stats.converged = true;
        return res;
    }

    std::vector<std::vector<double>> basis;
    basis.reserve(max_it + 1);
    for (double& v : z) {
        v /= beta;
    }
    basis.push_back(std::move(z));

    // Column k of the Hessenberg matrix, already rotated, is h[k][0..k].
    std::vector<std::vector<double>> h;
    std::vector<double> cs;
    std::vector<double> sn;
    std::vector<double> g{beta};
    std::size_t k = 0;
    bool converged = false;

    while (k < max_it) {
        std::vector<double> w = checked(apply_pinv, checked(apply_a, basis[k], n, "operator"), n, "preconditioner");
        const double w_norm0 = norm(w);
        require_finite(w_norm0, "Arnoldi vector");
        std::vector<double> col(k + 2, 0.0);
        for (std::size_t j = 0; j <= k; ++j) {
            const double c = dot(w, basis[j]);
            col[j] = c;
            for (std::size_t i = 0; i < n; ++i) {
                w[i] -= c * basis[j][i];
            }
        }
        double w_norm = norm(w);
        // Second pass when the first one left a measurable component along the basis.
        double loss = 0.0;
        if (w_norm > 0.0) {
            for (std::size_t j = 0; j <= k; ++j) {
                loss = std::max(loss, std::abs(dot(w, basis[j])) / w_norm);
            }
        }
        if (loss > 1e-8) {
            for (std::size_t j = 0; j <= k; ++j) {
                const double c = dot(w, basis[j]);
                col[j] += c;
                for (std::size_t i = 0; i < n; ++i) {
                    w[i] -= c * basis[j][i];
                }
            }
            w_norm = norm(w);
        }
        col[k + 1] = w_norm;

        for (std::size_t j = 0; j < k; ++j) {
            const double t = cs[j] * col[j] + sn[j] * col[j + 1];
            col[j + 1] = -sn[j] * col[j] + cs[j] * col[j + 1];
            col[j] = t;
        }
        const double d = std::hypot(col[k], col[k + 1]);
        require_finite(d, "Givens rotation");
        if (d == 0.0) {
            throw NumericalFailure("gmres: singular Hessenberg column");
        }
        const double c = col[k] / d;
        const double s = col[k + 1] / d;
        cs.push_back(c);
        sn.push_back(s);
        col[k] = d;
        col.pop_back();
        h.push_back(std::move(col));
        g.push_back(-s * g[k]);
        g[k] *= c;
        ++k;

        const double resid = std::abs(g[k]);
        res.stats.residual_history.push_back(resid / pb);
        const bool breakdown = w_norm <= 1e-14 * w_norm0;
        if (resid <= threshold || breakdown) {
            converged = true;
            break;
        }
        for (double& v : w) {
            v /= w_norm;
        }
        basis.push_back(std::move(w));
    }

    // Back substitution on the rotated k x k triangle.
    std::vector<double> y(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = g[i];
        for (std::size_t j = i + 1; j < k; ++j) {
            s -= h[j][i] * y[j];
        }
        y[i] = s / h[i][i];
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            res.x[i] += y[j] * basis[j][i];
        }
    }
    for (double v : res.x) {
        require_finite(v, "solution");
    }
    res.stats.iterations = k;
    res.stats.converged = converged;
    return res;
}

}  // namespace fde

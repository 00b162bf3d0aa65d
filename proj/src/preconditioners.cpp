#include "fde/preconditioners.hpp"

#include "fde/errors.hpp"
#include "fde/symbols.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace fde {

namespace {

constexpr std::array<std::pair<PreconditionerKind, std::string_view>, 9> kNames{{
    {PreconditionerKind::Identity, "identity"},
    {PreconditionerKind::Circulant, "circulant"},
    {PreconditionerKind::FullSymbol, "full-symbol"},
    {PreconditionerKind::SymbolTau1D, "symbol-tau"},
    {PreconditionerKind::AltSymbol1D, "alt-symbol"},
    {PreconditionerKind::Deriv1, "deriv1"},
    {PreconditionerKind::Deriv2, "deriv2"},
    {PreconditionerKind::TridiagOfSystem, "tridiag"},
    {PreconditionerKind::SymbolTau2D, "symbol-tau-2d"},
}};

void check_positive_samples(const std::vector<double>& samples, const char* what)
{
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (!(samples[j] > 1e-300) || !std::isfinite(samples[j])) {
            throw SingularOperator(std::string(what) + ": diagonal sample " + std::to_string(j) +
                                   " is not positive");
        }
    }
}

std::vector<double> sqrt_entries(const std::vector<double>& d)
{
    std::vector<double> s(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        s[i] = std::sqrt(d[i]);
    }
    return s;
}

double mean(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::complex<double> stencil_symbol(FractionalOrder a, Stencil st, double theta)
{
    return st == Stencil::FirstOrder ? eval_g(a, theta) : eval_w(a, theta);
}

void scale(std::vector<double>& v, const std::vector<double>& s, bool divide)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = divide ? v[i] / s[i] : v[i] * s[i];
    }
}

}  // namespace

std::string_view kind_name(PreconditionerKind kind)
{
    for (const auto& [k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

PreconditionerKind parse_kind(std::string_view name)
{
    for (const auto& [k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown preconditioner '" + std::string(name) + "'");
}

PreconditionerKind resolve_kind_for_2d(PreconditionerKind kind)
{
    switch (kind) {
    case PreconditionerKind::Identity:
    case PreconditionerKind::SymbolTau2D:
        return kind;
    case PreconditionerKind::SymbolTau1D:
        return PreconditionerKind::SymbolTau2D;
    default:
        throw InvalidArgument("preconditioner '" + std::string(kind_name(kind)) +
                              "' is not available for 2D problems");
    }
}

Preconditioner::Preconditioner(PreconditionerKind kind, std::size_t size, Factor factor)
    : kind_(kind), size_(size), factor_(std::move(factor))
{
}

std::vector<double> Preconditioner::apply_inverse(std::span<const double> v) const
{
    if (v.size() != size_) {
        throw InvalidArgument("preconditioner apply_inverse size mismatch");
    }
    struct Visitor {
        std::span<const double> v;
        std::vector<double> operator()(const IdentityFactor&) const { return {v.begin(), v.end()}; }
        std::vector<double> operator()(const TauFactor& f) const
        {
            if (f.sqrt_d.empty()) {
                return f.tau.solve(v);
            }
            std::vector<double> w(v.begin(), v.end());
            scale(w, f.sqrt_d, true);
            w = f.tau.solve(w);
            scale(w, f.sqrt_d, true);
            return w;
        }
        std::vector<double> operator()(const KronTauFactor& f) const
        {
            std::vector<double> w(v.begin(), v.end());
            scale(w, f.sqrt_d, true);
            w = f.tau.solve(w);
            scale(w, f.sqrt_d, true);
            return w;
        }
        std::vector<double> operator()(const CirculantOperator& c) const { return c.apply_inverse(v); }
        std::vector<double> operator()(const TridiagonalOperator& t) const { return t.solve(v); }
    };
    return std::visit(Visitor{v}, factor_);
}

std::vector<double> Preconditioner::apply_forward(std::span<const double> v) const
{
    if (v.size() != size_) {
        throw InvalidArgument("preconditioner apply_forward size mismatch");
    }
    struct Visitor {
        std::span<const double> v;
        std::vector<double> operator()(const IdentityFactor&) const { return {v.begin(), v.end()}; }
        std::vector<double> operator()(const TauFactor& f) const
        {
            if (f.sqrt_d.empty()) {
                return f.tau.apply(v);
            }
            std::vector<double> w(v.begin(), v.end());
            scale(w, f.sqrt_d, false);
            w = f.tau.apply(w);
            scale(w, f.sqrt_d, false);
            return w;
        }
        std::vector<double> operator()(const KronTauFactor& f) const
        {
            std::vector<double> w(v.begin(), v.end());
            scale(w, f.sqrt_d, false);
            w = f.tau.apply(w);
            scale(w, f.sqrt_d, false);
            return w;
        }
        std::vector<double> operator()(const CirculantOperator& c) const { return c.apply(v); }
        std::vector<double> operator()(const TridiagonalOperator& t) const { return t.apply(v); }
    };
    return std::visit(Visitor{v}, factor_);
}

DenseMatrix Preconditioner::dense() const
{
    check_dense_cap(size_);
    const auto n = static_cast<Eigen::Index>(size_);
    DenseMatrix p(n, n);
    std::vector<double> e(size_, 0.0);
    for (std::size_t j = 0; j < size_; ++j) {
        e[j] = 1.0;
        const auto col = apply_forward(e);
        e[j] = 0.0;
        p.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(col.data(), n);
    }
    return p;
}

std::vector<double> build_diagonal_factor_1d(const DiffusionField1D& field)
{
    if (field.d_plus.size() != field.d_minus.size()) {
        throw InvalidArgument("diffusion field size mismatch");
    }
    std::vector<double> d(field.d_plus.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = 0.5 * (field.d_plus[i] + field.d_minus[i]);
        if (!(d[i] > 0.0)) {
            throw InvalidArgument("d_+ and d_- vanish together at node " + std::to_string(i + 1));
        }
    }
    return d;
}

std::vector<double> build_diagonal_factor_2d(const DiffusionField2D& field)
{
    const std::size_t n = field.d_plus.size();
    if (field.d_minus.size() != n || field.e_plus.size() != n || field.e_minus.size() != n) {
        throw InvalidArgument("diffusion field size mismatch");
    }
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = 0.25 * (field.d_plus[k] + field.d_minus[k] + field.e_plus[k] + field.e_minus[k]);
        if (!(d[k] > 0.0)) {
            throw InvalidArgument("diffusion coefficients vanish together at unknown " + std::to_string(k));
        }
    }
    return d;
}

Preconditioner build_preconditioner_1d(PreconditionerKind kind, const FdeSystem1D& sys)
{
    const std::size_t n = sys.size();
    const double nu = sys.nu();
    const auto& dp = sys.field().d_plus;
    const auto& dm = sys.field().d_minus;
    const FractionalOrder a = sys.alpha();
    const SymbolSpec spec{a, sys.stencil()};

    switch (kind) {
    case PreconditionerKind::Identity:
        return {kind, n, Preconditioner::IdentityFactor{}};

    case PreconditionerKind::Circulant: {
        const CirculantOperator s = strang_circulant(sys.toeplitz());
        const auto& c = s.first_column();
        const auto ct = s.transposed_column();
        const double mp = mean(dp);
        const double mm = mean(dm);
        std::vector<double> col(n);
        for (std::size_t k = 0; k < n; ++k) {
            col[k] = mp * c[k] + mm * ct[k];
        }
        col[0] += nu;
        CirculantOperator p(std::move(col));
        for (const auto& ev : p.eigenvalues()) {
            if (std::abs(ev) < 1e-14) {
                throw SingularOperator("circulant preconditioner is singular");
            }
        }
        return {kind, n, std::move(p)};
    }

    case PreconditionerKind::FullSymbol: {
        std::vector<double> samples(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double th = tau_grid_point(j + 1, n);
            samples[j] = (nu + dp[j] * stencil_symbol(a, spec.stencil, th) +
                          dm[j] * stencil_symbol(a, spec.stencil, -th))
                             .real();
        }
        check_positive_samples(samples, "full-symbol");
        return {kind, n, Preconditioner::TauFactor{TauOperator(std::move(samples)), {}}};
    }

    case PreconditionerKind::SymbolTau1D:
    case PreconditionerKind::AltSymbol1D: {
        const auto d = build_diagonal_factor_1d(sys.field());
        std::vector<double> samples(n);
        for (std::size_t j = 0; j < n; ++j) {
            samples[j] = eval_symbol(spec, tau_grid_point(j + 1, n));
        }
        if (kind == PreconditionerKind::SymbolTau1D) {
            check_positive_samples(samples, "symbol-tau");
            return {kind, n, Preconditioner::TauFactor{TauOperator(std::move(samples)), sqrt_entries(d)}};
        }
        for (std::size_t j = 0; j < n; ++j) {
            samples[j] *= d[j];
        }
        check_positive_samples(samples, "alt-symbol");
        return {kind, n, Preconditioner::TauFactor{TauOperator(std::move(samples)), {}}};
    }

    case PreconditionerKind::Deriv1:
    case PreconditionerKind::Deriv2:
    case PreconditionerKind::TridiagOfSystem: {
        // Stencil entries (t_0, t_1, t_{-1}) of the Toeplitz factor; t_1 sits below the diagonal.
        double t0 = 1.0;
        double t1 = 0.0;
        double tm1 = -1.0;
        if (kind == PreconditionerKind::Deriv2) {
            t0 = 2.0;
            t1 = -1.0;
        } else if (kind == PreconditionerKind::TridiagOfSystem) {
            const auto& tc = sys.toeplitz().first_column();
            const auto& tr = sys.toeplitz().first_row();
            t0 = tc[0];
            t1 = n > 1 ? tc[1] : 0.0;
            tm1 = n > 1 ? tr[1] : 0.0;
        }
        std::vector<double> diag(n);
        std::vector<double> sup(n - 1);
        std::vector<double> sub(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            diag[i] = nu + (dp[i] + dm[i]) * t0;
            if (i + 1 < n) {
                sup[i] = dp[i] * tm1 + dm[i] * t1;
                sub[i] = dp[i + 1] * t1 + dm[i + 1] * tm1;
            }
        }
        return {kind, n, TridiagonalOperator(std::move(sub), std::move(diag), std::move(sup))};
    }

    case PreconditionerKind::SymbolTau2D:
        break;
    }
    throw InvalidArgument("symbol-tau-2d needs a 2D system");
}

Preconditioner build_preconditioner_2d(const FdeSystem2D& sys, PreconditionerKind kind)
{
    kind = resolve_kind_for_2d(kind);
    const std::size_t n1 = sys.n1();
    const std::size_t n2 = sys.n2();
    if (kind == PreconditionerKind::Identity) {
        return {kind, n1 * n2, Preconditioner::IdentityFactor{}};
    }
    const auto d = build_diagonal_factor_2d(sys.field());
    const SymbolSpec qa{sys.alpha(), Stencil::SecondOrder};
    const SymbolSpec qb{sys.beta(), Stencil::SecondOrder};
    std::vector<double> fa(n1);
    std::vector<double> fb(n2);
    for (std::size_t i = 0; i < n1; ++i) {
        fa[i] = eval_symbol(qa, tau_grid_point(i + 1, n1));
    }
    for (std::size_t j = 0; j < n2; ++j) {
        fb[j] = eval_symbol(qb, tau_grid_point(j + 1, n2));
    }
    std::vector<double> samples(n1 * n2);
    const double sr = sys.s_over_r();
    for (std::size_t j = 0; j < n2; ++j) {
        for (std::size_t i = 0; i < n1; ++i) {
            samples[i + n1 * j] = fa[i] + sr * fb[j];
        }
    }
    check_positive_samples(samples, "symbol-tau-2d");
    return {kind, n1 * n2,
            Preconditioner::KronTauFactor{KronTauOperator(n1, n2, std::move(samples)), sqrt_entries(d)}};
}

std::vector<double> apply_inverse(const Preconditioner& p, std::span<const double> v) { return p.apply_inverse(v); }

}  // namespace fde

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fde/circulant.hpp"
#include "fde/dense.hpp"
#include "fde/discretization.hpp"
#include "fde/sine_transform.hpp"
#include "fde/tridiagonal.hpp"

namespace fde {

enum class PreconditionerKind {
    Identity,
    Circulant,
    FullSymbol,
    SymbolTau1D,
    AltSymbol1D,
    Deriv1,
    Deriv2,
    TridiagOfSystem,
    SymbolTau2D,
};

/// CLI spelling: identity, circulant, full-symbol, symbol-tau, alt-symbol, deriv1, deriv2, tridiag, symbol-tau-2d.
std::string_view kind_name(PreconditionerKind kind);
/// Inverse of kind_name. "symbol-tau" always maps to SymbolTau1D; see resolve_kind_for_2d.
PreconditionerKind parse_kind(std::string_view name);
/// SymbolTau1D becomes SymbolTau2D; other kinds except Identity are rejected for 2D systems.
PreconditionerKind resolve_kind_for_2d(PreconditionerKind kind);

class Preconditioner {
public:
    struct IdentityFactor {};
    /// sqrt_d empty means no diagonal scaling.
    struct TauFactor {
        TauOperator tau;
        std::vector<double> sqrt_d;
    };
    struct KronTauFactor {
        KronTauOperator tau;
        std::vector<double> sqrt_d;
    };
    using Factor = std::variant<IdentityFactor, TauFactor, KronTauFactor, CirculantOperator, TridiagonalOperator>;

    Preconditioner(PreconditionerKind kind, std::size_t size, Factor factor);

    PreconditionerKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }
    const Factor& factor() const noexcept { return factor_; }

    /// P^{-1} v; never throws on a constructed preconditioner apart from size mismatch.
    std::vector<double> apply_inverse(std::span<const double> v) const;
    /// P v.
    std::vector<double> apply_forward(std::span<const double> v) const;

    /// Dense P, assembled column by column from apply_forward.
    DenseMatrix dense() const;

private:
    PreconditionerKind kind_;
    std::size_t size_;
    Factor factor_;
};

/// (d_+ + d_-)/2; throws InvalidArgument at a common zero.
std::vector<double> build_diagonal_factor_1d(const DiffusionField1D& field);
/// (d_+ + d_- + e_+ + e_-)/4; throws InvalidArgument at a common zero.
std::vector<double> build_diagonal_factor_2d(const DiffusionField2D& field);

Preconditioner build_preconditioner_1d(PreconditionerKind kind, const FdeSystem1D& sys);
/// SymbolTau2D (or Identity).
Preconditioner build_preconditioner_2d(const FdeSystem2D& sys, PreconditionerKind kind = PreconditionerKind::SymbolTau2D);

std::vector<double> apply_inverse(const Preconditioner& p, std::span<const double> v);

}  // namespace fde

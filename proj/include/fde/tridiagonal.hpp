#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fde {

/// Tridiagonal matrix; `sub[i]` is entry (i+1, i) and `sup[i]` is entry (i, i+1).
///
/// The Thomas elimination is carried out once at construction; `solve` then costs O(n)
/// and throws nothing. Construction throws SingularOperator when an eliminated pivot has
/// magnitude below 1e-14.
class TridiagonalOperator {
public:
    TridiagonalOperator(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup);

    std::size_t size() const noexcept { return diag_.size(); }
    const std::vector<double>& sub() const noexcept { return sub_; }
    const std::vector<double>& diag() const noexcept { return diag_; }
    const std::vector<double>& sup() const noexcept { return sup_; }

    std::vector<double> apply(std::span<const double> v) const;
    std::vector<double> solve(std::span<const double> b) const;

    Eigen::MatrixXd dense() const;

private:
    std::vector<double> sub_;
    std::vector<double> diag_;
    std::vector<double> sup_;
    std::vector<double> upper_;  // modified super-diagonal c'_i
    std::vector<double> pivot_;  // eliminated pivots
};

std::vector<double> thomas_solve(const TridiagonalOperator& a, std::span<const double> b);

}  // namespace fde

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fde {

namespace detail {
class SineFft;
}

/// Orthonormal DST-I: [S_n]_{ij} = sqrt(2/(n+1)) sin(i j pi / (n+1)). S_n is its own inverse.
std::vector<double> dst1(std::span<const double> v);
void dst1_inplace(std::span<double> v);

/// Dense S_n, for tests and small materializations.
Eigen::MatrixXd sine_matrix(std::size_t n);

/// tau-grid point theta_{j,n} = j pi / (n+1), j = 1..n.
double tau_grid_point(std::size_t j, std::size_t n);

/// (S_{n2} (x) S_{n1}) v for v laid out x-fastest (index i + n1 * j).
std::vector<double> kron_sine_apply(std::size_t n1, std::size_t n2, std::span<const double> v);
void kron_sine_apply_inplace(std::size_t n1, std::size_t n2, std::span<double> v);

/// tau_n(f) = S_n diag(f(theta_{j,n})) S_n, held by its grid samples.
class TauOperator {
public:
    explicit TauOperator(std::vector<double> grid_samples);

    std::size_t size() const noexcept { return samples_.size(); }
    const std::vector<double>& grid_samples() const noexcept { return samples_; }

    std::vector<double> apply(std::span<const double> v) const;
    /// Throws SingularOperator if any sample is <= 1e-300.
    std::vector<double> solve(std::span<const double> v) const;

    Eigen::MatrixXd dense() const;

private:
    std::vector<double> samples_;
};

std::vector<double> tau_apply(const TauOperator& t, std::span<const double> v);
std::vector<double> tau_solve(const TauOperator& t, std::span<const double> v);

/// Two-level tau matrix (S_{n2} (x) S_{n1}) diag(samples) (S_{n2} (x) S_{n1}).
/// Samples are indexed x-fastest: samples[i + n1 * j] = f(theta_{i+1,n1}, theta_{j+1,n2}).
class KronTauOperator {
public:
    KronTauOperator(std::size_t n1, std::size_t n2, std::vector<double> samples);

    std::size_t n1() const noexcept { return n1_; }
    std::size_t n2() const noexcept { return n2_; }
    std::size_t size() const noexcept { return samples_.size(); }
    const std::vector<double>& grid_samples() const noexcept { return samples_; }

    std::vector<double> apply(std::span<const double> v) const;
    std::vector<double> solve(std::span<const double> v) const;

private:
    std::size_t n1_;
    std::size_t n2_;
    std::vector<double> samples_;
};

}  // namespace fde

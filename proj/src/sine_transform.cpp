#include "fde/sine_transform.hpp"

#include "fde/errors.hpp"
#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fde {

namespace {

constexpr double kSingularSample = 1e-300;

void check_samples_invertible(std::span<const double> samples)
{
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (!(samples[j] > kSingularSample)) {
            throw SingularOperator("tau sample " + std::to_string(j) + " is not positive (" +
                                   std::to_string(samples[j]) + ")");
        }
    }
}

}  // namespace

void dst1_inplace(std::span<double> v)
{
    const std::size_t n = v.size();
    if (n == 0) {
        throw InvalidArgument("dst1 needs n >= 1");
    }
    const auto plan = detail::sine_fft(n);
    std::vector<double> out(n);
    plan->execute(v, out);
    // RODFT00 carries a factor 2 and no normalization.
    const double scale = 0.5 * std::sqrt(2.0 / static_cast<double>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = out[i] * scale;
    }
}

std::vector<double> dst1(std::span<const double> v)
{
    std::vector<double> out(v.begin(), v.end());
    dst1_inplace(out);
    return out;
}

Eigen::MatrixXd sine_matrix(std::size_t n)
{
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd s(m, m);
    const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            s(i, j) = scale * std::sin(static_cast<double>((i + 1) * (j + 1)) * std::numbers::pi /
                                       static_cast<double>(n + 1));
        }
    }
    return s;
}

double tau_grid_point(std::size_t j, std::size_t n)
{
    return static_cast<double>(j) * std::numbers::pi / static_cast<double>(n + 1);
}

void kron_sine_apply_inplace(std::size_t n1, std::size_t n2, std::span<double> v)
{
    if (n1 == 0 || n2 == 0 || v.size() != n1 * n2) {
        throw InvalidArgument("kron_sine_apply size mismatch");
    }
    // S_{n1} on each contiguous x-line.
    for (std::size_t j = 0; j < n2; ++j) {
        dst1_inplace(v.subspan(j * n1, n1));
    }
    // S_{n2} on each strided y-line.
    std::vector<double> line(n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            line[j] = v[i + n1 * j];
        }
        dst1_inplace(line);
        for (std::size_t j = 0; j < n2; ++j) {
            v[i + n1 * j] = line[j];
        }
    }
}

std::vector<double> kron_sine_apply(std::size_t n1, std::size_t n2, std::span<const double> v)
{
    std::vector<double> out(v.begin(), v.end());
    kron_sine_apply_inplace(n1, n2, out);
    return out;
}

TauOperator::TauOperator(std::vector<double> grid_samples) : samples_(std::move(grid_samples))
{
    if (samples_.empty()) {
        throw InvalidArgument("tau operator needs n >= 1");
    }
}

std::vector<double> TauOperator::apply(std::span<const double> v) const
{
    if (v.size() != size()) {
        throw InvalidArgument("tau apply size mismatch");
    }
    auto w = dst1(v);
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] *= samples_[j];
    }
    dst1_inplace(w);
    return w;
}

std::vector<double> TauOperator::solve(std::span<const double> v) const
{
    if (v.size() != size()) {
        throw InvalidArgument("tau solve size mismatch");
    }
    check_samples_invertible(samples_);
    auto w = dst1(v);
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] /= samples_[j];
    }
    dst1_inplace(w);
    return w;
}

Eigen::MatrixXd TauOperator::dense() const
{
    const Eigen::MatrixXd s = sine_matrix(size());
    const Eigen::Map<const Eigen::VectorXd> f(samples_.data(), static_cast<Eigen::Index>(size()));
    return s * f.asDiagonal() * s;
}

std::vector<double> tau_apply(const TauOperator& t, std::span<const double> v)
{
    return t.apply(v);
}

std::vector<double> tau_solve(const TauOperator& t, std::span<const double> v)
{
    return t.solve(v);
}

KronTauOperator::KronTauOperator(std::size_t n1, std::size_t n2, std::vector<double> samples)
    : n1_(n1), n2_(n2), samples_(std::move(samples))
{
    if (n1 == 0 || n2 == 0 || samples_.size() != n1 * n2) {
        throw InvalidArgument("two-level tau operator needs n1*n2 samples");
    }
}

std::vector<double> KronTauOperator::apply(std::span<const double> v) const
{
    auto w = kron_sine_apply(n1_, n2_, v);
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] *= samples_[k];
    }
    kron_sine_apply_inplace(n1_, n2_, w);
    return w;
}

std::vector<double> KronTauOperator::solve(std::span<const double> v) const
{
    check_samples_invertible(samples_);
    auto w = kron_sine_apply(n1_, n2_, v);
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] /= samples_[k];
    }
    kron_sine_apply_inplace(n1_, n2_, w);
    return w;
}

}  // namespace fde

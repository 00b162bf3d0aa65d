#include "fde/toeplitz.hpp"

#include "fde/errors.hpp"
#include "fft.hpp"

#include <string>

namespace fde {

ToeplitzOperator::ToeplitzOperator(std::vector<double> first_column, std::vector<double> first_row)
    : column_(std::move(first_column)), row_(std::move(first_row))
{
    const std::size_t n = column_.size();
    if (n == 0 || row_.size() != n) {
        throw InvalidArgument("Toeplitz column and row must be non-empty and of equal length");
    }
    if (column_[0] != row_[0]) {
        throw InvalidArgument("Toeplitz first_column[0] must equal first_row[0]");
    }
    // Circulant embedding: [c_0 .. c_{n-1}, 0, r_{n-1} .. r_1].
    const std::size_t m = 2 * n;
    std::vector<double> embed(m, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        embed[k] = column_[k];
    }
    for (std::size_t k = 1; k < n; ++k) {
        embed[m - k] = row_[k];
    }
    fft_ = detail::real_fft(m);
    spectrum_.resize(fft_->spectrum_length());
    fft_->forward(embed, spectrum_);
}

void ToeplitzOperator::multiply(std::span<const double> v, std::span<double> out, bool transpose) const
{
    const std::size_t n = size();
    if (v.size() != n || out.size() != n) {
        throw InvalidArgument("Toeplitz matvec size mismatch: expected " + std::to_string(n) +
                              ", got " + std::to_string(v.size()));
    }
    const std::size_t m = 2 * n;
    std::vector<double> padded(m, 0.0);
    std::copy(v.begin(), v.end(), padded.begin());
    std::vector<std::complex<double>> work(fft_->spectrum_length());
    fft_->forward(padded, work);
    // The transposed embedding is the transposed circulant, whose spectrum is conjugated.
    for (std::size_t k = 0; k < work.size(); ++k) {
        work[k] *= transpose ? std::conj(spectrum_[k]) : spectrum_[k];
    }
    fft_->backward(work, padded);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = padded[i] * scale;
    }
}

void ToeplitzOperator::apply(std::span<const double> v, std::span<double> out) const
{
    multiply(v, out, false);
}

void ToeplitzOperator::apply_transpose(std::span<const double> v, std::span<double> out) const
{
    multiply(v, out, true);
}

std::vector<double> ToeplitzOperator::apply(std::span<const double> v) const
{
    std::vector<double> out(size());
    multiply(v, out, false);
    return out;
}

std::vector<double> ToeplitzOperator::apply_transpose(std::span<const double> v) const
{
    std::vector<double> out(size());
    multiply(v, out, true);
    return out;
}

Eigen::MatrixXd ToeplitzOperator::dense() const
{
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return a;
}

std::vector<double> toeplitz_matvec(const ToeplitzOperator& t, std::span<const double> v)
{
    return t.apply(v);
}

}  // namespace fde

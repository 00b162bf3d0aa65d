#include "fde/circulant.hpp"

#include "fde/errors.hpp"
#include "fft.hpp"

namespace fde {

CirculantOperator::CirculantOperator(std::vector<double> first_column) : column_(std::move(first_column))
{
    if (column_.empty()) {
        throw InvalidArgument("circulant needs n >= 1");
    }
    fft_ = detail::real_fft(column_.size());
    spectrum_.resize(fft_->spectrum_length());
    fft_->forward(column_, spectrum_);
}

std::vector<std::complex<double>> CirculantOperator::eigenvalues() const
{
    const std::size_t n = size();
    std::vector<std::complex<double>> full(n);
    for (std::size_t k = 0; k < n; ++k) {
        full[k] = k < spectrum_.size() ? spectrum_[k] : std::conj(spectrum_[n - k]);
    }
    return full;
}

std::vector<double> CirculantOperator::apply(std::span<const double> v) const
{
    const std::size_t n = size();
    if (v.size() != n) {
        throw InvalidArgument("circulant apply size mismatch");
    }
    std::vector<std::complex<double>> work(spectrum_.size());
    fft_->forward(v, work);
    for (std::size_t k = 0; k < work.size(); ++k) {
        work[k] *= spectrum_[k] / static_cast<double>(n);
    }
    std::vector<double> out(n);
    fft_->backward(work, out);
    return out;
}

std::vector<double> CirculantOperator::apply_inverse(std::span<const double> v) const
{
    const std::size_t n = size();
    if (v.size() != n) {
        throw InvalidArgument("circulant apply_inverse size mismatch");
    }
    std::vector<std::complex<double>> work(spectrum_.size());
    fft_->forward(v, work);
    for (std::size_t k = 0; k < work.size(); ++k) {
        if (std::abs(spectrum_[k]) < 1e-14) {
            throw SingularOperator("circulant eigenvalue below 1e-14");
        }
        work[k] /= spectrum_[k] * static_cast<double>(n);
    }
    std::vector<double> out(n);
    fft_->backward(work, out);
    return out;
}

std::vector<double> CirculantOperator::transposed_column() const
{
    const std::size_t n = size();
    std::vector<double> c(n);
    c[0] = column_[0];
    for (std::size_t k = 1; k < n; ++k) {
        c[k] = column_[n - k];
    }
    return c;
}

Eigen::MatrixXd CirculantOperator::dense() const
{
    const std::size_t n = size();
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column_[(i + n - j) % n];
        }
    }
    return a;
}

CirculantOperator strang_circulant(const ToeplitzOperator& t)
{
    const std::size_t n = t.size();
    const auto& col = t.first_column();
    const auto& row = t.first_row();
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (2 * k < n) {
            c[k] = col[k];
        } else if (2 * k > n) {
            c[k] = row[n - k];  // t_{k-n}
        } else {
            c[k] = 0.5 * (col[k] + row[k]);
        }
    }
    return CirculantOperator(std::move(c));
}

}  // namespace fde

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace fde::detail {

/// Real-to-complex / complex-to-real FFT of a fixed length, shared and immutable.
/// Execution is reentrant: callers supply their own buffers.
class RealFft {
public:
    explicit RealFft(std::size_t length);
    ~RealFft();
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t length() const noexcept { return length_; }
    std::size_t spectrum_length() const noexcept { return length_ / 2 + 1; }

    /// Unnormalized forward transform; `in` is of size length(), `out` of spectrum_length().
    void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
    /// Unnormalized inverse; `in` is clobbered.
    void backward(std::span<std::complex<double>> in, std::span<double> out) const;

private:
    std::size_t length_;
    void* forward_plan_;
    void* backward_plan_;
};

/// Unnormalized DST-I (FFTW RODFT00): y_k = 2 sum_j x_j sin(pi (j+1)(k+1) / (n+1)).
class SineFft {
public:
    explicit SineFft(std::size_t length);
    ~SineFft();
    SineFft(const SineFft&) = delete;
    SineFft& operator=(const SineFft&) = delete;

    std::size_t length() const noexcept { return length_; }
    void execute(std::span<const double> in, std::span<double> out) const;

private:
    std::size_t length_;
    void* plan_;
};

std::shared_ptr<const RealFft> real_fft(std::size_t length);
std::shared_ptr<const SineFft> sine_fft(std::size_t length);

}  // namespace fde::detail

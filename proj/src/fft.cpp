#include "fft.hpp"

#include "fde/errors.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace fde::detail {

namespace {

// The FFTW planner is not thread-safe; plan creation and destruction go through this lock.
// Leaked so that cached plans destroyed at exit can still take it.
std::mutex& planner_mutex()
{
    static auto* m = new std::mutex;
    return *m;
}

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

fftw_complex* as_fftw(std::complex<double>* p)
{
    return reinterpret_cast<fftw_complex*>(p);
}

}  // namespace

RealFft::RealFft(std::size_t length) : length_(length)
{
    if (length == 0) {
        throw InvalidArgument("FFT length must be positive");
    }
    std::vector<double> real(length);
    std::vector<std::complex<double>> spec(length / 2 + 1);
    const int n = static_cast<int>(length);
    std::lock_guard lock(planner_mutex());
    forward_plan_ = fftw_plan_dft_r2c_1d(n, real.data(), as_fftw(spec.data()), kPlanFlags);
    backward_plan_ = fftw_plan_dft_c2r_1d(n, as_fftw(spec.data()), real.data(), kPlanFlags);
    if (forward_plan_ == nullptr || backward_plan_ == nullptr) {
        throw NumericalFailure("FFTW planning failed");
    }
}

RealFft::~RealFft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const
{
    // FFTW does not modify the input of an out-of-place r2c transform.
    fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), const_cast<double*>(in.data()),
                         as_fftw(out.data()));
}

void RealFft::backward(std::span<std::complex<double>> in, std::span<double> out) const
{
    fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_), as_fftw(in.data()), out.data());
}

SineFft::SineFft(std::size_t length) : length_(length)
{
    if (length == 0) {
        throw InvalidArgument("DST length must be positive");
    }
    std::vector<double> a(length), b(length);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_r2r_1d(static_cast<int>(length), a.data(), b.data(), FFTW_RODFT00, kPlanFlags);
    if (plan_ == nullptr) {
        throw NumericalFailure("FFTW planning failed");
    }
}

SineFft::~SineFft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void SineFft::execute(std::span<const double> in, std::span<double> out) const
{
    fftw_execute_r2r(static_cast<fftw_plan>(plan_), const_cast<double*>(in.data()), out.data());
}

namespace {

template <typename Plan>
std::shared_ptr<const Plan> cached(std::size_t length)
{
    static std::mutex cache_mutex;
    static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[length];
    if (!slot) {
        slot = std::make_shared<const Plan>(length);
    }
    return slot;
}

}  // namespace

std::shared_ptr<const RealFft> real_fft(std::size_t length)
{
    return cached<RealFft>(length);
}

std::shared_ptr<const SineFft> sine_fft(std::size_t length)
{
    return cached<SineFft>(length);
}

}  // namespace fde::detail

#include "specres/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "specres/error.hpp"
#include "specres/grids.hpp"

namespace specres {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
    std::vector<std::complex<double>> a(n), b(n);
    auto* in = reinterpret_cast<fftw_complex*>(a.data());
    auto* out = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_plan_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, flags);
    backward_plan_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, flags);
}

FftPlan::~FftPlan() {
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

const FftPlan& FftPlan::get(std::size_t n) {
    if (!is_power_of_two(n)) throw InvalidArgument("FFT length must be a power of two");
    std::lock_guard lock(planner_mutex());
    static std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
    auto& slot = cache[n];
    if (!slot) slot.reset(new FftPlan(n));
    return *slot;
}

namespace {

void run(void* plan, std::size_t n, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    if (in.size() != n || out.size() != n) throw InvalidArgument("FFT buffer length mismatch");
    // FFTW does not write to the input of an out-of-place complex transform.
    auto* i = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
    auto* o = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan), i, o);
}

}  // namespace

void FftPlan::forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    run(forward_plan_, n_, in, out);
}

void FftPlan::backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    run(backward_plan_, n_, in, out);
}

}  // namespace specres

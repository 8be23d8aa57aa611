#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace specres {

/// In-place-capable complex DFT of a fixed power-of-two length, backed by FFTW.
/// Plans are created once per length and shared; execute() is safe to call concurrently.
class FftPlan {
public:
    static const FftPlan& get(std::size_t n);

    std::size_t size() const { return n_; }
    /// out_k = sum_j in_j e^{-2 pi i jk/n}
    void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
    /// out_j = sum_k in_k e^{+2 pi i jk/n} (no 1/n)
    void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;

    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;
    ~FftPlan();

private:
    explicit FftPlan(std::size_t n);
    std::size_t n_;
    void* forward_plan_;
    void* backward_plan_;
};

}  // namespace specres

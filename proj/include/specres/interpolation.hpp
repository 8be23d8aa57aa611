#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace specres {

/// Piecewise cubic Lagrange interpolation of samples at x0 + j*dx. Evaluates to zero more than
/// half a cell outside the sampled range; near the ends the stencil becomes one-sided.
template <class T>
class CubicInterpolator {
public:
    CubicInterpolator(double x0, double dx, std::span<const T> values)
        : x0_(x0), dx_(dx), values_(values.begin(), values.end()) {}

    T operator()(double x) const {
        const auto n = static_cast<long>(values_.size());
        const double s = (x - x0_) / dx_;
        if (!(s >= -0.5 && s <= static_cast<double>(n) - 0.5)) return T{};
        long base = static_cast<long>(std::floor(s)) - 1;
        base = std::clamp(base, 0L, n - 4);
        const double r = s - static_cast<double>(base);
        const double w0 = -(r - 1.0) * (r - 2.0) * (r - 3.0) / 6.0;
        const double w1 = r * (r - 2.0) * (r - 3.0) / 2.0;
        const double w2 = -r * (r - 1.0) * (r - 3.0) / 2.0;
        const double w3 = r * (r - 1.0) * (r - 2.0) / 6.0;
        const T* v = values_.data() + base;
        return w0 * v[0] + w1 * v[1] + w2 * v[2] + w3 * v[3];
    }

private:
    double x0_;
    double dx_;
    std::vector<T> values_;
};

}  // namespace specres

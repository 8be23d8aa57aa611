#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace specres {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t order);

/// Moments int_0^h s^k e^{i w s} ds for k = 0..3.
std::array<cplx, 4> oscillatory_moments(double w, double h);

/// Filon-type weights for int_0^h p(tau) e^{i w tau} dtau where p is the cubic through the four
/// values at tau = nodes[0..3]. Returns the weight of each node value.
std::array<cplx, 4> filon_panel_weights(const std::array<double, 4>& nodes, double w, double h);

/// int over [x0, x0 + (n-1) h] of a(x) e^{i w x} dx with a sampled at x0 + j h and interpolated
/// by local cubics; exact for cubic a at any frequency.
cplx filon_uniform(std::span<const cplx> a, double x0, double h, double w);

}  // namespace specres

#include "specres/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "specres/error.hpp"

namespace specres {

GaussRule gauss_legendre(std::size_t order) {
    if (order < 1) throw InvalidArgument("Gauss-Legendre order must be positive");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const auto n = static_cast<double>(order);
    for (std::size_t i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= order; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

std::array<cplx, 4> oscillatory_moments(double w, double h) {
    std::array<cplx, 4> m{};
    const double theta = w * h;
    if (std::abs(theta) < 2.0) {
        // sum_j (i w h)^j / j! * h^{k+1} / (j+k+1)
        for (int k = 0; k < 4; ++k) {
            cplx term = 1.0;  // (i theta)^j / j!
            cplx sum = 0.0;
            for (int j = 0; j < 60; ++j) {
                const cplx add = term / static_cast<double>(j + k + 1);
                sum += add;
                if (std::abs(add) < 1e-18 * std::abs(sum)) break;
                term *= cplx(0.0, theta) / static_cast<double>(j + 1);
            }
            m[static_cast<std::size_t>(k)] = sum * std::pow(h, k + 1);
        }
        return m;
    }
    const cplx e = std::polar(1.0, theta);
    const cplx iw(0.0, w);
    m[0] = (e - 1.0) / iw;
    double hk = 1.0;
    for (int k = 1; k < 4; ++k) {
        hk *= h;
        m[static_cast<std::size_t>(k)] = (hk * e - static_cast<double>(k) * m[static_cast<std::size_t>(k - 1)]) / iw;
    }
    return m;
}

std::array<cplx, 4> filon_panel_weights(const std::array<double, 4>& nodes, double w, double h) {
    const auto mom = oscillatory_moments(w, h);
    std::array<cplx, 4> out{};
    // Lagrange basis polynomial r expanded in monomials.
    for (std::size_t r = 0; r < 4; ++r) {
        std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
        double denom = 1.0;
        std::size_t deg = 0;
        for (std::size_t q = 0; q < 4; ++q) {
            if (q == r) continue;
            denom *= nodes[r] - nodes[q];
            for (std::size_t k = deg + 2; k-- > 0;) {
                const double shifted = k > 0 ? poly[k - 1] : 0.0;
                poly[k] = shifted - nodes[q] * poly[k];
            }
            ++deg;
        }
        cplx acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) acc += poly[k] * mom[k];
        out[r] = acc / denom;
    }
    return out;
}

cplx filon_uniform(std::span<const cplx> a, double x0, double h, double w) {
    const std::size_t n = a.size();
    if (n < 4) throw InvalidArgument("Filon quadrature needs at least four samples");
    // Interior panels share one set of weights up to the phase e^{i w x_j}.
    const auto inner = filon_panel_weights({-1.0, 0.0, 1.0, 2.0}, w * h, 1.0);
    const auto first = filon_panel_weights({0.0, 1.0, 2.0, 3.0}, w * h, 1.0);
    const auto last = filon_panel_weights({-2.0, -1.0, 0.0, 1.0}, w * h, 1.0);
    cplx total = 0.0;
    const cplx step = std::polar(1.0, w * h);
    cplx phase = std::polar(1.0, w * x0);
    for (std::size_t j = 0; j + 1 < n; ++j, phase *= step) {
        if ((j & 255U) == 0) phase = std::polar(1.0, w * (x0 + static_cast<double>(j) * h));
        cplx panel;
        if (j == 0) {
            panel = first[0] * a[0] + first[1] * a[1] + first[2] * a[2] + first[3] * a[3];
        } else if (j + 2 >= n) {
            panel = last[0] * a[j - 2] + last[1] * a[j - 1] + last[2] * a[j] + last[3] * a[j + 1];
        } else {
            panel = inner[0] * a[j - 1] + inner[1] * a[j] + inner[2] * a[j + 1] + inner[3] * a[j + 2];
        }
        total += phase * panel;
    }
    return total * h;
}

}  // namespace specres

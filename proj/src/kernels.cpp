#include "specres/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specres/error.hpp"
#include "specres/fft.hpp"
#include "specres/quadrature.hpp"
#include "specres/specfun.hpp"

namespace specres {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * kPi);

template <class G>
const G& grid_of(const GridFunction& f, const char* what) {
    const auto* g = std::get_if<G>(&f.disc().grid());
    if (g == nullptr) throw GridMismatch(std::string(what) + ": unexpected grid type");
    return *g;
}

std::size_t fft_size_for(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// out_i = sum_j kernel[i + j] * b[j] for i, j in [0, n); kernel has 2n - 1 entries.
// Several (kernel, b) pairs are summed in the frequency domain.
std::vector<cplx> correlate(const std::vector<std::vector<cplx>>& kernels, const std::vector<std::vector<cplx>>& bs) {
    const std::size_t n = bs.front().size();
    const std::size_t size = fft_size_for(3 * n);
    const FftPlan& plan = FftPlan::get(size);
    std::vector<cplx> acc(size, cplx{}), buf(size), ka(size), kb(size);
    for (std::size_t q = 0; q < kernels.size(); ++q) {
        std::fill(buf.begin(), buf.end(), cplx{});
        std::copy(kernels[q].begin(), kernels[q].end(), buf.begin());
        plan.forward(buf, ka);
        std::fill(buf.begin(), buf.end(), cplx{});
        for (std::size_t j = 0; j < n; ++j) buf[n - 1 - j] = bs[q][j];
        plan.forward(buf, kb);
        for (std::size_t p = 0; p < size; ++p) acc[p] += ka[p] * kb[p];
    }
    plan.backward(acc, buf);
    std::vector<cplx> out(n);
    const double inv = 1.0 / static_cast<double>(size);
    for (std::size_t i = 0; i < n; ++i) out[i] = buf[i + n - 1] * inv;
    return out;
}

// out_i = sum_j kernel[i - j + (ns - 1)] * b[j], i in [0, nt), j in [0, ns); kernel has nt + ns - 1 entries.
std::vector<cplx> convolve(std::span<const double> kernel, std::span<const cplx> b, std::size_t nt) {
    const std::size_t ns = b.size();
    const std::size_t size = fft_size_for(kernel.size() + ns);
    const FftPlan& plan = FftPlan::get(size);
    std::vector<cplx> x(size, cplx{}), y(size, cplx{}), fx(size), fy(size);
    for (std::size_t k = 0; k < kernel.size(); ++k) x[k] = kernel[k];
    std::copy(b.begin(), b.end(), y.begin());
    plan.forward(x, fx);
    plan.forward(y, fy);
    for (std::size_t p = 0; p < size; ++p) fx[p] *= fy[p];
    plan.backward(fx, x);
    std::vector<cplx> out(nt);
    const double inv = 1.0 / static_cast<double>(size);
    for (std::size_t i = 0; i < nt; ++i) out[i] = x[i + ns - 1] * inv;
    return out;
}

// A run of equally spaced nodes x0 + j dx covering the open interval (lo, hi).
struct PvBlock {
    std::size_t offset;
    std::size_t n;
    double x0;
    double lo;
    double hi;
};

// P.v. int g(mu)/(x_i - mu) dmu over the union of the blocks, at every node x_i. The regular part
// sum_j dx (g_j - g_i)/(x_i - x_j) is a Toeplitz product per block pair and runs through the FFT; the
// diagonal term is the limit -g'(x_i) dx and the subtracted constant is integrated exactly.
std::vector<cplx> pv_integral(std::span<const cplx> g, double dx, const std::vector<PvBlock>& blocks) {
    std::vector<cplx> out(g.size(), cplx{});
    for (const auto& t : blocks) {
        for (const auto& s : blocks) {
            const double delta = t.x0 - s.x0;
            const bool same = &t == &s;
            // kernel index d + (ns - 1) for d = i - j
            std::vector<double> k(t.n + s.n - 1);
            for (std::size_t idx = 0; idx < k.size(); ++idx) {
                const double d = static_cast<double>(idx) - static_cast<double>(s.n - 1);
                k[idx] = (same && idx == s.n - 1) ? 0.0 : 1.0 / (delta + d * dx);
            }
            std::vector<double> prefix(k.size() + 1, 0.0);
            for (std::size_t idx = 0; idx < k.size(); ++idx) prefix[idx + 1] = prefix[idx] + k[idx];
            const auto conv = convolve(k, g.subspan(s.offset, s.n), t.n);
            for (std::size_t i = 0; i < t.n; ++i) {
                // sum_j k(i - j) over j in [0, ns): kernel indices i .. i + ns - 1
                const double ksum = prefix[i + s.n] - prefix[i];
                out[t.offset + i] += dx * (conv[i] - g[t.offset + i] * ksum);
            }
        }
        for (std::size_t i = 0; i < t.n; ++i) {
            const std::size_t gi = t.offset + i;
            const double x = t.x0 + static_cast<double>(i) * dx;
            auto at = [&](long j) -> cplx {
                return (j < 0 || j >= static_cast<long>(t.n)) ? cplx{} : g[t.offset + static_cast<std::size_t>(j)];
            };
            const long li = static_cast<long>(i);
            const cplx deriv = (-at(li + 2) + 8.0 * at(li + 1) - 8.0 * at(li - 1) + at(li - 2)) / (12.0 * dx);
            out[gi] -= deriv * dx;
            double log_term = 0.0;
            for (const auto& s : blocks) log_term += std::log(std::abs(x - s.lo) / std::abs(s.hi - x));
            out[gi] += g[gi] * log_term;
        }
    }
    return out;
}

PvBlock block_of(const UniformGrid& g) { return PvBlock{0, g.n, g.x0, g.lower(), g.upper()}; }

void require_cell_centered_on(const UniformGrid& g, double a, double b, const char* what) {
    if (g.rule != NodeRule::Midpoint || std::abs(g.lower() - a) > 1e-12 * (1.0 + std::abs(a)) ||
        std::abs(g.upper() - b) > 1e-12 * (1.0 + std::abs(b))) {
        std::ostringstream msg;
        msg << what << ": expected a cell-centred grid on (" << a << ", " << b << ")";
        throw GridMismatch(msg.str());
    }
}

// Rejects data whose magnitude near an excluded point is not negligible.
void require_clear(std::span<const cplx> values, std::span<const double> points, const std::function<bool(double)>& near,
                   const char* what) {
    double peak = 0.0, close = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double a = std::abs(values[j]);
        peak = std::max(peak, a);
        if (near(points[j])) close = std::max(close, a);
    }
    if (close > 1e-10 * peak) {
        std::ostringstream msg;
        msg << what << ": data does not vanish near the singular edge (relative size " << close / peak << ")";
        throw NumericalRejection(msg.str());
    }
}

// Smooth switch in ln z from 0 below z0 to 1 above 2 z0.
double smooth_switch(double z, double z0) {
    if (z <= z0) return 0.0;
    if (z >= 2.0 * z0) return 1.0;
    const double w = std::log(z / z0) / std::numbers::ln2;
    const double p = std::exp(-1.0 / w), q = std::exp(-1.0 / (1.0 - w));
    return p / (p + q);
}

// Filon weights for the panel [y_j, y_{j+1}] of a log grid with stencil y_{j-1..j+2}: the panel
// integral of a(y) e^{ixy} is y_j e^{i z} sum_q w_q(z) a_{j+q-1} with z = x y_j.
struct LogPanel {
    std::array<double, 4> tau;
    double du;
    double end;

    explicit LogPanel(double du_) : du(du_) {
        for (int q = 0; q < 4; ++q) tau[static_cast<std::size_t>(q)] = std::expm1((q - 1) * du) / du;
        end = tau[2];
    }

    std::array<cplx, 4> weights(double z) const {
        auto w = filon_panel_weights(tau, z * du, end);
        for (auto& v : w) v *= du;
        return w;
    }
};

// int a(y) e^{i x_i y} dy over the log grid at every node x_i, panel by panel.
std::vector<cplx> log_filon(const UniformGrid& u, std::span<const cplx> a) {
    const std::size_t n = u.n;
    const double du = u.dx;
    const LogPanel panel(du);
    std::vector<std::vector<cplx>> kernels(4, std::vector<cplx>(2 * n - 1));
    for (std::size_t s = 0; s < 2 * n - 1; ++s) {
        const double z = std::exp(2.0 * u.x0 + static_cast<double>(s) * du);
        const auto w = panel.weights(z);
        const cplx e = std::polar(1.0, z);
        for (std::size_t q = 0; q < 4; ++q) kernels[q][s] = e * w[q];
    }
    std::vector<std::vector<cplx>> bs(4, std::vector<cplx>(n, cplx{}));
    for (std::size_t q = 0; q < 4; ++q) {
        for (std::size_t j = 0; j < n; ++j) {
            const long src = static_cast<long>(j) + static_cast<long>(q) - 1;
            if (src >= 0 && src < static_cast<long>(n)) bs[q][j] = std::exp(u[j]) * a[static_cast<std::size_t>(src)];
        }
    }
    return correlate(kernels, bs);
}

}  // namespace

double edge_weight(const GridFunction& f, double fraction) {
    const std::size_t n = f.size();
    const std::size_t count = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(n)));
    const auto w = f.disc().weights();
    double edge = 0.0, total = 0.0;
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto v = f.component(c);
        for (std::size_t j = 0; j < n; ++j) {
            const double e = std::norm(v[j]) * w[j];
            total += e;
            if (j < count || j >= n - count) edge += e;
        }
    }
    return total > 0.0 ? std::sqrt(edge / total) : 0.0;
}

GridFunction hilbert_pv(const GridFunction& f) {
    const auto& g = grid_of<UniformGrid>(f, "hilbert_pv");
    GridFunction out(f.space(), f.components());
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto pv = pv_integral(f.component(c), g.dx, {block_of(g)});
        auto dst = out.component(c);
        for (std::size_t j = 0; j < pv.size(); ++j) dst[j] = pv[j] / kPi;
    }
    return out;
}

GridFunction hilbert_multiplier(const GridFunction& f, std::size_t pad_factor) {
    if (pad_factor == 0) {
        const auto& g = grid_of<UniformGrid>(f, "hilbert_multiplier");
        const std::size_t n = g.n;
        std::vector<double> kernel(2 * n - 1, 0.0);
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            const auto j = static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n - 1);
            if (j % 2 != 0) kernel[k] = 2.0 / (kPi * static_cast<double>(j));
        }
        GridFunction out(f.space(), f.components());
        for (std::size_t c = 0; c < f.components(); ++c) {
            const auto v = convolve(kernel, f.component(c), n);
            std::copy(v.begin(), v.end(), out.component(c).begin());
        }
        return out;
    }
    const Symbol sign{"-i sign(k)",
                      [](double k) { return k > 0.0 ? cplx(0.0, -1.0) : (k < 0.0 ? cplx(0.0, 1.0) : cplx{}); },
                      cplx(0.0, 1.0), cplx(0.0, -1.0)};
    return apply_symbol_D(sign, f, pad_factor);
}

GridFunction finite_hilbert(double a, double b, const GridFunction& f) {
    if (!(b > a)) throw InvalidArgument("finite_hilbert requires b > a");
    const auto& g = grid_of<UniformGrid>(f, "finite_hilbert");
    require_cell_centered_on(g, a, b, "finite_hilbert");
    return hilbert_pv(f);
}

GridFunction weighted_finite_hilbert(const GridFunction& f) {
    const auto& g = grid_of<UniformGrid>(f, "weighted_finite_hilbert");
    require_cell_centered_on(g, -2.0, 2.0, "weighted_finite_hilbert");
    const auto x = f.disc().points();
    auto beta = [](double l) { return std::pow(4.0 - l * l, 0.25); };
    GridFunction out(f.space(), f.components());
    const cplx prefactor = 1.0 / cplx(0.0, 2.0 * kPi);
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto src = f.component(c);
        std::vector<cplx> h(src.size());
        for (std::size_t j = 0; j < h.size(); ++j) h[j] = src[j] / beta(x[j]);
        require_clear(h, x, [](double l) { return std::abs(l) > 1.98; }, "weighted_finite_hilbert");
        const auto pv = pv_integral(h, g.dx, {block_of(g)});
        auto dst = out.component(c);
        for (std::size_t j = 0; j < h.size(); ++j) dst[j] = prefactor * beta(x[j]) * pv[j];
    }
    return out;
}

GridFunction dirac_kernel(double mass, const GridFunction& f) {
    if (!(mass > 0.0)) throw InvalidArgument("dirac_kernel requires mass > 0");
    const auto& g = grid_of<SigmaGrid>(f, "dirac_kernel");
    if (std::abs(g.mass - mass) > 1e-12 * mass) throw GridMismatch("dirac_kernel: grid mass differs from the operator mass");
    if (f.components() != 2) throw InvalidArgument("dirac_kernel acts on two-component functions");
    const std::size_t half = g.branch_size();
    const double dx = g.spacing();
    const std::vector<PvBlock> blocks{{0, half, g[0], -g.outer, -g.mass}, {half, half, g[half], g.mass, g.outer}};
    const auto x = f.disc().points();
    GridFunction out(f.space(), 2);
    for (std::size_t c = 0; c < 2; ++c) {
        const double power = c == 0 ? 0.25 : -0.25;
        auto b = [&](double l) { return std::pow((l - mass) / (l + mass), power); };
        const auto src = f.component(c);
        std::vector<cplx> h(src.size());
        for (std::size_t j = 0; j < h.size(); ++j) h[j] = b(x[j]) * src[j];
        require_clear(h, x, [&](double l) { return std::abs(l) < 1.02 * mass || std::abs(l) > g.outer - 0.02 * mass; },
                      "dirac_kernel");
        const auto pv = pv_integral(h, dx, blocks);
        auto dst = out.component(c);
        for (std::size_t j = 0; j < h.size(); ++j) dst[j] = pv[j] / (kPi * b(x[j]));
    }
    return out;
}

GridFunction hankel(double m, const GridFunction& f) {
    if (!(m >= 0.0)) throw InvalidArgument("hankel: order must satisfy m >= 0");
    const auto& lg = grid_of<LogGrid>(f, "hankel");
    if (f.disc().measure() != Measure::Lebesgue) throw GridMismatch("hankel acts on L^2(R_+, dx)");
    const double edge = edge_weight(f, 1.0 / 64.0);
    if (edge > 1e-5) {
        std::ostringstream msg;
        msg << "hankel: input carries relative weight " << edge
            << " near the ends of the log grid; enlarge the half width U (currently " << lg.u.upper() << ")";
        throw NumericalRejection(msg.str());
    }
    const UniformGrid& u = lg.u;
    const std::size_t n = u.n;
    const double du = u.dx;
    const double z0 = std::max(30.0, 3.0 * m * m);
    const double phase = 0.5 * m * kPi + 0.25 * kPi;
    const double c = 0.5 * std::sqrt(2.0 / kPi);
    auto z_at = [&](long s) { return std::exp(2.0 * u.x0 + static_cast<double>(s) * du); };
    // chi(z) (P + iQ)(z) at z_s for s in [-1, 2n]
    std::vector<cplx> amp(2 * n + 2, cplx{});
    for (std::size_t idx = 0; idx < amp.size(); ++idx) {
        const double z = z_at(static_cast<long>(idx) - 1);
        const double chi = smooth_switch(z, z0);
        if (chi > 0.0) amp[idx] = chi * bessel_modulation(m, z);
    }
    const LogPanel panel(du);
    std::vector<std::vector<cplx>> kernels(4, std::vector<cplx>(2 * n - 1, cplx{}));
    for (std::size_t s = 0; s < 2 * n - 1; ++s) {
        const double z = z_at(static_cast<long>(s));
        const double chi = smooth_switch(z, z0);
        if (chi < 1.0) kernels[1][s] += std::sqrt(z) * bessel_j(m, z) * (1.0 - chi) * du;
        if (z * std::exp(2.0 * du) < z0) continue;
        const auto w = panel.weights(z);
        const cplx ep = std::polar(1.0, z - phase);
        for (std::size_t q = 0; q < 4; ++q) {
            const cplx b = amp[s + q];  // index (s + q - 1) + 1
            kernels[q][s] += c * (ep * w[q] * b + std::conj(ep * w[q] * b));
        }
    }
    std::vector<std::vector<cplx>> bs(4, std::vector<cplx>(n, cplx{}));
    const auto src = f.component(0);
    for (std::size_t q = 0; q < 4; ++q) {
        for (std::size_t j = 0; j < n; ++j) {
            const long k = static_cast<long>(j) + static_cast<long>(q) - 1;
            if (k >= 0 && k < static_cast<long>(n)) bs[q][j] = std::exp(u[j]) * src[static_cast<std::size_t>(k)];
        }
    }
    GridFunction out(f.space(), f.components());
    auto v = correlate(kernels, bs);
    std::copy(v.begin(), v.end(), out.component(0).begin());
    if (f.components() == 2) {
        GridFunction second(f.space(), std::vector<cplx>(f.component(1).begin(), f.component(1).end()));
        const auto h2 = hankel(m, second);
        std::copy(h2.values().begin(), h2.values().end(), out.component(1).begin());
    }
    return out;
}

GridFunction inversion_j(const GridFunction& f) {
    const auto& lg = grid_of<LogGrid>(f, "inversion_j");
    if (!lg.symmetric_in_u()) throw GridMismatch("inversion_j requires a log grid symmetric in ln x");
    if (f.disc().measure() != Measure::Lebesgue) throw GridMismatch("inversion_j acts on L^2(R_+, dx)");
    const std::size_t n = lg.size();
    GridFunction out(f.space(), f.components());
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto src = f.component(c);
        auto dst = out.component(c);
        for (std::size_t i = 0; i < n; ++i) dst[i] = src[n - 1 - i] * std::exp(-lg.u[i]);
    }
    return out;
}

GridFunction fourier_sph(int ell, const GridFunction& g) {
    if (ell < 0) throw InvalidArgument("fourier_sph requires ell >= 0");
    const auto& lg = grid_of<LogGrid>(g, "fourier_sph");
    if (g.disc().measure() != Measure::Radial3D) throw GridMismatch("fourier_sph acts on L^2(R_+, r^2 dr)");
    const auto r = g.disc().points();
    GridFunction flat(make_space(lg, Measure::Lebesgue), g.components());
    for (std::size_t c = 0; c < g.components(); ++c) {
        const auto src = g.component(c);
        auto dst = flat.component(c);
        for (std::size_t j = 0; j < r.size(); ++j) dst[j] = r[j] * src[j];
    }
    const auto h = hankel(ell + 0.5, flat);
    cplx phase = 1.0;
    for (int k = 0; k < ell; ++k) phase *= cplx(0.0, -1.0);
    GridFunction out(g.space(), g.components());
    for (std::size_t c = 0; c < g.components(); ++c) {
        const auto src = h.component(c);
        auto dst = out.component(c);
        for (std::size_t j = 0; j < r.size(); ++j) dst[j] = phase * src[j] / r[j];
    }
    return out;
}

GridFunction t3d_kernel(int ell, const GridFunction& g) {
    const auto p = fourier_sph(ell, g);
    const auto& lg = grid_of<LogGrid>(g, "t3d_kernel");
    const auto r = g.disc().points();
    GridFunction out(g.space(), g.components());
    for (std::size_t c = 0; c < g.components(); ++c) {
        const auto src = p.component(c);
        std::vector<cplx> a(r.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[j] = r[j] * src[j];
        const auto v = log_filon(lg.u, a);
        auto dst = out.component(c);
        for (std::size_t i = 0; i < v.size(); ++i) dst[i] = cplx(0.0, -kInvSqrtTwoPi) * v[i] / r[i];
    }
    return out;
}

GridFunction fourier_sph_profile(int ell, const PointRule& h, double k_lo, double k_hi, const Space& target,
                                 std::size_t nodes) {
    if (ell < 0) throw InvalidArgument("fourier_sph_profile requires ell >= 0");
    if (!(k_hi > k_lo) || !(k_lo > 0.0)) throw InvalidArgument("profile support must satisfy 0 < k_lo < k_hi");
    if (nodes < 8) throw InvalidArgument("profile needs at least eight nodes");
    if (target->measure() != Measure::Radial3D) throw GridMismatch("fourier_sph acts on L^2(R_+, r^2 dr)");
    const double step = (k_hi - k_lo) / static_cast<double>(nodes - 1);
    std::vector<double> kappa(nodes);
    std::vector<cplx> hv(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        kappa[j] = k_lo + static_cast<double>(j) * step;
        hv[j] = h(kappa[j]);
        if (!std::isfinite(hv[j].real()) || !std::isfinite(hv[j].imag())) throw NonFiniteSample(j, kappa[j]);
    }
    const auto L = static_cast<std::size_t>(ell);
    // j_ell(z) = z^ell sum_p (-z^2/2)^p / (p! (2 ell + 2p + 1)!!), integrated against the moments
    constexpr std::size_t kTerms = 24;
    std::vector<cplx> series(kTerms);
    double dfact = 1.0;
    for (std::size_t k = 1; k <= 2 * L + 1; k += 2) dfact *= static_cast<double>(k);
    double coef = 1.0 / dfact;
    for (std::size_t p = 0; p < kTerms; ++p) {
        if (p > 0) coef *= -0.5 / (static_cast<double>(p) * static_cast<double>(2 * L + 2 * p + 1));
        const double q = static_cast<double>(L + 2 + 2 * p);
        cplx moment{};
        for (std::size_t j = 0; j < nodes; ++j) moment += std::pow(kappa[j], q) * hv[j];
        series[p] = coef * moment * step;  // trapezoid: h vanishes at both ends
    }
    // 2 j_ell(z) = h1(z) + h2(z), h1(z) = (-i)^{ell+1} e^{iz}/z sum_k i^k c_k (2z)^{-k},
    // c_k = (ell+k)!/(k! (ell-k)!), h2 the same with i -> -i
    std::vector<double> c(L + 1);
    std::vector<std::vector<cplx>> a(L + 1, std::vector<cplx>(nodes));
    for (std::size_t k = 0; k <= L; ++k) {
        c[k] = std::tgamma(static_cast<double>(L + k + 1)) /
               (std::tgamma(static_cast<double>(k + 1)) * std::tgamma(static_cast<double>(L - k + 1)));
        for (std::size_t j = 0; j < nodes; ++j) a[k][j] = std::pow(kappa[j], 1.0 - static_cast<double>(k)) * hv[j];
    }
    auto ipow = [](cplx base, std::size_t e) {
        cplx v = 1.0;
        for (std::size_t k = 0; k < e; ++k) v *= base;
        return v;
    };
    const cplx I(0.0, 1.0);
    const cplx prefactor = ipow(-I, L) * std::sqrt(2.0 / kPi);
    const auto r = target->points();
    GridFunction out(target);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double x = r[i];
        cplx s{};
        if (x * k_hi <= 1.0) {
            double xp = std::pow(x, static_cast<double>(L));
            for (std::size_t p = 0; p < kTerms; ++p, xp *= x * x) s += series[p] * xp;
        } else {
            for (std::size_t k = 0; k <= L; ++k) {
                const double scale = c[k] * std::pow(2.0 * x, -static_cast<double>(k)) / x;
                const cplx plus = ipow(-I, L + 1) * ipow(I, k) * filon_uniform(a[k], k_lo, step, x);
                const cplx minus = ipow(I, L + 1) * ipow(-I, k) * filon_uniform(a[k], k_lo, step, -x);
                s += 0.5 * scale * (plus + minus);
            }
        }
        out[i] = prefactor * s;
    }
    return out;
}

GridFunction t3d_from_profile(int ell, const PointRule& h, double k_lo, double k_hi, const Space& target,
                              std::size_t nodes) {
    if (ell < 0) throw InvalidArgument("t3d requires ell >= 0");
    if (!(k_hi > k_lo) || k_lo < 0.0) throw InvalidArgument("t3d profile support must satisfy 0 <= k_lo < k_hi");
    if (nodes < 8) throw InvalidArgument("t3d profile needs at least eight nodes");
    if (target->measure() != Measure::Radial3D) throw GridMismatch("t3d acts on L^2(R_+, r^2 dr)");
    const double step = (k_hi - k_lo) / static_cast<double>(nodes - 1);
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    std::vector<cplx> a(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        const double k = k_lo + static_cast<double>(j) * step;
        a[j] = sign * k * h(k);
        if (!std::isfinite(a[j].real()) || !std::isfinite(a[j].imag())) throw NonFiniteSample(j, k);
    }
    const auto r = target->points();
    GridFunction out(target);
    for (std::size_t i = 0; i < r.size(); ++i) {
        out[i] = cplx(0.0, -kInvSqrtTwoPi) * filon_uniform(a, k_lo, step, r[i]) / r[i];
    }
    return out;
}

}  // namespace specres

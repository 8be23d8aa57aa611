#include "specres/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "specres/error.hpp"
#include "specres/fft.hpp"
#include "specres/interpolation.hpp"
#include "specres/quadrature.hpp"
#include "specres/specfun.hpp"

namespace specres {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

}  // namespace

MatrixSymbol MatrixSymbol::diagonal(std::string name, Symbol a, Symbol d) {
    const Symbol zero = constant_symbol(0.0);
    return MatrixSymbol{std::move(name), {std::move(a), zero, zero, std::move(d)}};
}

MatrixSymbol MatrixSymbol::off_diagonal(std::string name, Symbol upper, Symbol lower) {
    const Symbol zero = constant_symbol(0.0);
    return MatrixSymbol{std::move(name), {zero, std::move(upper), std::move(lower), zero}};
}

bool MatrixSymbol::is_off_diagonal() const { return entry[0].name == "0" && entry[3].name == "0"; }

Symbol constant_symbol(cplx value) {
    std::ostringstream name;
    if (value.imag() == 0.0) {
        name << value.real();
    } else {
        name << value;
    }
    return Symbol{name.str(), [value](double) { return value; }, value, value};
}

Symbol product(const Symbol& a, const Symbol& b) {
    Symbol out{a.name + "*" + b.name, [fa = a.eval, fb = b.eval](double t) { return fa(t) * fb(t); }, {}, {}};
    if (a.limit_minus && b.limit_minus) out.limit_minus = *a.limit_minus * *b.limit_minus;
    if (a.limit_plus && b.limit_plus) out.limit_plus = *a.limit_plus * *b.limit_plus;
    return out;
}

Symbol reciprocal(const Symbol& a) {
    Symbol out{"1/" + a.name, [fa = a.eval](double t) { return 1.0 / fa(t); }, {}, {}};
    if (a.limit_minus && *a.limit_minus != 0.0) out.limit_minus = 1.0 / *a.limit_minus;
    if (a.limit_plus && *a.limit_plus != 0.0) out.limit_plus = 1.0 / *a.limit_plus;
    return out;
}

Symbol reflected(const Symbol& a) {
    return Symbol{a.name + "(-t)", [fa = a.eval](double t) { return fa(-t); }, a.limit_plus, a.limit_minus};
}

void check_limits(const Symbol& s) {
    constexpr double kFar = 1e3;
    constexpr double kTol = 1e-2;
    if (s.limit_minus && std::abs(s(-kFar) - *s.limit_minus) > kTol) {
        throw InvalidArgument("symbol " + s.name + " does not approach its declared limit at -inf");
    }
    if (s.limit_plus && std::abs(s(kFar) - *s.limit_plus) > kTol) {
        throw InvalidArgument("symbol " + s.name + " does not approach its declared limit at +inf");
    }
}

// ---------------------------------------------------------------------------------------------
// SpectralEngine

SpectralEngine SpectralEngine::fourier(const UniformGrid& grid, std::size_t pad_factor) {
    grid.validate();
    if (!is_power_of_two(pad_factor)) throw InvalidArgument("pad factor must be a power of two");
    SpectralEngine e;
    e.kind_ = Kind::Fourier;
    e.n_ = grid.n;
    e.padded_ = grid.n * pad_factor;
    e.offset_ = (e.padded_ - e.n_) / 2;
    const double dk = kTwoPi / (static_cast<double>(e.padded_) * grid.dx);
    e.freq_.resize(e.padded_);
    for (std::size_t q = 0; q < e.padded_; ++q) {
        const double idx = q < e.padded_ / 2 ? static_cast<double>(q) : static_cast<double>(q) - static_cast<double>(e.padded_);
        e.freq_[q] = idx * dk;
    }
    e.in_scale_.assign(e.n_, 1.0);
    return e;
}

SpectralEngine SpectralEngine::mellin(const LogGrid& grid, Measure measure) {
    SpectralEngine e = fourier(grid.u, 1);
    e.kind_ = Kind::Mellin;
    const double d = measure == Measure::Radial3D ? 3.0 : 1.0;
    for (std::size_t j = 0; j < e.n_; ++j) e.in_scale_[j] = std::exp(0.5 * d * grid.u[j]);
    for (auto& t : e.freq_) t *= kMellinOrientation;
    return e;
}

std::vector<cplx> SpectralEngine::to_spectral(std::span<const cplx> values) const {
    if (values.size() != n_) throw GridMismatch("sample count does not match the engine grid");
    std::vector<cplx> buffer(padded_, cplx{});
    for (std::size_t j = 0; j < n_; ++j) buffer[offset_ + j] = values[j] * in_scale_[j];
    std::vector<cplx> out(padded_);
    FftPlan::get(padded_).forward(buffer, out);
    return out;
}

std::vector<cplx> SpectralEngine::from_spectral(std::vector<cplx> spectrum) const {
    if (spectrum.size() != padded_) throw GridMismatch("spectrum length does not match the engine");
    std::vector<cplx> buffer(padded_);
    FftPlan::get(padded_).backward(spectrum, buffer);
    const double inv = 1.0 / static_cast<double>(padded_);
    std::vector<cplx> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = buffer[offset_ + j] * (inv / in_scale_[j]);
    return out;
}

std::vector<cplx> SpectralEngine::sampled(const Symbol& sym) const {
    std::vector<cplx> s(padded_);
    for (std::size_t q = 0; q < padded_; ++q) {
        s[q] = sym(freq_[q]);
        if (!std::isfinite(s[q].real()) || !std::isfinite(s[q].imag())) {
            throw InvalidArgument("symbol " + sym.name + " is not finite at spectral point " + std::to_string(freq_[q]));
        }
    }
    return s;
}

std::vector<cplx> SpectralEngine::apply(const Symbol& sym, std::span<const cplx> values) const {
    auto spec = to_spectral(values);
    const auto s = sampled(sym);
    for (std::size_t q = 0; q < padded_; ++q) spec[q] *= s[q];
    return from_spectral(std::move(spec));
}

void SpectralEngine::apply(const MatrixSymbol& sym, std::span<const cplx> first, std::span<const cplx> second,
                           std::span<cplx> out_first, std::span<cplx> out_second) const {
    const auto a = to_spectral(first);
    const auto b = to_spectral(second);
    std::array<std::vector<cplx>, 4> s;
    for (std::size_t k = 0; k < 4; ++k) s[k] = sampled(sym.entry[k]);
    std::vector<cplx> c(padded_), d(padded_);
    for (std::size_t q = 0; q < padded_; ++q) {
        c[q] = s[0][q] * a[q] + s[1][q] * b[q];
        d[q] = s[2][q] * a[q] + s[3][q] * b[q];
    }
    const auto x = from_spectral(std::move(c));
    const auto y = from_spectral(std::move(d));
    std::copy(x.begin(), x.end(), out_first.begin());
    std::copy(y.begin(), y.end(), out_second.begin());
}

// ---------------------------------------------------------------------------------------------
// Grid-function level transforms

UniformGrid dual_grid(const UniformGrid& grid) {
    grid.validate();
    const double dk = kTwoPi / (static_cast<double>(grid.n) * grid.dx);
    return UniformGrid{-0.5 * static_cast<double>(grid.n) * dk, dk, grid.n, NodeRule::Midpoint};
}

namespace {

const UniformGrid& uniform_of(const GridFunction& f) {
    const auto* g = std::get_if<UniformGrid>(&f.disc().grid());
    if (g == nullptr) throw GridMismatch("operation requires a uniform grid");
    return *g;
}

const LogGrid& log_of(const GridFunction& f) {
    const auto* g = std::get_if<LogGrid>(&f.disc().grid());
    if (g == nullptr) throw GridMismatch("operation requires a log grid");
    return *g;
}

// F_p = dx/sqrt(2 pi) e^{-i k_p x0} DFT[(-1)^j f_j]_p with k_p = (p - n/2) dk.
std::vector<cplx> unitary_dft(std::span<const cplx> f, const UniformGrid& g) {
    const std::size_t n = g.n;
    std::vector<cplx> in(n), out(n);
    for (std::size_t j = 0; j < n; ++j) in[j] = (j % 2 == 0) ? f[j] : -f[j];
    FftPlan::get(n).forward(in, out);
    const UniformGrid k = dual_grid(g);
    for (std::size_t p = 0; p < n; ++p) out[p] *= g.dx * kInvSqrtTwoPi * std::polar(1.0, -k[p] * g.x0);
    return out;
}

std::vector<cplx> unitary_idft(std::span<const cplx> spectrum, const UniformGrid& g) {
    const std::size_t n = g.n;
    const UniformGrid k = dual_grid(g);
    std::vector<cplx> in(n), out(n);
    for (std::size_t p = 0; p < n; ++p) in[p] = spectrum[p] * std::polar(1.0, k[p] * g.x0);
    FftPlan::get(n).backward(in, out);
    for (std::size_t j = 0; j < n; ++j) out[j] *= ((j % 2 == 0) ? 1.0 : -1.0) * k.dx * kInvSqrtTwoPi;
    return out;
}

}  // namespace

GridFunction fourier(const GridFunction& f) {
    const UniformGrid& g = uniform_of(f);
    auto space = make_space(dual_grid(g));
    GridFunction out(space, f.components());
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto v = unitary_dft(f.component(c), g);
        std::copy(v.begin(), v.end(), out.component(c).begin());
    }
    return out;
}

GridFunction inverse_fourier(const GridFunction& spectrum, const UniformGrid& target) {
    if (!(uniform_of(spectrum) == dual_grid(target))) throw GridMismatch("spectrum is not on the dual grid of the target");
    GridFunction out(make_space(target), spectrum.components());
    for (std::size_t c = 0; c < spectrum.components(); ++c) {
        const auto v = unitary_idft(spectrum.component(c), target);
        std::copy(v.begin(), v.end(), out.component(c).begin());
    }
    return out;
}

GridFunction mellin(const GridFunction& f) {
    static_assert(kMellinOrientation == 1, "t-grid layout assumes t = +k");
    const LogGrid& g = log_of(f);
    const double d = f.disc().measure() == Measure::Radial3D ? 3.0 : 1.0;
    GridFunction out(make_space(dual_grid(g.u)), f.components());
    std::vector<cplx> w(g.size());
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto src = f.component(c);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = src[j] * std::exp(0.5 * d * g.u[j]);
        const auto v = unitary_dft(w, g.u);
        std::copy(v.begin(), v.end(), out.component(c).begin());
    }
    return out;
}

namespace {

GridFunction apply_scalar(const SpectralEngine& engine, const Symbol& sym, const GridFunction& f) {
    GridFunction out(f.space(), f.components());
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto v = engine.apply(sym, f.component(c));
        std::copy(v.begin(), v.end(), out.component(c).begin());
    }
    return out;
}

GridFunction apply_matrix(const SpectralEngine& engine, const MatrixSymbol& sym, const GridFunction& f) {
    if (f.components() != 2) throw InvalidArgument("matrix symbols act on two-component functions");
    GridFunction out(f.space(), 2);
    engine.apply(sym, f.component(0), f.component(1), out.component(0), out.component(1));
    return out;
}

}  // namespace

GridFunction apply_symbol_D(const Symbol& sym, const GridFunction& f, std::size_t pad_factor) {
    return apply_scalar(SpectralEngine::fourier(uniform_of(f), pad_factor), sym, f);
}

GridFunction apply_symbol_D(const MatrixSymbol& sym, const GridFunction& f) {
    return apply_matrix(SpectralEngine::fourier(uniform_of(f)), sym, f);
}

GridFunction apply_symbol_A(const Symbol& sym, const GridFunction& f) {
    return apply_scalar(SpectralEngine::mellin(log_of(f), f.disc().measure()), sym, f);
}

GridFunction apply_symbol_A(const MatrixSymbol& sym, const GridFunction& f) {
    return apply_matrix(SpectralEngine::mellin(log_of(f), f.disc().measure()), sym, f);
}

// ---------------------------------------------------------------------------------------------
// Symbols of homogeneous kernels

namespace {

struct PanelIntegrator {
    GaussRule rule = gauss_legendre(16);

    // int_{lo}^{hi} g(v) dv on panels no wider than width(v).
    template <class F, class W>
    cplx operator()(double lo, double hi, const F& g, const W& width) const {
        cplx total = 0.0;
        double a = lo;
        while (a < hi) {
            const double b = std::min(hi, a + width(a));
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            cplx panel = 0.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) panel += rule.weights[k] * g(mid + half * rule.nodes[k]);
            total += half * panel;
            a = b;
        }
        return total;
    }
};

const PanelIntegrator& panels() {
    static const PanelIntegrator p;
    return p;
}

// Tail beyond a truncation point v_end of |g|, assuming exponential decay measured over the last
// few units. Returns +inf if the integrand is not decaying.
double truncated_tail(const std::function<double(double)>& mag, double v_end, double inward) {
    const double at_end = mag(v_end);
    if (at_end == 0.0) return 0.0;
    const double before = mag(v_end + inward);
    const double rate = std::log(before / at_end) / std::abs(inward);
    if (!(rate > 0.05)) return std::numeric_limits<double>::infinity();
    return at_end / rate;
}

// int_Y^inf y^s e^{sign i y} dy by repeated integration by parts; returns the value and the size
// of the last term kept.
std::pair<cplx, double> power_exp_tail(cplx s, double y, int sign) {
    const cplx unit(0.0, static_cast<double>(sign));
    cplx coeff = unit;  // (sign i)^{j+1} s(s-1)...(s-j+1)
    cplx ypow = std::exp(s * std::log(y));
    cplx sum = 0.0;
    double last = std::abs(coeff * ypow);
    double previous = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 80; ++j) {
        const cplx term = coeff * ypow;
        last = std::abs(term);
        if (last > previous) break;
        sum += term;
        if (last < 1e-18) break;
        previous = last;
        coeff *= unit * (s - static_cast<double>(j));
        ypow /= y;
    }
    return {std::polar(1.0, sign * y) * sum, last};
}

// int_Y^inf y^{it} J_nu(y) dy from the large-argument expansion.
cplx bessel_tail(double nu, double t, double y, double tolerance) {
    const double phi = 0.5 * nu * std::numbers::pi + 0.25 * std::numbers::pi;
    const double mu = 4.0 * nu * nu;
    cplx total = 0.0;
    double a = 1.0;
    cplx ik = 1.0;
    double worst = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 40; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            a *= (mu - odd * odd) / (8.0 * k);
            ik *= cplx(0.0, 1.0);
        }
        const double size = std::abs(a) * std::pow(y, -k - 0.5);
        if (size > previous) break;
        if (a == 0.0) break;
        const cplx s(-0.5 - k, t);
        const auto [plus, rp] = power_exp_tail(s, y, +1);
        const auto [minus, rm] = power_exp_tail(s, y, -1);
        total += a * (ik * std::polar(1.0, -phi) * plus + std::conj(ik) * std::polar(1.0, phi) * minus);
        worst = std::max(worst, std::abs(a) * std::max(rp, rm));
        if (size < 1e-18) break;
        previous = size;
    }
    if (worst > tolerance) {
        throw NumericalRejection("oscillatory tail expansion did not converge below tolerance (residual " +
                                 std::to_string(worst) + ")");
    }
    return 0.5 * std::sqrt(2.0 / std::numbers::pi) * total;
}

}  // namespace

cplx mellin_of_slice(const KernelSlice& kernel, double t, double tail_tolerance) {
    const auto& slice = kernel.slice;
    const bool bessel = kernel.bessel_order.has_value();
    const double v_far = bessel ? 40.0 : 60.0;
    const bool cut_lo = kernel.support_lo > 0.0;
    const bool cut_hi = std::isfinite(kernel.support_hi);
    const double v_lo = cut_lo ? std::log(kernel.support_lo) : -v_far;
    double v_hi = cut_hi ? std::log(kernel.support_hi) : v_far;
    double y_tail = 0.0;
    if (bessel) {
        y_tail = std::max(100.0, 4.0 * (std::abs(t) + *kernel.bessel_order * *kernel.bessel_order + 10.0));
        if (!cut_hi || std::log(y_tail) < v_hi) v_hi = std::log(y_tail);
    }
    if (!(v_hi > v_lo)) throw InvalidArgument("kernel support is empty");

    auto integrand = [&](double v) {
        const double y = std::exp(v);
        return slice(y) * std::exp(0.5 * v) * std::polar(1.0, t * v);
    };
    auto width = [&](double v) {
        const double freq = std::abs(t) + (bessel ? std::exp(v) : 0.0);
        return std::min(0.25, 4.0 / std::max(freq, 1e-300));
    };
    cplx value = panels()(v_lo, v_hi, integrand, width);

    auto mag = [&](double v) { return std::abs(slice(std::exp(v))) * std::exp(0.5 * v); };
    double tail = 0.0;
    if (!cut_lo) tail += truncated_tail(mag, v_lo, +4.0);
    if (!cut_hi && !bessel) tail += truncated_tail(mag, v_hi, -4.0);
    if (tail > tail_tolerance) {
        std::ostringstream msg;
        msg << "Mellin quadrature of kernel " << kernel.name << " at t = " << t << ": truncated tail estimate " << tail
            << " exceeds " << tail_tolerance;
        throw NumericalRejection(msg.str());
    }
    if (bessel && !(cut_hi && std::log(y_tail) >= std::log(kernel.support_hi))) {
        value += bessel_tail(*kernel.bessel_order, t, y_tail, tail_tolerance);
    }
    return value;
}

Symbol symbol_from_homogeneous_kernel(const KernelSlice& kernel, const SymbolTableOptions& options) {
    if (!(options.t_max > options.t_min) || !(options.spacing > 0.0)) throw InvalidArgument("invalid symbol table range");
    if (options.spacing > 0.05) throw InvalidArgument("symbol table spacing must not exceed 0.05");
    const auto count = static_cast<std::size_t>(std::ceil((options.t_max - options.t_min) / options.spacing)) + 1;
    if (count < 4) throw InvalidArgument("symbol table needs at least four nodes");
    const double h = (options.t_max - options.t_min) / static_cast<double>(count - 1);
    std::vector<cplx> table(count);
    for (std::size_t j = 0; j < count; ++j) {
        table[j] = mellin_of_slice(kernel, options.t_min + static_cast<double>(j) * h, options.tail_tolerance);
    }
    auto interp = std::make_shared<CubicInterpolator<cplx>>(options.t_min, h, table);
    const double lo = options.t_min, hi = options.t_max, tol = options.tail_tolerance;
    return Symbol{"mellin[" + kernel.name + "]",
                  [interp, kernel, lo, hi, tol](double t) {
                      if (t >= lo && t <= hi) return (*interp)(t);
                      return mellin_of_slice(kernel, t, tol);
                  },
                  {},
                  {}};
}

KernelSlice builtin_kernel(const std::string& name, double m) {
    KernelSlice k;
    k.name = name;
    if (name == "stieltjes") {
        k.slice = [](double y) { return 1.0 / (std::numbers::pi * (1.0 + y)); };
    } else if (name == "hardy") {
        k.slice = [](double) { return 1.0; };
        k.support_hi = 1.0;
    } else if (name == "j_hankel") {
        if (!(m >= 0.0)) throw InvalidArgument("j_hankel kernel requires m >= 0");
        k.slice = [m](double y) { return std::sqrt(y) * bessel_j(m, y); };
        k.bessel_order = m;
    } else {
        throw InvalidArgument("unknown kernel '" + name + "' (expected stieltjes, hardy or j_hankel)");
    }
    return k;
}

Symbol builtin_kernel_symbol(const std::string& name, double m) {
    if (name == "stieltjes") return Symbol{"sech(pi t)", [](double t) { return cplx(sech_pi(t)); }, 0.0, 0.0};
    if (name == "hardy") return Symbol{"1/(1/2+it)", [](double t) { return 1.0 / cplx(0.5, t); }, 0.0, 0.0};
    if (name == "j_hankel") return Symbol{"Xi_m", [m](double t) { return xi_symbol(m, t); }, {}, {}};
    throw InvalidArgument("unknown kernel '" + name + "'");
}

}  // namespace specres

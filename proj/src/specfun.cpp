#include "specres/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "specres/error.hpp"

namespace specres {

void SymbolParams::validate() const {
    if (!(m > -1.0)) throw InvalidArgument("Hankel order must satisfy m > -1");
    if (ell < 0) throw InvalidArgument("angular momentum must be >= 0");
    if (!(mass > 0.0)) throw InvalidArgument("mass must be > 0");
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log Gamma(z) for Re z >= 1/2.
cplx log_gamma_right(cplx z) {
    const cplx zm = z - 1.0;
    cplx series = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (zm + static_cast<double>(k));
    const cplx t = zm + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw InvalidArgument("log_gamma has a pole at non-positive integers");
    }
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_right(1.0 - z);
}

double bessel_j(double nu, double x) {
    if (!(nu >= 0.0) || !(x >= 0.0)) throw InvalidArgument("bessel_j needs nu >= 0 and x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return std::cyl_bessel_j(nu, x);
}

cplx bessel_modulation(double nu, double z) {
    const double mu = 4.0 * nu * nu;
    cplx sum = 1.0;
    cplx ik = 1.0;
    double a = 1.0;  // a_k(nu) / z^k
    double previous = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= (mu - odd * odd) / (8.0 * k * z);
        ik *= cplx(0.0, 1.0);
        const double mag = std::abs(a);
        if (mag > previous) break;
        sum += ik * a;
        if (mag < 1e-17) break;
        previous = mag;
    }
    return sum;
}

cplx xi_symbol(double m, double t) {
    if (!(m > -1.0)) throw InvalidArgument("xi_symbol needs m > -1");
    const cplx a((m + 1.0) / 2.0, t / 2.0);
    const double phase = std::numbers::ln2 * t;
    return std::exp(cplx(0.0, phase) + log_gamma(a) - log_gamma(std::conj(a)));
}

cplx xi_product(double m, double mp, double t) { return xi_symbol(m, -t) * xi_symbol(mp, t); }

cplx xi_product_limit(double m, double mp, int sign) {
    const double s = sign >= 0 ? 1.0 : -1.0;
    return std::polar(1.0, -s * std::numbers::pi * (m - mp) / 2.0);
}

double tanh_pi(double x) { return std::tanh(std::numbers::pi * x); }

double sech_pi(double x) {
    const double y = std::numbers::pi * std::abs(x);
    if (y > 700.0) return 0.0;
    const double e = std::exp(-y);
    return 2.0 * e / (1.0 + e * e);
}

cplx phi_ell(int ell, double x) {
    if (ell < 0) throw InvalidArgument("phi_ell needs ell >= 0");
    const double l = static_cast<double>(ell);
    const cplx first = log_gamma(cplx(0.5 * (l + 1.5), 0.5 * x)) - log_gamma(cplx(0.5 * (l + 1.5), -0.5 * x));
    const cplx second = log_gamma(cplx(0.75, -0.5 * x)) - log_gamma(cplx(0.75, 0.5 * x));
    const cplx prefactor = 0.5 * std::polar(1.0, -std::numbers::pi * l / 2.0);
    return prefactor * std::exp(first + second) * cplx(1.0 + tanh_pi(x), -sech_pi(x));
}

cplx phi_zero_closed_form(double x) { return 0.5 * cplx(1.0 + tanh_pi(x), -sech_pi(x)); }

// b_+^2 = 1 + sech x = (1 + e)^2 / (1 + e^2) with e = e^{-|x|}; likewise b_-^2 = 1 - sech x.
double b_plus(double x) {
    const double e = std::exp(-std::abs(x));
    return (1.0 + e) / std::sqrt(1.0 + e * e);
}

double b_minus(double x) {
    const double ax = std::abs(x);
    const double e = std::exp(-ax);
    const double v = (1.0 - e) / std::sqrt(1.0 + e * e);
    return x < 0.0 ? -v : v;
}

}  // namespace specres

#pragma once

#include <complex>

namespace specres {

using cplx = std::complex<double>;

/// Orders and masses shared by the symbols. Orders are real.
struct SymbolParams {
    double m = 0.0;    ///< Hankel order, m > -1
    int ell = 0;       ///< angular momentum, ell >= 0
    double mass = 1.0; ///< Dirac mass, > 0

    void validate() const;
};

/// Principal branch of log Gamma(z). Lanczos (g = 7) on Re z >= 1/2, reflection below.
/// Throws InvalidArgument at the poles z = 0, -1, -2, ...
cplx log_gamma(cplx z);

/// Bessel function of the first kind J_nu(x) for nu >= 0, x >= 0.
double bessel_j(double nu, double x);

/// Large-argument modulation M(z) = P(z) + i Q(z) = sum_k i^k a_k(nu) z^{-k}, summed up to the smallest
/// term, so that J_nu(z) = sqrt(2/(pi z)) Re[M(z) e^{i(z - nu pi/2 - pi/4)}]. Intended for z >= 20 + nu^2.
cplx bessel_modulation(double nu, double z);

/// Xi_m(t) = e^{i ln2 t} Gamma((m+1+it)/2) / Gamma((m+1-it)/2); unimodular for real m.
cplx xi_symbol(double m, double t);

/// Xi_m(-t) Xi_mp(t), continuous on [-inf, inf] with limits e^{-+ i pi (m-mp)/2} at +-inf.
cplx xi_product(double m, double mp, double t);

/// Limit of xi_product as t -> +inf (sign = +1) or t -> -inf (sign = -1).
cplx xi_product_limit(double m, double mp, int sign);

/// The multiplier for the radial operator on the angular momentum ell sector.
cplx phi_ell(int ell, double x);

/// phi_0 written without Gamma functions: (1 + tanh(pi x) - i sech(pi x)) / 2.
cplx phi_zero_closed_form(double x);

/// Weights b_+(x) = (e^{x/2} + e^{-x/2}) / (e^x + e^{-x})^{1/2} and b_-(x) with a minus sign.
double b_plus(double x);
double b_minus(double x);

/// tanh(pi x) and 1/cosh(pi x), overflow free; sech returns exactly 0 once it underflows.
double tanh_pi(double x);
double sech_pi(double x);

}  // namespace specres

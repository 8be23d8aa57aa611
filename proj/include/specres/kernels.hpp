#pragma once

#include <functional>

#include "specres/diagonal.hpp"
#include "specres/grids.hpp"

namespace specres {

/// (1/pi) P.v. int f(y)/(x-y) dy over the span of a uniform grid, by singularity subtraction
/// with the exact logarithmic correction for the truncated domain.
GridFunction hilbert_pv(const GridFunction& f);

/// The multiplier -i sign(D) on the zero-extended lattice. pad_factor = 0 takes the infinite
/// padding limit: the inverse DFT of the sign over the Brillouin zone, 2/(pi j) at odd offsets,
/// applied as a linear convolution. pad_factor >= 1 zero-extends that many times and applies the
/// sampled symbol with one FFT; its periodic images cost O(1/pad_factor^2).
GridFunction hilbert_multiplier(const GridFunction& f, std::size_t pad_factor = 0);

/// (1/pi) P.v. int_a^b f(mu)/(lambda-mu) dmu on a cell-centred grid of (a, b).
GridFunction finite_hilbert(double a, double b, const GridFunction& f);

/// (1/(2 pi i)) P.v. int_{-2}^{2} beta(lambda)/(lambda-mu) f(mu)/beta(mu) dmu with
/// beta(lambda) = (4 - lambda^2)^{1/4}. Rejects data that does not vanish near +-2.
GridFunction weighted_finite_hilbert(const GridFunction& f);

/// (1/pi) B(lambda)^{-1} P.v. int_Sigma B(mu) F(mu)/(lambda-mu) dmu on a split grid, with
/// B = diag(((l-m)/(l+m))^{1/4}, ((l+m)/(l-m))^{1/4}) / sqrt 2. Rejects data near +-mass.
GridFunction dirac_kernel(double mass, const GridFunction& f);

/// int_0^inf sqrt(xy) J_m(xy) f(y) dy on a log grid. Near z = xy <= 60 the kernel is summed
/// directly; beyond, the large-argument expansion is integrated with Filon weights. Both parts
/// are correlations in ln x + ln y and run through the FFT. Throws NumericalRejection if f
/// carries weight near the ends of the grid.
GridFunction hankel(double m, const GridFunction& f);

/// (J f)(x) = f(1/x)/x, a permutation on a log grid symmetric in ln x.
GridFunction inversion_j(const GridFunction& f);

/// Radial Fourier transform on the angular momentum ell sector of L^2(R_+, r^2 dr):
/// r^{-1} (-i)^ell H_{ell+1/2} (r g).
GridFunction fourier_sph(int ell, const GridFunction& g);

/// [T_ell g](r) = -i (2 pi)^{-1/2} int e^{i kappa r} (kappa r)^{-1} [F_ell g](kappa) kappa^2 dkappa,
/// with F_ell g computed by fourier_sph and the oscillatory integral by Filon weights on the grid.
GridFunction t3d_kernel(int ell, const GridFunction& g);

/// F_ell h for a profile h known pointwise and vanishing outside [k_lo, k_hi], 0 < k_lo: power
/// series of j_ell with the moments of h where r k_hi <= 1, elsewhere the elementary form of j_ell
/// with Filon weights on a uniform grid of `nodes` points. No log-grid transform is involved.
GridFunction fourier_sph_profile(int ell, const PointRule& h, double k_lo, double k_hi, const Space& target,
                                 std::size_t nodes = 2048);

/// T_ell applied to g = F_ell h where h is known pointwise and vanishes outside [k_lo, k_hi]:
/// uses F_ell g = (-1)^ell h and integrates on a uniform kappa grid of `nodes` points.
GridFunction t3d_from_profile(int ell, const PointRule& h, double k_lo, double k_hi, const Space& target,
                              std::size_t nodes = 2048);

/// Relative weight of f within the outermost `fraction` of the nodes at either end.
double edge_weight(const GridFunction& f, double fraction);

}  // namespace specres

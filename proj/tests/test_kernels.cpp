#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/kernels.hpp"

using namespace specres;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(const GridFunction& a, const GridFunction& b) { return distance(a, b) / norm(b); }

// sqrt(2/pi) int h(k) j_ell(rk) k^2 dk times (-i)^ell, by composite Simpson with the standard library Bessel
cplx sph_transform(int ell, const PointRule& h, double lo, double hi, double r) {
    const int panels = 4000;
    const double dk = (hi - lo) / panels;
    cplx s = 0.0;
    for (int j = 0; j <= panels; ++j) {
        const double k = lo + j * dk;
        const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        s += w * h(k) * std::sph_bessel(ell, r * k) * k * k;
    }
    return std::pow(cplx(0.0, -1.0), ell) * std::sqrt(2.0 / kPi) * s * dk / 3.0;
}

}  // namespace

TEST_CASE("principal value Hilbert transform of a Gaussian is Dawson's integral") {
    const auto s = make_space(UniformGrid::symmetric(16.0, 1 << 14));
    const auto f = sample(s, [](double x) { return cplx(std::exp(-x * x)); });
    const auto h = hilbert_pv(f);
    const auto& x = s->points();
    for (std::size_t j = 0; j < x.size(); j += 97) {
        if (std::abs(x[j]) > 6.0) continue;
        CHECK(std::abs(h[j] - 2.0 / std::sqrt(kPi) * oracle::dawson(x[j])) < 1e-7);
    }
}

TEST_CASE("the sign multiplier agrees with the principal value") {
    const auto s = make_space(UniformGrid::symmetric(16.0, 4096));
    const auto f = sample(s, [](double x) { return cplx(x * std::exp(-0.5 * x * x), std::exp(-x * x)); });
    CHECK(rel(hilbert_multiplier(f), hilbert_pv(f)) < 1e-6);
    // a padded transform approaches the lattice limit
    CHECK(rel(hilbert_multiplier(f, 8), hilbert_multiplier(f)) < 1e-2);
}

TEST_CASE("finite Hilbert transform of constants and of a quadratic") {
    const double a = -3.0, b = 7.0;
    const auto s = make_space(UniformGrid::cell_centered(a, b, 4096));
    const auto one = finite_hilbert(a, b, sample(s, [](double) { return cplx(1.0); }));
    const auto& x = s->points();
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] - a < 0.05 * (b - a) || b - x[j] < 0.05 * (b - a)) continue;
        CHECK(std::abs(one[j] - std::log((x[j] - a) / (b - x[j])) / kPi) < 1e-6);
    }
    const auto u = make_space(UniformGrid::cell_centered(0.0, 1.0, 4096));
    const auto q = finite_hilbert(0.0, 1.0, sample(u, [](double m) { return cplx(m * (1.0 - m)); }));
    for (std::size_t j = 0; j < u->size(); j += 31) {
        const double l = u->points()[j];
        if (l < 0.05 || l > 0.95) continue;
        const double exact = (l * (1.0 - l) * std::log(l / (1.0 - l)) + l - 0.5) / kPi;
        CHECK(std::abs(q[j] - exact) < 1e-6);
    }
    CHECK_THROWS_AS(finite_hilbert(0.0, 2.0, sample(u, [](double) { return cplx(1.0); })), GridMismatch);
}

TEST_CASE("kernels reject data that does not vanish at singular edges") {
    const auto pm2 = make_space(UniformGrid::cell_centered(-2.0, 2.0, 1024));
    CHECK_THROWS_AS(weighted_finite_hilbert(sample(pm2, [](double) { return cplx(1.0); })), NumericalRejection);
    CHECK_NOTHROW(weighted_finite_hilbert(sample(pm2, [](double l) { return cplx(bump(l / 1.5)); })));

    const auto sig = make_space(SigmaGrid::make(1.0, 12.0, 1024));
    const auto flat = sample(sig, [](double) { return cplx(1.0); }, [](double) { return cplx(1.0); });
    CHECK_THROWS_AS(dirac_kernel(1.0, flat), NumericalRejection);
    const auto clear = sample(sig, [](double l) { return cplx(bump((l - 4.0) / 2.0)); }, [](double l) { return cplx(bump((l + 4.0) / 2.0)); });
    CHECK_NOTHROW(dirac_kernel(1.0, clear));
    CHECK_THROWS_AS(dirac_kernel(2.0, clear), GridMismatch);
}

TEST_CASE("Hankel transform: Gaussian fixed points and involution") {
    const auto s = make_space(LogGrid::symmetric(30.0, 8192));
    for (double m : {0.0, 0.5, 1.0, 2.5}) {
        const auto f = sample(s, [m](double x) { return cplx(std::pow(x, m + 0.5) * std::exp(-0.5 * x * x)); });
        CHECK(rel(hankel(m, f), f) < 1e-6);
        const auto g = sample(s, [](double x) {
            const double u = std::log(x) + 0.7;
            return cplx(std::exp(-0.5 * u * u / 1.44) / std::sqrt(x));
        });
        CHECK(rel(hankel(m, hankel(m, g)), g) < 1e-6);
    }
}

TEST_CASE("Hankel transform argument checks") {
    const auto s = make_space(LogGrid::symmetric(20.0, 1024));
    const auto wide = sample(s, [](double x) { return cplx(std::exp(-std::log(x) * std::log(x) / 200.0) / std::sqrt(x)); });
    CHECK_THROWS_AS(hankel(0.0, wide), NumericalRejection);
    const auto f = sample(s, [](double x) { return cplx(x * std::exp(-x * x)); });
    CHECK_THROWS_AS(hankel(-0.5, f), InvalidArgument);
    CHECK_THROWS_AS(hankel(0.0, sample(make_space(LogGrid::symmetric(20.0, 1024), Measure::Radial3D), [](double) { return cplx(0.0); })),
                    GridMismatch);
}

TEST_CASE("inversion J is an involutive isometry on symmetric log grids") {
    const auto s = make_space(LogGrid::symmetric(12.0, 512));
    const auto f = sample(s, [](double x) { return cplx(x * std::exp(-x), 1.0 / (1.0 + x * x)); });
    const auto jf = inversion_j(f);
    CHECK(norm(jf) == doctest::Approx(norm(f)).epsilon(1e-12));
    CHECK(distance(inversion_j(jf), f) < 1e-14);
    const auto& x = s->points();
    CHECK(std::abs(jf[100] - f[511 - 100] / x[100]) < 1e-14);
    const auto off = sample(make_space(LogGrid::span(-12.0, 4.0, 512)), [](double) { return cplx(0.0); });
    CHECK_THROWS_AS(inversion_j(off), GridMismatch);
}

TEST_CASE("spherical transform of a compact profile against direct quadrature") {
    const auto s = make_space(LogGrid::span(-20.0, 8.0, 1024), Measure::Radial3D);
    const PointRule h = [](double k) { return cplx(bump((k - 1.5) / 0.75)); };
    for (int ell : {0, 1, 2}) {
        const auto g = fourier_sph_profile(ell, h, 0.75, 2.25, s);
        const auto& r = s->points();
        for (std::size_t j = 0; j < r.size(); j += 53) {
            if (r[j] > 60.0) break;
            CHECK(std::abs(g[j] - sph_transform(ell, h, 0.75, 2.25, r[j])) < 1e-10);
        }
    }
}

TEST_CASE("the grid spherical transform inverts the profile transform") {
    const auto s = make_space(LogGrid::span(-40.0, 16.0, 1 << 14), Measure::Radial3D);
    const PointRule h = [](double k) { return cplx(bump((k - 1.5) / 0.75)); };
    for (int ell : {0, 1}) {
        const auto g = fourier_sph_profile(ell, h, 0.75, 2.25, s);
        const double sign = ell % 2 ? -1.0 : 1.0;
        const auto back = fourier_sph(ell, g);
        const auto expect = sample(s, [&](double k) { return sign * h(k); });
        CHECK(rel(back, expect) < 1e-6);
        CHECK(rel(t3d_kernel(ell, g), t3d_from_profile(ell, h, 0.75, 2.25, s)) < 1e-4);
    }
}

TEST_CASE("edge weight") {
    const auto s = make_space(UniformGrid::symmetric(1.0, 64));
    CHECK(edge_weight(sample(s, [](double) { return cplx(1.0); }), 0.25) == doctest::Approx(std::sqrt(0.5)));
    CHECK(edge_weight(sample(s, [](double x) { return cplx(bump(2.0 * x)); }), 0.25) == 0.0);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specres/error.hpp"
#include "specres/grids.hpp"

using namespace specres;

TEST_CASE("symmetric line grid is cell centred and avoids the origin") {
    const auto g = UniformGrid::symmetric(4.0, 16);
    CHECK(g.symmetric_about_zero());
    CHECK(g.lower() == doctest::Approx(-4.0));
    CHECK(g.upper() == doctest::Approx(4.0));
    for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(g[j] != 0.0);
        CHECK(g[j] == doctest::Approx(-g[g.n - 1 - j]));
    }
    CHECK(g[0] == doctest::Approx(-4.0 + 0.25));
}

TEST_CASE("grid sizes must be powers of two, at least eight") {
    CHECK_THROWS_AS(UniformGrid::symmetric(1.0, 12), InvalidArgument);
    CHECK_THROWS_AS(UniformGrid::symmetric(1.0, 4), InvalidArgument);
    CHECK_THROWS_AS(UniformGrid::cell_centered(1.0, 0.0, 16), InvalidArgument);
    CHECK_THROWS_AS(SigmaGrid::make(1.0, 0.5, 16), InvalidArgument);
    CHECK(is_power_of_two(1024));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(96));
}

TEST_CASE("log grid: inversion maps node j to node n-1-j") {
    const auto g = LogGrid::symmetric(6.0, 64);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[j] * g[g.size() - 1 - j] == doctest::Approx(1.0));
    CHECK(g.symmetric_in_u());
    CHECK_FALSE(LogGrid::span(-6.0, 3.0, 64).symmetric_in_u());
}

TEST_CASE("split grid never samples the gap edges") {
    const auto g = SigmaGrid::make(2.0, 12.0, 64);
    for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(std::abs(g[j]) > 2.0);
        CHECK(std::abs(g[j]) < 12.0);
        CHECK(g.branch(j) == (g[j] < 0 ? -1 : 1));
    }
    CHECK(g[0] == doctest::Approx(-g[g.n - 1]));
}

TEST_CASE("quadrature weights integrate known functions") {
    const auto line = make_space(UniformGrid::symmetric(10.0, 1024));
    const auto f = sample(line, [](double x) { return cplx(std::exp(-x * x)); });
    CHECK(norm(f) * norm(f) == doctest::Approx(std::sqrt(std::numbers::pi / 2.0)).epsilon(1e-12));

    // int_0^inf x^2 e^{-x^2} x^2 dx = 3 sqrt(pi)/8 in r^2 dr
    const auto radial = make_space(LogGrid::symmetric(12.0, 4096), Measure::Radial3D);
    const auto g = sample(radial, [](double r) { return cplx(r * std::exp(-0.5 * r * r)); });
    CHECK(norm(g) * norm(g) == doctest::Approx(3.0 * std::sqrt(std::numbers::pi) / 8.0).epsilon(1e-10));

    const auto closed = make_space(UniformGrid::closed(0.0, 1.0, 64));
    const auto one = sample(closed, [](double) { return cplx(1.0); });
    CHECK(norm(one) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("grid functions on different spaces do not mix") {
    const auto a = make_space(UniformGrid::symmetric(1.0, 16));
    const auto b = make_space(UniformGrid::symmetric(2.0, 16));
    const auto fa = sample(a, [](double x) { return cplx(x); });
    const auto fb = sample(b, [](double x) { return cplx(x); });
    CHECK_THROWS_AS(distance(fa, fb), GridMismatch);
    CHECK_THROWS_AS((void)(fa - fb), GridMismatch);
    // equal grids in separately made spaces are the same space
    const auto a2 = make_space(UniformGrid::symmetric(1.0, 16));
    CHECK(distance(fa, sample(a2, [](double x) { return cplx(x); })) == 0.0);
}

TEST_CASE("sampling reports the first non-finite node") {
    const auto s = make_space(UniformGrid::symmetric(1.0, 16));
    try {
        (void)sample(s, [](double x) { return cplx(x > 0.5 ? std::nan("") : 0.0); });
        FAIL("expected NonFiniteSample");
    } catch (const NonFiniteSample& e) {
        CHECK(e.index() == 12);
    }
}

TEST_CASE("inner product is conjugate linear in the first slot") {
    const auto s = make_space(UniformGrid::symmetric(3.0, 64));
    const auto f = sample(s, [](double x) { return cplx(std::exp(-x * x), x); });
    const auto g = sample(s, [](double x) { return cplx(1.0, -x * x); });
    const cplx i(0, 1);
    CHECK(std::abs(inner(i * f, g) + i * inner(f, g)) < 1e-12);
    CHECK(std::abs(inner(f, f).real() - norm(f) * norm(f)) < 1e-12);
    CHECK(std::abs(inner(f, g) - std::conj(inner(g, f))) < 1e-12);
}

TEST_CASE("two-component functions keep their components apart") {
    const auto s = make_space(UniformGrid::symmetric(1.0, 8));
    const auto f = sample(s, [](double) { return cplx(1.0); }, [](double) { return cplx(0.0, 2.0); });
    CHECK(f.components() == 2);
    CHECK(f.component(0)[3] == cplx(1.0));
    CHECK(f.component(1)[3] == cplx(0.0, 2.0));
    CHECK(norm(f) == doctest::Approx(std::sqrt(2.0 * 5.0)));
}

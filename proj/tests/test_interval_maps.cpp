#include <doctest.h>

#include <cmath>

#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/interval_maps.hpp"

using namespace specres;

namespace {

std::vector<IntervalMap> maps() {
    return {IntervalMap::even_odd(), IntervalMap::ab_interval(-3.0, 7.0), IntervalMap::pm2(), IntervalMap::sigma(2.0)};
}

}  // namespace

TEST_CASE("position inverts energy and the jacobian is the square root of its derivative") {
    for (const auto& m : maps()) {
        for (double x = -4.0; x <= 4.0; x += 0.173) {
            if (m.kind() == IntervalMap::Kind::Sigma && std::abs(x) < 0.05) continue;
            const double l = m.energy(x);
            CHECK(m.position(l) == doctest::Approx(x).epsilon(1e-10));
            const double h = 1e-5;
            const double deriv = (m.energy(x + h) - m.energy(x - h)) / (2.0 * h);
            CHECK(m.jacobian(x) * m.jacobian(x) == doctest::Approx(std::abs(deriv)).epsilon(1e-7));
        }
    }
}

TEST_CASE("split map sends the half lines to the two branches") {
    const auto m = IntervalMap::sigma(1.5);
    CHECK(m.energy(0.3) > 1.5);
    CHECK(m.energy(-0.3) < -1.5);
    CHECK(m.jacobian(-0.3) < 0.0);
    CHECK(m.native_components() == 2);
    CHECK(m.line_components() == 2);
}

TEST_CASE("pointwise forward and adjoint are inverse") {
    const PointRule f = [](double l) { return cplx(std::exp(-l * l), l); };
    for (const auto& m : maps()) {
        std::vector<PointRule> in(m.native_components(), f);
        const auto back = m.adjoint(m.forward(in));
        REQUIRE(back.size() == in.size());
        for (double l : {-4.5, -2.5, -1.0, 0.2, 1.1, 2.2, 3.0, 5.5}) {
            if (m.kind() == IntervalMap::Kind::AbInterval && !(l > -3.0 && l < 7.0)) continue;
            if (m.kind() == IntervalMap::Kind::Pm2 && !(std::abs(l) < 2.0)) continue;
            if (m.kind() == IntervalMap::Kind::Sigma && !(std::abs(l) > 2.0)) continue;
            for (const auto& b : back) CHECK(std::abs(b(l) - f(l)) < 1e-12);
        }
    }
}

TEST_CASE("the even/odd split") {
    const auto m = IntervalMap::even_odd();
    const auto out = m.forward({[](double x) { return cplx(std::exp(-x * x)); }});
    CHECK(std::abs(out[1](0.7)) == 0.0);
    CHECK(out[0](0.7).real() == doctest::Approx(std::sqrt(2.0) * std::exp(-0.49)));
}

TEST_CASE("the adjoint vanishes off the native domain") {
    const auto m = IntervalMap::pm2();
    const auto back = m.adjoint({[](double) { return cplx(1.0); }});
    CHECK(back[0](2.5) == cplx{});
    CHECK(back[0](-2.0) == cplx{});
    const auto s = IntervalMap::sigma(1.0).adjoint({[](double) { return cplx(1.0); }, [](double) { return cplx(1.0); }});
    CHECK(s[0](0.5) == cplx{});
}

TEST_CASE("grid level maps are isometric") {
    const auto line = make_space(UniformGrid::symmetric(24.0, 1 << 16));
    {
        const auto native = make_space(UniformGrid::cell_centered(-3.0, 7.0, 4096));
        const auto f = sample(native, [](double l) { return cplx(bump((l - 2.0) / 4.0), bump((l - 1.0) / 3.0)); });
        const auto m = IntervalMap::ab_interval(-3.0, 7.0);
        const auto g = m.forward(f, line);
        CHECK(norm(g) == doctest::Approx(norm(f)).epsilon(1e-6));
        CHECK(distance(m.adjoint(g, native), f) / norm(f) < 1e-6);
    }
    {
        const auto native = make_space(SigmaGrid::make(1.0, 40.0, 8192));
        const auto f = sample(native, [](double l) { return cplx(bump((l - 3.0) / 1.5)); }, [](double l) { return cplx(bump((l + 4.0) / 2.0)); });
        const auto m = IntervalMap::sigma(1.0);
        const auto g = m.forward(f, line);
        CHECK(g.components() == 2);
        CHECK(norm(g) == doctest::Approx(norm(f)).epsilon(1e-6));
        CHECK(distance(m.adjoint(g, native), f) / norm(f) < 1e-6);
    }
}

TEST_CASE("interpolants are exact for cubics in the grid coordinate") {
    const auto s = make_space(LogGrid::symmetric(4.0, 64));
    const auto f = sample(s, [](double x) { const double u = std::log(x); return cplx(u * u * u - u); });
    const auto ip = interpolant(f);
    for (double x : {0.1, 0.5, 1.3, 20.0}) {
        const double u = std::log(x);
        CHECK(ip(x).real() == doctest::Approx(u * u * u - u).epsilon(1e-11));
    }
    CHECK(ip(-1.0) == cplx{});
    const auto sg = make_space(SigmaGrid::make(1.0, 5.0, 64));
    const auto h = sample(sg, [](double l) { return cplx(l * l); }, [](double l) { return cplx(l); });
    CHECK(interpolant(h, 0)(-2.2).real() == doctest::Approx(4.84));
    CHECK(interpolant(h, 1)(3.3).real() == doctest::Approx(3.3));
    CHECK(interpolant(h, 0)(0.0) == cplx{});
}

TEST_CASE("transported multipliers compose with the energy") {
    const auto m = IntervalMap::pm2();
    const auto t = m.transported([](double l) { return cplx(l * l); });
    CHECK(t(0.4).real() == doctest::Approx(4.0 * std::tanh(0.4) * std::tanh(0.4)));
    CHECK_THROWS_AS(IntervalMap::ab_interval(1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(IntervalMap::sigma(0.0), InvalidArgument);
    CHECK_THROWS_AS(m.forward({}), InvalidArgument);
}

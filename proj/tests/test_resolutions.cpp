#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/specfun.hpp"

using namespace specres;

TEST_CASE("case names parse case-insensitively") {
    CHECK(parse_case("hankel_jxi") == CaseName::HankelJXi);
    CHECK(parse_case("Finite-Hilbert") == CaseName::FiniteHilbert);
    CHECK(all_cases().size() == 6);
    for (const auto c : all_cases()) CHECK(parse_case(case_id(c)) == c);
    CHECK_THROWS_AS(parse_case("NOPE"), InvalidArgument);
}

TEST_CASE("case parameters are validated per case") {
    CaseParams p;
    p.m = -0.5;
    CHECK_THROWS_AS(p.validate(CaseName::HankelJXi), InvalidArgument);
    CHECK_NOTHROW(p.validate(CaseName::FiniteHilbert));
    p = {};
    p.a = 2.0;
    p.b = 1.0;
    CHECK_THROWS_AS(p.validate(CaseName::FiniteHilbert), InvalidArgument);
    p = {};
    p.mass = -1.0;
    CHECK_THROWS_AS(p.validate(CaseName::DiracUpsideDown), InvalidArgument);
    p = {};
    p.ell = -1;
    CHECK_THROWS_AS(p.validate(CaseName::T3D), InvalidArgument);
}

TEST_CASE("case symbols are the expected multipliers") {
    CaseParams p;
    p.m = 1.0;
    const auto hankel = build_case(CaseName::HankelJXi, p);
    const auto fin = build_case(CaseName::FiniteHilbert);
    const auto t3d = build_case(CaseName::T3D);
    for (double t : {-3.0, 0.4, 2.2}) {
        CHECK(std::abs(hankel.symbol(t) - oracle::xi(1.0, t)) < 1e-10);
        CHECK(std::abs(fin.symbol(t) - cplx(0.0, -std::tanh(std::numbers::pi * t / 2.0))) < 1e-14);
        CHECK(std::abs(t3d.symbol(t) - phi_ell(0, t)) < 1e-14);
    }
    CHECK(fin.tolerance == 1e-5);
    CHECK(hankel.tolerance == 1e-4);
}

TEST_CASE("cheap cases pass on a reduced corpus") {
    for (const auto name : {CaseName::FiniteHilbert, CaseName::WeightedFiniteHilbert, CaseName::DiracUpsideDown}) {
        const auto r = evaluate_case(build_case(name), 2);
        CHECK(r.corpus.size() == 2);
        CHECK(r.errors.size() == 2);
        CHECK(r.pass);
        CHECK(r.max_error <= r.tolerance);
    }
}

TEST_CASE("a case with a tolerance it cannot meet reports failure") {
    auto c = build_case(CaseName::FiniteHilbert);
    c.tolerance = 1e-14;
    const auto r = evaluate_case(c, 1);
    CHECK_FALSE(r.pass);
}

TEST_CASE("grid overrides that break the corpus are reported as rejections") {
    GridConfig g;
    g.U = 3.0;
    CHECK_THROWS_AS(evaluate_case(build_case(CaseName::HankelJXi, {}, g)), NumericalRejection);
    g = {};
    g.n = 1000;
    CHECK_THROWS_AS(build_case(CaseName::FiniteHilbert, {}, g), InvalidArgument);
}

TEST_CASE("Xi asymptotics probe tabulates the product and its limit") {
    const auto p = xi_asymptotics_probe(0.0, 1.0);
    CHECK(p.pass);
    REQUIRE(p.rows.size() == 4);
    const cplx lim = xi_product_limit(0.0, 1.0, +1);
    for (const auto& row : p.rows) {
        const cplx v(row[1], row[2]);
        CHECK(std::abs(v - xi_product(0.0, 1.0, row[0])) < 1e-15);
        CHECK(row[3] == doctest::Approx(std::abs(v - lim)));
    }
    CHECK(p.rows.back()[3] == doctest::Approx(0.005).epsilon(0.01));
}

TEST_CASE("compact remainder decays with distance from the origin") {
    const auto p = compact_remainder_probe();
    CHECK(p.pass);
    REQUIRE(p.rows.size() == 7);
    for (std::size_t k = 2; k < p.rows.size(); ++k) CHECK(p.rows[k][1] < p.rows[k - 1][1]);
}

TEST_CASE("interval maps are unitary on their grids") {
    const auto p = unitary_map_probe();
    CHECK(p.pass);
    REQUIRE(p.rows.size() == 4);
    for (const auto& row : p.rows) {
        for (std::size_t k = 1; k < row.size(); ++k) CHECK(row[k] < 1e-6);
    }
}

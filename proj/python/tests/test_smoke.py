import numpy as np
import pytest

import specres


def test_cases_listed():
    assert "HILBERT_EVEN_ODD" in specres.cases()
    assert len(specres.cases()) == 6


def test_finite_hilbert_case_passes():
    r = specres.verify("FINITE_HILBERT", a=0.0, b=1.0)
    assert r["schema"] == "specres-report/1"
    assert r["pass"]
    assert r["max_error"] < 1e-5
    assert "wall_time" not in r


def test_unknown_case_raises():
    with pytest.raises(specres.InvalidArgument):
        specres.verify("NOT_A_CASE")


def test_xi_has_unit_modulus():
    t = np.linspace(-10, 10, 101)
    assert np.max(np.abs(np.abs(specres.xi_symbol(0.5, t)) - 1)) < 1e-12


def test_hilbert_paths_agree_on_gaussian():
    x = specres.line_points(16.0, 4096)
    f = x * np.exp(-x**2 / 2)
    a = specres.hilbert_pv(f, 16.0)
    b = specres.hilbert_multiplier(f, 16.0)
    assert np.linalg.norm(a - b) / np.linalg.norm(f) < 1e-5


def test_hankel_of_gaussian_is_gaussian():
    # x^{m+1/2} e^{-x^2/2} is a fixed point of the order-m transform
    x = specres.log_points(20.0, 4096)
    f = x * np.exp(-x**2 / 2)
    g = specres.hankel(0.5, f, 20.0)
    assert np.max(np.abs(g - f)) < 1e-6


def test_stieltjes_symbol():
    t = np.array([-1.2345, 0.0, 0.777])
    s = specres.kernel_symbol("stieltjes", t)
    assert np.max(np.abs(s - 1 / np.cosh(np.pi * t))) < 1e-8

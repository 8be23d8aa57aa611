"""Kernel quadrature and spectral resolutions of singular integral operators."""

import json

from ._specres import (
    Error,
    GridMismatch,
    InvalidArgument,
    NonFiniteSample,
    NumericalRejection,
    apply_xi,
    cases,
    hankel,
    hilbert_multiplier,
    hilbert_pv,
    inversion_j,
    kernel_symbol,
    line_points,
    log_points,
    phi_ell,
    report_json,
    verify_json,
    xi_symbol,
)


def verify(case, **overrides):
    """Run one case and return its report as a dict."""
    return json.loads(verify_json(case, **overrides))


def report(probes=True):
    """Run every case with its standard parameters (and the probes) and return the aggregate report."""
    return json.loads(report_json(probes))


__all__ = [
    "Error",
    "GridMismatch",
    "InvalidArgument",
    "NonFiniteSample",
    "NumericalRejection",
    "apply_xi",
    "cases",
    "hankel",
    "hilbert_multiplier",
    "hilbert_pv",
    "inversion_j",
    "kernel_symbol",
    "line_points",
    "log_points",
    "phi_ell",
    "report",
    "verify",
    "xi_symbol",
]

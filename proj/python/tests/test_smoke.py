import math

import numpy as np
import pytest

import szego


def test_catalog_and_sections():
    s1 = szego.catalog("S1")
    assert s1.band == 1
    assert abs(s1.scalar_coeff(0) - 1.25) < 1e-14
    t1 = szego.toeplitz_section(s1, 1)
    assert t1.shape == (2, 2)
    assert abs(t1[0, 1] + 0.5) < 1e-14
    assert abs(szego.toeplitz_determinant(s1, 1) - 1.3125) < 1e-12


def test_bo_identity():
    out = szego.bo_verify(szego.catalog("S1"), 4)
    assert out["rel_error"] < 1e-9
    assert abs(out["g"] - 1.0) < 1e-10
    assert abs(out["e"] - 4.0 / 3.0) < 1e-8


def test_g_and_e_constants():
    assert abs(szego.g_of(szego.catalog("S2", {"value": 2})) - 2.0) < 1e-12
    assert abs(szego.e_of(szego.catalog("S1")) - 4.0 / 3.0) < 1e-8


def test_trace_pipeline():
    s3 = szego.catalog("S3")
    z2 = [0, 0, 1]
    assert abs(szego.gf(s3, z2) - 11.0) < 1e-10
    assert abs(szego.trace_f_tn(s3, z2, 4) - 53.0) < 1e-10
    ef = szego.ef(s3, z2, 3.0, 2.5, nodes=256)
    assert abs(ef - (-2.0)) < 1e-6


def test_rate_fit_synthetic():
    ns = [16, 32, 64, 128, 256]
    errors = [n ** -0.5 for n in ns]
    fit = szego.rate_fit(ns, errors, 0.75, 0.75)
    assert math.isclose(fit["slope"], -0.5, abs_tol=1e-12)
    assert fit["pass"]


def test_factorization_and_winding():
    fact = szego.scalar_factorization(szego.catalog("S1"))
    assert fact["right_residual"] < 1e-9
    assert abs(fact["u_plus"].scalar_coeff(1) + 0.5) < 1e-9
    assert szego.winding_number(szego.catalog("chi", {"k": 2})) == 2
    with pytest.raises(szego.NumericalError):
        szego.scalar_factorization(szego.catalog("chi"))


def test_singular_values_roundtrip():
    a = np.diag([3.0, 2.0, 1.0]).astype(complex)
    sv = szego.singular_values(a)
    assert np.allclose(sv, [3.0, 2.0, 1.0])

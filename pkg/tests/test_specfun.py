import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st

from gfnu.errors import DomainError
from gfnu.specfun import JacobiIndex, LaguerreIndex, gauss_legendre, jacobi_eval, laguerre_eval

INDICES = (0.0, 0.5, 1.3)
xs = np.linspace(-1, 1, 41)


@pytest.mark.parametrize("g", INDICES)
@pytest.mark.parametrize("d", INDICES)
@pytest.mark.parametrize("n", range(0, 11))
def test_jacobi_matches_scipy(n, g, d):
    got = jacobi_eval(n, JacobiIndex(g, d), xs)
    want = sc.eval_jacobi(n, g, d, xs)
    np.testing.assert_allclose(got, want, rtol=1e-11, atol=1e-11)


@pytest.mark.parametrize("a", INDICES + (-0.5,))
@pytest.mark.parametrize("n", range(0, 11))
def test_laguerre_matches_scipy(n, a):
    x = np.linspace(0, 30, 61)
    got = laguerre_eval(n, LaguerreIndex(a), x)
    want = sc.eval_genlaguerre(n, a, x)
    np.testing.assert_allclose(got, want, rtol=1e-10, atol=1e-9)


def test_scalar_in_scalar_out():
    assert isinstance(jacobi_eval(3, JacobiIndex(0.5, 1.3), 0.2), float)
    assert isinstance(laguerre_eval(0, LaguerreIndex(0.5), 2.0), float)


def test_index_domain():
    with pytest.raises(DomainError):
        JacobiIndex(-1.0, 0.0)
    with pytest.raises(DomainError):
        LaguerreIndex(-1.5)
    with pytest.raises(DomainError):
        jacobi_eval(-1, JacobiIndex(0, 0), 0.0)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(0, 12), g=st.floats(-0.9, 4), d=st.floats(-0.9, 4))
def test_jacobi_endpoint_value(n, g, d):
    # P_n(1) = binom(n + g, n)
    want = math.exp(math.lgamma(n + g + 1) - math.lgamma(n + 1) - math.lgamma(g + 1))
    assert jacobi_eval(n, JacobiIndex(g, d), 1.0) == pytest.approx(want, rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(0, 12), a=st.floats(-0.9, 4))
def test_laguerre_at_zero(n, a):
    want = math.exp(math.lgamma(n + a + 1) - math.lgamma(n + 1) - math.lgamma(a + 1))
    assert laguerre_eval(n, LaguerreIndex(a), 0.0) == pytest.approx(want, rel=1e-10)


def test_gauss_legendre_polynomial_exact():
    f = lambda x: 5 * x**7 - x**2 + 1
    exact = 5 / 8 * (2**8 - 1) - (2**3 - 1) / 3 + 1
    assert gauss_legendre(f, 1.0, 2.0, npts=8) == pytest.approx(exact, rel=1e-14)


def test_gauss_legendre_panels():
    assert gauss_legendre(np.exp, 0.0, 3.0, npts=8, panels=10) == pytest.approx(math.expm1(3.0), rel=1e-14)


def test_gauss_legendre_domain():
    with pytest.raises(DomainError):
        gauss_legendre(np.exp, 1.0, 1.0)
    with pytest.raises(DomainError):
        gauss_legendre(np.exp, 0.0, math.inf)

import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gfnu.engine import (
    Branch,
    ParametricProblem,
    derive_coeffs,
    energy_residual,
    evaluate_psi,
    perturbed_c9,
    residual_array,
    residual_scale,
    tau_slope,
    wavefunction,
)
from gfnu.errors import DomainError, NonNormalizableError, NoRealSolutionError
from gfnu.gfd import CLASSICAL, FractionalOrder
from gfnu.potentials import HarmonicOscillator


def reference_residual(c1, c2, c3, xi1, xi2, xi3, a, b, n, sign=1):
    """Master condition written out directly from the inputs."""
    K = math.gamma(b) / math.gamma(b - a + 1) * a
    c4 = (K - c1) / 2
    c5 = (c2 - 2 * c3 * K) / 2
    c7 = 2 * c4 * c5 - xi2
    c8 = c4 * c4 + xi3
    c9 = c3 * c7 + c3 * c3 * c8 + c5 * c5 + xi1
    r8, r9 = sign * math.sqrt(c8), math.sqrt(c9)
    return (
        n * K * c2 - (2 * n + 1) * K * c5 + (2 * n + 1) * K * (r9 + c3 * r8)
        + n * (n - 1) * K * K * c3 + c7 + 2 * c3 * c8 + 2 * r8 * r9
    )


problems = st.tuples(
    st.floats(0.2, 3), st.floats(-2, 2), st.sampled_from([0.0, 0.3, 1.0, 1.7]),
    st.floats(0, 5), st.floats(-5, 5), st.floats(0, 5),
    st.floats(0.4, 1.0), st.floats(0.5, 1.0), st.integers(0, 5),
)


@settings(max_examples=150, deadline=None)
@given(args=problems, branch=st.sampled_from(list(Branch)))
def test_residual_matches_reference(args, branch):
    c1, c2, c3, xi1, xi2, xi3, a, b, n = args
    order = FractionalOrder(a, b)
    p = ParametricProblem(c1, c2, c3, xi1, xi2, xi3, order)
    try:
        derive_coeffs(p)
    except NoRealSolutionError:
        assume(False)
    got = energy_residual(p, n, branch)
    want = reference_residual(c1, c2, c3, xi1, xi2, xi3, a, b, n, branch.sign)
    assert abs(got - want) <= 1e-11 * (1 + residual_scale(p, n, branch))
    arr = residual_array(c1, c2, c3, [xi1], [xi2], [xi3], order, n, branch)
    assert arr[0] == pytest.approx(got, rel=1e-12, abs=1e-11 * (1 + residual_scale(p, n, branch)))


def test_c4_frozen():
    # (k1 a - c1)/2 with k1 = 2/sqrt(pi) at a = 0.5, b = 1
    p = ParametricProblem(1.0, 0.0, 0.0, 0.25, 1.0, 0.0, FractionalOrder(0.5, 1.0))
    assert derive_coeffs(p).c4 == pytest.approx(-0.21790520822612186, rel=1e-13)


def test_classical_coefficients():
    p = ParametricProblem(0.5, 0.0, 0.0, 0.25, 1.25, 0.5, CLASSICAL)
    d = derive_coeffs(p)
    assert d.c4 == 0.25
    assert d.c8 == pytest.approx(0.5625)
    assert d.c9 == pytest.approx(0.25)
    assert d.branch_coeffs("pos")[0] == pytest.approx(0.5 + 0.5 - 1.5)


def test_negative_c8_raises():
    p = ParametricProblem(0.5, 0.0, 0.0, 0.25, 1.0, -5.0, CLASSICAL)
    with pytest.raises(NoRealSolutionError) as exc:
        derive_coeffs(p)
    assert exc.value.name == "c8"


def test_negative_c9_raises():
    p = ParametricProblem(0.5, 0.0, 0.0, -5.0, 1.0, 0.0, CLASSICAL)
    with pytest.raises(NoRealSolutionError) as exc:
        derive_coeffs(p)
    assert exc.value.name == "c9"
    assert np.isnan(residual_array(0.5, 0.0, 0.0, [-5.0], [1.0], [0.0], CLASSICAL, 0)[0])


def test_branch_parse():
    assert Branch.parse("neg") is Branch.NEGATIVE_K
    assert Branch.parse("positive_K") is Branch.POSITIVE_K
    with pytest.raises(DomainError):
        Branch.parse("sideways")


def test_perturbation_hook_is_scoped():
    p = ParametricProblem(0.5, 0.0, 0.0, 0.25, 1.25, 0.5, CLASSICAL)
    base = derive_coeffs(p).c9
    with perturbed_c9(1.001):
        assert derive_coeffs(p).c9 == pytest.approx(base * 1.001)
    assert derive_coeffs(p).c9 == base


def test_residual_rejects_negative_n():
    p = ParametricProblem(0.5, 0.0, 0.0, 0.25, 1.25, 0.5, CLASSICAL)
    with pytest.raises(DomainError):
        energy_residual(p, -1)


@pytest.mark.parametrize("n,l", [(0, 0), (1, 0), (2, 1), (3, 2)])
def test_classical_oscillator_wavefunction_shape(n, l):
    spec = HarmonicOscillator(l=l)
    E = spec.closed_form(n)
    p = spec.to_parametric(E)
    assert abs(energy_residual(p, n)) < 1e-12
    assert tau_slope(p) < 0
    w = wavefunction(p, n)
    assert w.exp_scale == pytest.approx(-0.5)
    r = np.linspace(0.2, 4.0, 30)
    got = evaluate_psi(w, p, r**2)
    want = r ** (l + 1) * np.exp(-(r**2) / 2) * sc.eval_genlaguerre(n, l + 0.5, r**2)
    ratio = got / want
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-10)


def test_jacobi_path_requires_domain():
    p = ParametricProblem(1.0, 1.0, 1.0, 1.0, 0.5, 0.3, CLASSICAL)
    w = wavefunction(p, 0)
    with pytest.raises(DomainError):
        evaluate_psi(w, p, 2.0)
    with pytest.raises(DomainError):
        evaluate_psi(w, p, 0.0)


def test_non_normalizable_index():
    # c10 - a <= -1 on the positive branch
    p = ParametricProblem(0.1, 0.0, 0.0, 1.0, 0.0, 4.0, CLASSICAL)
    with pytest.raises(NonNormalizableError):
        wavefunction(p, 0, Branch.POSITIVE_K)

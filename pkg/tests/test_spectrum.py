import math

import numpy as np
import pytest

from gfnu.cases import FRACTIONAL_ORDERS
from gfnu.engine import Branch
from gfnu.errors import DomainError, NoBoundStateError, NonNormalizableError
from gfnu.gfd import CLASSICAL, FractionalOrder
from gfnu.potentials import FAMILIES, HarmonicOscillator, Hulthen, KratzerFues, Morse, PoschlTeller, WoodsSaxon
from gfnu.spectrum import count_nodes, find_roots, normalization, sample, solve_energy, state_wavefunction


def test_find_roots_brackets_all_sign_changes():
    roots = find_roots(lambda x: np.cos(x), 0.0, 10.0)
    np.testing.assert_allclose(roots, [math.pi / 2, 3 * math.pi / 2, 5 * math.pi / 2], rtol=1e-12)


def test_find_roots_skips_nan_gaps():
    f = lambda x: np.where(np.abs(x) < 0.5, np.nan, x)
    assert find_roots(f, -2.0, 2.0) == []


@pytest.mark.parametrize("family", list(FAMILIES))
@pytest.mark.parametrize("order", FRACTIONAL_ORDERS, ids=lambda o: f"a{o.a}-b{o.b}")
def test_root_matches_closed_form(family, order):
    spec = FAMILIES[family]()
    res = solve_energy(spec, 0, order=order)
    assert res.closed_form_energy is not None
    assert abs(res.energy - res.closed_form_energy) <= 1e-8 * (1 + abs(res.closed_form_energy))
    assert abs(res.residual) <= 1e-9 * (1 + res.residual_scale)
    assert "closed-form-mismatch" not in res.flags
    assert "tau-nonnegative" not in res.flags


def test_oscillator_spectrum_with_l_override():
    res = solve_energy(HarmonicOscillator(omega=2.0), 2, l=1)
    assert res.l == 1
    assert res.energy == pytest.approx(2.0 * (4 + 1 + 1.5), rel=1e-10)
    assert res.branch is Branch.NEGATIVE_K


def test_engine_derived_flag():
    res = solve_energy(PoschlTeller(), 0)
    assert res.branch is Branch.POSITIVE_K
    assert "closed-form-engine-derived" in res.flags


def test_no_bound_state_raises():
    with pytest.raises(NoBoundStateError):
        solve_energy(Hulthen(P=2.0, p=1.0), 6)


def test_negative_branch_of_poschl_teller_has_no_root():
    with pytest.raises(NoBoundStateError):
        solve_energy(PoschlTeller(), 0, branch="neg")


def test_bad_n():
    with pytest.raises(DomainError):
        solve_energy(Morse(), -1)
    with pytest.raises(DomainError):
        solve_energy(Morse(), 1.5)


def test_fractional_energy_differs_from_classical():
    spec = KratzerFues()
    e1 = solve_energy(spec, 1).energy
    e2 = solve_energy(spec, 1, order=FractionalOrder(0.8, 1.0)).energy
    assert abs(e1 - e2) > 1e-3


@pytest.mark.parametrize(
    "spec",
    [HarmonicOscillator(l=1), Morse(), KratzerFues(), Hulthen(), WoodsSaxon(V0=80)],
    ids=lambda s: s.family,
)
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_wavefunction_normalized_with_n_nodes(spec, n):
    state = state_wavefunction(spec, n)
    assert normalization(state) == pytest.approx(1.0, abs=1e-8)
    assert count_nodes(state) == n
    r, s, psi = sample(state, 101)
    assert len(r) == len(s) == len(psi) == 101
    peak = np.max(np.abs(psi))
    assert abs(psi[0]) < 1e-6 * peak and abs(psi[-1]) < 1e-6 * peak


def test_fractional_wavefunction_normalizes():
    state = state_wavefunction(KratzerFues(), 1, order=FractionalOrder(0.85, 0.8))
    assert normalization(state) == pytest.approx(1.0, abs=1e-8)


def test_poschl_teller_wavefunction_not_sampleable():
    with pytest.raises((DomainError, NonNormalizableError)):
        state_wavefunction(PoschlTeller(), 0)


def test_sample_needs_two_points():
    state = state_wavefunction(HarmonicOscillator(), 0)
    with pytest.raises(DomainError):
        sample(state, 1)


def test_classical_default_order():
    assert solve_energy(Morse(), 0).energy == pytest.approx(solve_energy(Morse(), 0, order=CLASSICAL).energy)

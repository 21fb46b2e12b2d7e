import math

import numpy as np
import pytest

from gfnu.cases import FRACTIONAL_ORDERS, family_cases
from gfnu.engine import energy_residual, residual_scale, tau_slope
from gfnu.errors import DomainError
from gfnu.gfd import CLASSICAL
from gfnu.potentials import (
    FAMILIES,
    HarmonicOscillator,
    Hulthen,
    KratzerFues,
    Morse,
    Pseudoharmonic,
    classical_reference,
    closed_form_energy,
    make_potential,
    to_parametric,
)


@pytest.mark.parametrize("family", list(FAMILIES))
@pytest.mark.parametrize("order", FRACTIONAL_ORDERS, ids=lambda o: f"a{o.a}-b{o.b}")
def test_closed_form_zeroes_residual(family, order):
    checked = 0
    for spec, n in family_cases(family):
        E = spec.closed_form(n, order)
        if E is None:
            continue
        p = spec.to_parametric(E, order)
        branch = spec.default_branch
        assert abs(energy_residual(p, n, branch)) <= 1e-9 * (1 + residual_scale(p, n, branch))
        checked += 1
    assert checked >= 10


@pytest.mark.parametrize("family", list(FAMILIES))
def test_classical_closed_form_matches_reference(family):
    cls = FAMILIES[family]
    for spec, n in family_cases(family):
        E = spec.closed_form(n)
        if E is None or not cls.printed_form_consistent:
            continue
        ref = spec.classical_reference(n)
        assert E == pytest.approx(ref, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("n,l", [(n, l) for n in range(4) for l in range(3)])
def test_oscillator_levels(n, l):
    spec = HarmonicOscillator(omega=1.3, l=l)
    assert spec.closed_form(n) == pytest.approx(1.3 * (2 * n + l + 1.5), rel=1e-13)


def test_morse_ground_state():
    assert Morse(D0=8, delta=1).closed_form(0) == pytest.approx(1.875, rel=1e-13)


def test_kratzer_levels_increase_and_stay_bound():
    spec = KratzerFues(De=10, re=1.5, l=1)
    levels = [spec.closed_form(n) for n in range(5)]
    assert all(a < b for a, b in zip(levels, levels[1:]))
    assert levels[-1] < spec.continuum_threshold()


def test_hulthen_s_wave_formula():
    P, p = 20.0, 1.5
    g = 2 * P * p
    for n in range(3):
        m = n + 1
        exact = -(1 / (2 * p * p)) * ((g - m * m) / (2 * m)) ** 2
        assert Hulthen(P=P, p=p).closed_form(n) == pytest.approx(exact, rel=1e-12)


def test_pseudoharmonic_printed_form_recorded_not_used():
    spec = Pseudoharmonic()
    assert not spec.printed_form_consistent
    assert spec.printed_closed_form(0) != pytest.approx(spec.closed_form(0), rel=1e-3)


def test_pseudoharmonic_parametric_example():
    p = to_parametric(Pseudoharmonic(V0=1, r0=1), 1.0)
    assert p.xi3 == pytest.approx(1.0 + 0.0)  # beta + l(l+1)/4 with l = 0
    assert p.c3 == 0.0


@pytest.mark.parametrize("family", list(FAMILIES))
def test_substitution_round_trip(family):
    spec = FAMILIES[family]()
    r = np.linspace(-1.0 if spec.whole_line else 0.1, 4.0, 17)
    np.testing.assert_allclose(spec.r_of_s(spec.s_of_r(r)), r, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("family", list(FAMILIES))
def test_tau_guard_holds_at_closed_form(family):
    spec = FAMILIES[family]()
    E = spec.closed_form(0)
    assert E is not None
    assert tau_slope(spec.to_parametric(E), spec.default_branch) < 0


def test_module_helpers_agree_with_methods():
    spec = Morse(D0=12)
    assert closed_form_energy(spec, 1) == spec.closed_form(1)
    assert classical_reference(spec, 1) == spec.classical_reference(1)


def test_make_potential_aliases_and_errors():
    assert isinstance(make_potential("ho", omega=2.0), HarmonicOscillator)
    assert isinstance(make_potential("Kratzer-Fues"), KratzerFues)
    with pytest.raises(DomainError):
        make_potential("square-well")
    with pytest.raises(DomainError):
        make_potential("morse", depth=3)


@pytest.mark.parametrize(
    "name,params",
    [("ho", {"omega": -1}), ("morse", {"D0": 0}), ("hulthen", {"q": 0.5}), ("mie", {"l": -1}), ("ho", {"mu": 0})],
)
def test_parameter_validation(name, params):
    with pytest.raises(DomainError):
        make_potential(name, **params)


def test_with_l_keeps_other_fields():
    spec = KratzerFues(De=7.0)
    other = spec.with_l(2)
    assert other.l == 2 and other.De == 7.0


def test_closed_form_none_past_last_level():
    spec = Hulthen(P=2.0, p=1.0)
    assert spec.closed_form(0) is not None
    assert spec.closed_form(10) is None


def test_closed_form_rejects_bad_n():
    with pytest.raises(DomainError):
        HarmonicOscillator().closed_form(-1)
    assert math.isfinite(HarmonicOscillator().closed_form(0, CLASSICAL))

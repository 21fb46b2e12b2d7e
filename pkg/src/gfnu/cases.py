"""Parameter grids used by the verification suite and the tests."""

from __future__ import annotations

import itertools

from .gfd import FractionalOrder
from .potentials import FAMILIES, Potential

_GRIDS = {
    "ExtendedCornell": dict(a=[1.0, 0.5], b=[0.0, 0.5], c=[0.0, 1.0], lam=[0.3]),
    "Pseudoharmonic": dict(V0=[1.0, 2.0], r0=[1.0, 1.5]),
    "Mie": dict(V0=[1.0, 2.0], a=[1.0, 1.5]),
    "KratzerFues": dict(De=[5.0, 10.0], re=[1.0, 1.5]),
    "HarmonicOscillator": dict(omega=[0.5, 1.0, 2.0], mu=[1.0, 2.0]),
    "Morse": dict(D0=[8.0, 12.0, 20.0, 30.0], delta=[1.0, 0.8]),
    "WoodsSaxon": dict(V0=[50.0, 80.0], lam=[1.0, 0.8], q=[1.0, 0.5]),
    "Hulthen": dict(P=[10.0, 20.0, 30.0, 40.0], p=[2.0, 1.5]),
    "DeformedRosenMorse": dict(V1=[-20.0, -30.0], V2=[1.0, 0.5], alpha_s=[0.5], q=[1.0, 0.7]),
    "PoschlTeller": dict(V0=[5.0, 3.0], alpha_s=[0.5, 0.7], q=[1.0, 0.8]),
}

N_VALUES = (0, 1, 2)

FRACTIONAL_ORDERS = tuple(
    FractionalOrder(a, b) for a in (0.7, 0.85, 1.0) for b in (0.8, 1.0)
)


def family_specs(family: str) -> list:
    cls = FAMILIES[family]
    grid = _GRIDS[family]
    ls = (0, 1) if cls.l_dependent else (0,)
    out = []
    for values in itertools.product(*grid.values()):
        for l in ls:
            out.append(cls(**dict(zip(grid, values)), l=l))
    return out


def family_cases(family: str) -> list:
    """(spec, n) tuples for one family."""
    return [(spec, n) for spec in family_specs(family) for n in N_VALUES]


def all_cases() -> list:
    return [(f, spec, n) for f in FAMILIES for spec, n in family_cases(f)]


def describe(spec: Potential) -> str:
    p = ", ".join(f"{k}={v:g}" for k, v in spec.params().items())
    return f"{spec.family}({p})"

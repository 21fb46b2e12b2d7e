"""Root-solving wrapper: bound-state energies from the master condition,
plus normalized wavefunctions in the physical coordinate r."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .engine import (
    Branch,
    energy_residual,
    evaluate_psi,
    residual_array,
    residual_scale,
    tau_slope,
    wavefunction,
    WavefunctionRepr,
)
from .errors import DomainError, GFNUError, NoBoundStateError, NoRealSolutionError
from .gfd import CLASSICAL, FractionalOrder
from .potentials import Potential
from .specfun import gauss_legendre

SCAN_POINTS = 401
# the scan half-width starts at START_WIDTH * energy_scale and grows by GROWTH
START_WIDTH = 1e-3
GROWTH = 4.0
MAX_WIDTH = 1e9
BISECT_RTOL = 1e-13
RESIDUAL_RTOL = 1e-9
CLOSED_FORM_RTOL = 1e-8


@dataclass
class SpectrumResult:
    energy: float
    n: int
    l: int
    branch: Branch
    residual: float
    residual_scale: float
    closed_form_energy: float | None = None
    oracle_energy: float | None = None
    flags: list = field(default_factory=list)
    roots: tuple = ()

    @property
    def closed_form_diff(self) -> float | None:
        if self.closed_form_energy is None:
            return None
        return abs(self.energy - self.closed_form_energy)


def _residual_fn(spec: Potential, order: FractionalOrder, n: int, branch: Branch):
    c1, c2, c3 = spec.coefficients()

    def f(E):
        return residual_array(c1, c2, c3, *spec.xi(E), order, n, branch)

    return f


def _scalar(f, E):
    return float(f(np.array([E]))[0])


def _bisect(f, lo, flo, hi):
    # invariant: f(lo) and f(hi) have opposite signs
    while hi - lo > BISECT_RTOL * (1.0 + max(abs(lo), abs(hi))):
        mid = 0.5 * (lo + hi)
        fm = _scalar(f, mid)
        if fm == 0.0:
            return mid, mid
        if not math.isfinite(fm):
            break
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def _polish(f, lo, hi):
    """Secant steps from the bisection bracket, kept only if they improve |f|."""
    x0, x1 = lo, hi
    f0, f1 = _scalar(f, x0), _scalar(f, x1)
    best, fbest = (x0, f0) if abs(f0) <= abs(f1) else (x1, f1)
    for _ in range(4):
        if f1 == f0 or not (math.isfinite(f0) and math.isfinite(f1)):
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not math.isfinite(x2):
            break
        f2 = _scalar(f, x2)
        if math.isfinite(f2) and abs(f2) < abs(fbest):
            best, fbest = x2, f2
        x0, f0, x1, f1 = x1, f1, x2, f2
    return best


def find_roots(f, lo: float, hi: float, npts: int = SCAN_POINTS) -> list:
    """All sign-change roots of ``f`` on a uniform scan of [lo, hi]."""
    grid = np.linspace(lo, hi, npts)
    with np.errstate(invalid="ignore"):
        vals = f(grid)
    finite = np.isfinite(vals)
    exact = np.nonzero(finite & (vals == 0.0))[0]
    pair = finite[:-1] & finite[1:]
    with np.errstate(invalid="ignore"):
        change = np.nonzero(pair & (vals[:-1] * vals[1:] < 0))[0]
    roots = [float(grid[i]) for i in exact]
    for i in change:
        a, b = _bisect(f, float(grid[i]), float(vals[i]), float(grid[i + 1]))
        roots.append(_polish(f, a, b))
    return sorted(roots)


def scan_roots(spec: Potential, n: int, order: FractionalOrder = CLASSICAL, branch=None):
    """Grow a window around the family's energy center until a root appears.

    Returns ``(roots, window)``.
    """
    branch = spec.default_branch if branch is None else Branch.parse(branch)
    f = _residual_fn(spec, order, n, branch)
    center, scale = spec.energy_center(), spec.energy_scale()
    width = START_WIDTH * scale
    while True:
        window = (center - width, center + width)
        roots = find_roots(f, *window)
        if roots or width >= MAX_WIDTH * scale:
            return roots, window
        width *= GROWTH


def solve_energy(
    spec: Potential,
    n: int,
    l: int | None = None,
    order: FractionalOrder = CLASSICAL,
    branch=None,
) -> SpectrumResult:
    """Bound-state energy of level ``n`` as a root of the master condition.

    Raises NoBoundStateError when no sign change is found in the scan.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if l is not None and l != spec.l:
        spec = spec.with_l(l)
    branch = spec.default_branch if branch is None else Branch.parse(branch)
    roots, window = scan_roots(spec, n, order, branch)
    if not roots:
        raise NoBoundStateError(window)

    flags = []
    accepted = []
    for E in roots:
        p = spec.to_parametric(E, order)
        if tau_slope(p, branch) < 0:
            accepted.append(E)
    if not accepted:
        flags.append("tau-nonnegative")
        accepted = roots
    if len(roots) > 1:
        flags.append("multiple-roots")
    E = accepted[0]

    p = spec.to_parametric(E, order)
    res = energy_residual(p, n, branch)
    scale = residual_scale(p, n, branch)
    if abs(res) > RESIDUAL_RTOL * (1.0 + scale):
        flags.append("residual-above-tolerance")
    if E > spec.continuum_threshold():
        flags.append("above-threshold")

    closed = spec.closed_form(n, order)
    if closed is not None and abs(closed - E) > CLOSED_FORM_RTOL * (1.0 + abs(closed)):
        flags.append("closed-form-mismatch")
    if not spec.printed_form_consistent:
        flags.append("closed-form-engine-derived")

    return SpectrumResult(
        energy=E, n=int(n), l=spec.l, branch=branch, residual=res,
        residual_scale=scale, closed_form_energy=closed, flags=flags,
        roots=tuple(roots),
    )


# ---------------------------------------------------------------------------
# wavefunctions in r
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialState:
    """A normalized state: psi as a function of r, with its support."""

    spec: Potential
    order: FractionalOrder
    energy: float
    repr: WavefunctionRepr
    r_lo: float
    r_hi: float

    def psi(self, r):
        p = self.spec.to_parametric(self.energy, self.order)
        return evaluate_psi(self.repr, p, self.spec.s_of_r(r))

    def density(self, r):
        return self.psi(r) ** 2 * self.spec.radial_weight(r)


def _r_domain(spec: Potential, order: FractionalOrder):
    """Open r-interval on which the s-domain of the template is physical."""
    c3 = spec.coefficients()[2]
    lo = -math.inf if spec.whole_line else 0.0
    if c3 > 0:
        s_edge = c3 ** (-1.0 / order.a)
        r_edge = float(spec.r_of_s(s_edge))
        lo = max(lo, r_edge)
    return lo


def _extent(g, start, step, limit=60):
    # march away from start until the integrand is negligible
    peak = 0.0
    x = start
    for _ in range(limit):
        v = abs(g(x))
        peak = max(peak, v)
        if v < 1e-18 * max(peak, 1e-300) and peak > 0:
            return x
        step *= 2.0
        x = start + step
    raise DomainError("wavefunction does not decay; cannot normalize")


def _integrate(g, lo, hi, panels=400, npts=32):
    return gauss_legendre(g, lo, hi, npts=npts, panels=panels)


def state_wavefunction(
    spec: Potential,
    n: int,
    order: FractionalOrder = CLASSICAL,
    branch=None,
    energy: float | None = None,
) -> RadialState:
    """Normalized wavefunction of level ``n`` (u(r) or R(r) per the family)."""
    branch = spec.default_branch if branch is None else Branch.parse(branch)
    if energy is None:
        energy = solve_energy(spec, n, order=order, branch=branch).energy
    p = spec.to_parametric(energy, order)
    w = wavefunction(p, n, branch)
    try:
        evaluate_psi(w, p, spec.s_of_r(1.0))
    except DomainError as exc:
        raise DomainError(f"{spec.family}: wavefunction cannot be sampled in r: {exc}") from None

    def raw(r):
        r = np.asarray(r, dtype=float)
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            v = evaluate_psi(w, p, spec.s_of_r(r)) ** 2 * spec.radial_weight(r)
        return np.nan_to_num(v, nan=0.0, posinf=0.0)

    lo_edge = _r_domain(spec, order)
    # a reference point well inside the domain
    if math.isfinite(lo_edge):
        ref = lo_edge + 1.0 / max(1.0, abs(spec.energy_scale()) ** 0.5)
    else:
        ref = float(spec.r_of_s(1.0))
    scale = 1.0
    r_hi = _extent(raw, ref, scale)
    r_lo = lo_edge if math.isfinite(lo_edge) else _extent(raw, ref, -scale)
    total = _integrate(raw, r_lo, r_hi)
    if not (math.isfinite(total) and total > 0):
        raise DomainError(f"{spec.family}: normalization integral is {total!r}")
    return RadialState(spec, order, energy, w.with_norm(1.0 / math.sqrt(total)), r_lo, r_hi)


def normalization(state: RadialState, panels: int = 800, npts: int = 48) -> float:
    """Integral of |psi|^2 with the radial measure on an independent finer rule."""
    return _integrate(lambda r: np.nan_to_num(state.density(r)), state.r_lo, state.r_hi, panels, npts)


def _edge_value(state: RadialState, r: float) -> float:
    try:
        return float(state.psi(r))
    except DomainError:
        # s = 0 is excluded from evaluate_psi; use the power-law limit there
        if state.spec.s_of_r(r) == 0 and state.repr.power_exponent > 0:
            return 0.0
        return math.nan


def sample(state: RadialState, npts: int = 201):
    """(r, s, psi) on a uniform grid over the support, endpoints included."""
    if npts < 2:
        raise DomainError("npts must be >= 2")
    r = np.linspace(state.r_lo, state.r_hi, npts)
    psi = np.empty(npts)
    psi[1:-1] = state.psi(r[1:-1])
    psi[0], psi[-1] = _edge_value(state, r[0]), _edge_value(state, r[-1])
    return r, state.spec.s_of_r(r), psi


def count_nodes(state: RadialState, npts: int = 10_000) -> int:
    r = np.linspace(state.r_lo, state.r_hi, npts + 2)[1:-1]
    v = np.asarray(state.psi(r))
    peak = np.max(np.abs(v))
    v = v[np.abs(v) > 1e-10 * peak]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


__all__ = [
    "SpectrumResult", "RadialState", "solve_energy", "scan_roots", "find_roots",
    "state_wavefunction", "normalization", "count_nodes", "sample",
    "GFNUError", "NoRealSolutionError",
]

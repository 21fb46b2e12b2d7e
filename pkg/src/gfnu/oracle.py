"""Finite-difference eigensolver for the classical radial Schrodinger equation.

Solves -(hbar^2 / 2 mu) u'' + V_eff(r) u = E u with u = 0 at both grid ends.
This module only touches the physical potential V(r) and the constants
mu, hbar, l of a potential object; it never calls the GF-NU machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError

# WKB decay exponent for |psi| < 1e-8 at the box edge
WKB_TARGET = -math.log(1e-8)
DEFAULT_NPTS = 3000
MAX_DOUBLINGS = 12


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid of ``npts`` interior points on (r_min, r_max).

    ``offset`` shifts the physical coordinate (r = offset + x) so whole-line
    problems fit a grid with r_min > 0.
    """

    r_min: float
    r_max: float
    npts: int = DEFAULT_NPTS
    offset: float = 0.0

    def __post_init__(self):
        if not (self.r_min > 0 and self.r_min < self.r_max):
            raise DomainError(f"need 0 < r_min < r_max, got ({self.r_min}, {self.r_max})")
        if self.npts < 100:
            raise DomainError(f"npts must be >= 100, got {self.npts}")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.npts + 1)

    def points(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.npts + 1)

    def physical(self) -> np.ndarray:
        return self.offset + self.points()

    def refined(self) -> "RadialGrid":
        """Same box with the spacing halved."""
        return RadialGrid(self.r_min, self.r_max, 2 * self.npts + 1, self.offset)


@dataclass
class OracleResult:
    energies: list
    errors: list
    grid: RadialGrid
    flags: list = field(default_factory=list)
    coarse: list = field(default_factory=list)
    fine: list = field(default_factory=list)


def _v_eff(spec, l, r):
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = np.asarray(spec.potential(r), dtype=float)
        if not spec.whole_line:
            v = v + spec.hbar**2 * l * (l + 1) / (2.0 * spec.mu * r * r)
    return v


def _lowest(spec, l, k, grid: RadialGrid):
    r = grid.physical()
    t = spec.hbar**2 / (2.0 * spec.mu * grid.h**2)
    v = _v_eff(spec, l, r)
    if not np.all(np.isfinite(v)):
        raise DomainError("potential is not finite on the grid interior")
    kk = min(k, grid.npts)
    return eigh_tridiagonal(
        2.0 * t + v, -t * np.ones(grid.npts - 1), eigvals_only=True,
        select="i", select_range=(0, kk - 1),
    )


def _solve_pair(spec, l, k, grid):
    coarse = _lowest(spec, l, k, grid)
    fine = _lowest(spec, l, k, grid.refined())
    extrap = (4.0 * fine - coarse) / 3.0
    err = np.abs(fine - coarse) / 3.0
    return coarse, fine, extrap, err


def wkb_exponent(spec, l, E, grid: RadialGrid, side="right") -> float:
    """Decay integral of kappa(r) from the outer turning point to the box edge."""
    x = np.linspace(grid.r_min, grid.r_max, 20_001)
    r = grid.offset + x
    kappa2 = 2.0 * spec.mu * (_v_eff(spec, l, r) - E) / spec.hbar**2
    kappa2 = np.nan_to_num(kappa2, nan=0.0, posinf=1e300)
    if side == "right":
        seg = kappa2[::-1]
        xs = x[::-1]
    else:
        seg, xs = kappa2, x
    allowed = np.nonzero(seg <= 0)[0]
    stop = allowed[0] if allowed.size else len(seg)
    if stop < 2:
        return 0.0
    return float(abs(np.trapezoid(np.sqrt(np.minimum(seg[:stop], 1e300)), xs[:stop])))


def _repulsive_core(spec, l) -> bool:
    if spec.whole_line:
        return False
    v = _v_eff(spec, l, np.array([1e-12]))[0]
    return bool(np.isnan(v) or v > 1e8)


def _initial_box(spec) -> tuple:
    if spec.whole_line:
        return -2.0, 8.0
    return 0.0, 8.0


def auto_grid(spec, l: int, k: int, npts: int = DEFAULT_NPTS) -> RadialGrid:
    """Grow the box until the top requested level has decayed by WKB_TARGET."""
    lo, hi = _initial_box(spec)
    threshold = spec.continuum_threshold()
    repulsive = _repulsive_core(spec, l)
    for _ in range(MAX_DOUBLINGS):
        grid = _make_grid(lo, hi, npts, repulsive)
        levels = _lowest(spec, l, k, grid)
        bound = levels[levels < threshold]
        if bound.size == 0:
            hi *= 2.0
            lo *= 2.0
            continue
        top = bound[-1]
        ok_right = wkb_exponent(spec, l, top, grid, "right") >= WKB_TARGET
        ok_left = (not spec.whole_line) or wkb_exponent(spec, l, top, grid, "left") >= WKB_TARGET
        if ok_right and ok_left:
            return grid
        if not ok_right:
            hi *= 2.0
        if not ok_left:
            lo *= 2.0
    return grid


def _make_grid(lo, hi, npts, repulsive):
    if lo < 0:
        return RadialGrid(1e-12, hi - lo, npts, offset=lo)
    r_min = 1e-4 * hi if repulsive else 1e-12
    return RadialGrid(r_min, hi, npts)


def fd_eigensolve(spec, l: int, k: int, grid: RadialGrid | None = None) -> OracleResult:
    """Lowest ``k`` bound levels, Richardson-extrapolated over h and h/2.

    Levels at or above the continuum threshold are dropped and flagged.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if grid is None:
        grid = auto_grid(spec, l, k)
    coarse, fine, extrap, err = _solve_pair(spec, l, k, grid)
    keep = extrap < spec.continuum_threshold()
    flags = []
    if int(keep.sum()) < k:
        flags.append(f"only {int(keep.sum())} of {k} levels below threshold")
    return OracleResult(
        energies=[float(e) for e in extrap[keep]],
        errors=[float(e) for e in err[keep]],
        grid=grid,
        flags=flags,
        coarse=[float(e) for e in coarse[keep]],
        fine=[float(e) for e in fine[keep]],
    )

"""Jacobi and associated Laguerre polynomials with real indices, plus
Gauss-Legendre quadrature.

Both polynomial families are evaluated by their three-term recurrences,
which stay valid for real (non-integer) indices greater than -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class JacobiIndex:
    gamma_idx: float
    delta_idx: float

    def __post_init__(self):
        if not (self.gamma_idx > -1 and self.delta_idx > -1):
            raise DomainError(
                f"Jacobi indices must exceed -1, got ({self.gamma_idx!r}, {self.delta_idx!r})"
            )


@dataclass(frozen=True)
class LaguerreIndex:
    a_idx: float

    def __post_init__(self):
        if not self.a_idx > -1:
            raise DomainError(f"Laguerre index must exceed -1, got {self.a_idx!r}")


def jacobi_eval(n: int, idx: JacobiIndex, x):
    """Jacobi polynomial ``P_n^(g, d)(x)``; ``x`` may be a scalar or array."""
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    g, d = idx.gamma_idx, idx.delta_idx
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0 if p0.ndim else float(p0)
    p1 = (g + 1.0) + (g + d + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        s = 2.0 * k + g + d
        a1 = 2.0 * k * (k + g + d) * (s - 2.0)
        a2 = (s - 1.0) * (g * g - d * d)
        a3 = (s - 2.0) * (s - 1.0) * s
        a4 = 2.0 * (k + g - 1.0) * (k + d - 1.0) * s
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1 if p1.ndim else float(p1)


def laguerre_eval(n: int, idx: LaguerreIndex, x):
    """Associated Laguerre polynomial ``L_n^(a)(x)``; scalar or array ``x``."""
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    a = idx.a_idx
    x = np.asarray(x, dtype=float)
    l0 = np.ones_like(x)
    if n == 0:
        return l0 if l0.ndim else float(l0)
    l1 = 1.0 + a - x
    for k in range(2, n + 1):
        l0, l1 = l1, ((2.0 * k - 1.0 + a - x) * l1 - (k - 1.0 + a) * l0) / k
    return l1 if l1.ndim else float(l1)


@lru_cache(maxsize=32)
def _nodes(npts: int):
    return np.polynomial.legendre.leggauss(npts)


def gauss_legendre(
    f: Callable,
    lo: float,
    hi: float,
    npts: int = 64,
    panels: int = 1,
) -> float:
    """Composite Gauss-Legendre approximation of the integral of ``f`` on [lo, hi].

    ``f`` must accept a numpy array. ``panels`` equal-width subintervals are
    each integrated with ``npts`` nodes.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise DomainError(f"need finite lo < hi, got [{lo!r}, {hi!r}]")
    if npts < 2 or panels < 1:
        raise DomainError("npts must be >= 2 and panels >= 1")
    x, w = _nodes(int(npts))
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    pts = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.broadcast_to(np.asarray(f(pts), dtype=float), pts.shape).reshape(panels, -1)
    return float(np.sum(half * (vals @ w)))

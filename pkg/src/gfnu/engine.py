"""Nikiforov-Uvarov solver for the fractional template equation, in parametric form.

The template equation is

    D[D psi] + (c1 - c2 s^a) / (s^a (1 - c3 s^a)) D psi
             + (-xi1 s^2a + xi2 s^a - xi3) / (s^a (1 - c3 s^a))^2 psi = 0

with ``D`` the generalized fractional derivative of order ``(a, b)``.
Everything here is closed-form algebra on the six inputs; the only
numerics are square roots.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonNormalizableError, NoRealSolutionError
from .gfd import FractionalOrder
from .specfun import JacobiIndex, LaguerreIndex, jacobi_eval, laguerre_eval

# |c3| below this is treated as exactly zero (Laguerre path)
C3_ZERO = 1e-12

_c9_scale = contextvars.ContextVar("c9_scale", default=1.0)


@contextlib.contextmanager
def perturbed_c9(factor: float):
    """Test hook: multiply every computed c9 by ``factor`` inside the block."""
    token = _c9_scale.set(float(factor))
    try:
        yield
    finally:
        _c9_scale.reset(token)


class Branch(str, enum.Enum):
    NEGATIVE_K = "negative_K"
    POSITIVE_K = "positive_K"

    @property
    def sign(self) -> int:
        # sign carried by sqrt(c8) in the branch's coefficients
        return 1 if self is Branch.NEGATIVE_K else -1

    @classmethod
    def parse(cls, value) -> "Branch":
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        if v in ("neg", "negative", "negative_k", "-"):
            return cls.NEGATIVE_K
        if v in ("pos", "positive", "positive_k", "+"):
            return cls.POSITIVE_K
        raise DomainError(f"unknown branch {value!r}; use neg or pos")


@dataclass(frozen=True)
class ParametricProblem:
    c1: float
    c2: float
    c3: float
    xi1: float
    xi2: float
    xi3: float
    order: FractionalOrder

    @property
    def laguerre_path(self) -> bool:
        return abs(self.c3) < C3_ZERO


@dataclass(frozen=True)
class DerivedCoefficients:
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float
    c10s: float
    c11s: float
    c12s: float
    c13s: float
    K_minus: float
    K_plus: float

    @property
    def sqrt_c8(self) -> float:
        return math.sqrt(self.c8)

    @property
    def sqrt_c9(self) -> float:
        return math.sqrt(self.c9)

    def branch_coeffs(self, branch: Branch):
        """``(c10, c11, c12, c13)`` for the branch (starred on the positive one)."""
        if Branch.parse(branch) is Branch.NEGATIVE_K:
            return self.c10, self.c11, self.c12, self.c13
        return self.c10s, self.c11s, self.c12s, self.c13s


def _base(c1, c2, c3, xi1, xi2, xi3, ka):
    c4 = 0.5 * (ka - c1)
    c5 = 0.5 * (c2 - 2.0 * c3 * ka)
    c6 = c5 * c5 + xi1
    c7 = 2.0 * c4 * c5 - xi2
    c8 = c4 * c4 + xi3
    c9 = (c3 * c7 + c3 * c3 * c8 + c6) * _c9_scale.get()
    return c4, c5, c6, c7, c8, c9


def derive_coeffs(p: ParametricProblem) -> DerivedCoefficients:
    """All derived coefficients of the parametric system.

    Raises NoRealSolutionError when c8 or c9 is negative.
    """
    c3 = 0.0 if p.laguerre_path else p.c3
    c4, c5, c6, c7, c8, c9 = _base(p.c1, p.c2, c3, p.xi1, p.xi2, p.xi3, p.order.ka)
    if c8 < 0:
        raise NoRealSolutionError("c8", c8)
    if c9 < 0:
        raise NoRealSolutionError("c9", c9)
    r8, r9 = math.sqrt(c8), math.sqrt(c9)
    cross = 2.0 * math.sqrt(c8 * c9)
    return DerivedCoefficients(
        c4=c4, c5=c5, c6=c6, c7=c7, c8=c8, c9=c9,
        c10=p.c1 + 2.0 * c4 + 2.0 * r8,
        c11=p.c2 - 2.0 * c5 + 2.0 * (r9 + c3 * r8),
        c12=c4 + r8,
        c13=c5 - (r9 + c3 * r8),
        c10s=p.c1 + 2.0 * c4 - 2.0 * r8,
        c11s=p.c2 - 2.0 * c5 + 2.0 * (r9 - c3 * r8),
        c12s=c4 - r8,
        c13s=c5 - (r9 - c3 * r8),
        K_minus=-(c7 + 2.0 * c3 * c8) - cross,
        K_plus=-(c7 + 2.0 * c3 * c8) + cross,
    )


def _terms(c2, c3, c5, c7, c8, c9, K, n, sign):
    r8, r9 = np.sqrt(c8), np.sqrt(c9)
    return (
        n * K * c2,
        -(2 * n + 1) * K * c5,
        (2 * n + 1) * K * (r9 + sign * c3 * r8),
        n * (n - 1) * K * K * c3,
        c7,
        2.0 * c3 * c8,
        sign * 2.0 * np.sqrt(c8 * c9),
    )


def residual_terms(p: ParametricProblem, n: int, branch=Branch.NEGATIVE_K) -> tuple:
    """The seven summands of the quantization condition for state ``n``."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    d = derive_coeffs(p)
    c3 = 0.0 if p.laguerre_path else p.c3
    return tuple(
        float(t)
        for t in _terms(p.c2, c3, d.c5, d.c7, d.c8, d.c9, p.order.ka, n, Branch.parse(branch).sign)
    )


def energy_residual(p: ParametricProblem, n: int, branch=Branch.NEGATIVE_K) -> float:
    """Left side of the master quantization condition; zero at a bound state.

    The positive-K branch uses the same condition with sqrt(c8) negated,
    consistent with the starred coefficients.
    """
    return math.fsum(residual_terms(p, n, branch))


def residual_scale(p: ParametricProblem, n: int, branch=Branch.NEGATIVE_K) -> float:
    """Largest summand magnitude; the natural scale for residual tolerances."""
    return max(abs(t) for t in residual_terms(p, n, branch))


def residual_array(c1, c2, c3, xi1, xi2, xi3, order: FractionalOrder, n: int, branch=Branch.NEGATIVE_K):
    """Vectorized residual over arrays of xi's; NaN where c8 or c9 < 0."""
    if abs(c3) < C3_ZERO:
        c3 = 0.0
    xi1, xi2, xi3 = (np.asarray(v, dtype=float) for v in (xi1, xi2, xi3))
    c4, c5, c6, c7, c8, c9 = _base(c1, c2, c3, xi1, xi2, xi3, order.ka)
    bad = (c8 < 0) | (c9 < 0)
    c8 = np.where(bad, np.nan, c8)
    c9 = np.where(bad, np.nan, c9)
    terms = _terms(c2, c3, c5, c7, c8, c9, order.ka, n, Branch.parse(branch).sign)
    return sum(terms[1:], terms[0])


def tau_slope(p: ParametricProblem, branch=Branch.NEGATIVE_K) -> float:
    """Fractional derivative of tau(s); must be negative for an accepted solution."""
    d = derive_coeffs(p)
    sign = Branch.parse(branch).sign
    c3 = 0.0 if p.laguerre_path else p.c3
    k1, a = p.order.k1, p.order.a
    return k1 * (-a * (p.c2 - 2.0 * d.c5) - 2.0 * a * (d.sqrt_c9 + sign * c3 * d.sqrt_c8))


@dataclass(frozen=True)
class WavefunctionRepr:
    """Closed-form pieces of psi(s) for one state.

    psi(s) = norm * s**power_exponent * (1 - c3 s^a)**bracket_exponent * P(s)
    on the Jacobi path, and
    psi(s) = norm * s**power_exponent * exp(exp_scale s^a) * L(s)
    on the Laguerre path.
    """

    n: int
    power_exponent: float
    bracket_exponent: float | None
    jacobi: JacobiIndex | None
    laguerre: LaguerreIndex | None
    laguerre_scale: float | None
    exp_scale: float | None
    norm: float = 1.0

    def with_norm(self, norm: float) -> "WavefunctionRepr":
        return WavefunctionRepr(
            self.n, self.power_exponent, self.bracket_exponent, self.jacobi,
            self.laguerre, self.laguerre_scale, self.exp_scale, norm,
        )


def wavefunction(p: ParametricProblem, n: int, branch=Branch.NEGATIVE_K, norm: float = 1.0) -> WavefunctionRepr:
    """Assemble psi from the master formulas (energy already inside the xi's)."""
    d = derive_coeffs(p)
    c10, c11, c12, c13 = d.branch_coeffs(branch)
    k1, a = p.order.k1, p.order.a
    first = (c10 - a) / k1
    if p.laguerre_path:
        if not first > -1:
            raise NonNormalizableError("laguerre index", first)
        return WavefunctionRepr(
            n=n,
            power_exponent=c12 / k1,
            bracket_exponent=None,
            jacobi=None,
            laguerre=LaguerreIndex(first),
            laguerre_scale=c11 / (a * k1),
            exp_scale=c13 / (a * k1),
            norm=norm,
        )
    c3 = p.c3
    second = c11 / (a * k1 * c3) - c10 / (a * k1) - 1.0 / k1
    for name, v in (("jacobi first index", first), ("jacobi second index", second)):
        if not v > -1:
            raise NonNormalizableError(name, v)
    return WavefunctionRepr(
        n=n,
        power_exponent=c12 / k1,
        bracket_exponent=-c13 / (a * k1 * c3) - c12 / (a * k1),
        jacobi=JacobiIndex(first, second),
        laguerre=None,
        laguerre_scale=None,
        exp_scale=None,
        norm=norm,
    )


def evaluate_psi(w: WavefunctionRepr, p: ParametricProblem, s):
    """Evaluate psi at ``s`` (scalar or array) inside the physical s-domain."""
    s_arr = np.asarray(s, dtype=float)
    a = p.order.a
    if np.any(s_arr <= 0):
        raise DomainError("psi is defined for s > 0 only")
    sa = s_arr**a
    if w.jacobi is not None:
        u = 1.0 - p.c3 * sa
        if np.any(u < 0):
            raise DomainError(f"s outside the domain s < c3^(-1/a) (c3 = {p.c3!r})")
        with np.errstate(divide="ignore"):
            bracket = u**w.bracket_exponent
        poly = jacobi_eval(w.n, w.jacobi, 1.0 - 2.0 * p.c3 * sa)
        out = w.norm * s_arr**w.power_exponent * bracket * poly
    else:
        poly = laguerre_eval(w.n, w.laguerre, w.laguerre_scale * sa)
        out = w.norm * s_arr**w.power_exponent * np.exp(w.exp_scale * sa) * poly
    return out if out.ndim else float(out)

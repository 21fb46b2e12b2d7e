"""Generalized fractional derivative (GFD) primitives.

On smooth functions the GFD of order ``(a, b)`` acts as
``k1 * t**(1 - a) * d/dt`` with ``k1 = Gamma(b) / Gamma(b - a + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import DomainError

DEFAULT_EPS = 1e-7
# step for the central differences inside gfd_second
_SECOND_STEP = 1e-4


def gamma(x: float) -> float:
    """Gamma function for positive finite ``x``."""
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"gamma requires a positive finite argument, got {x!r}")
    return math.gamma(x)


@dataclass(frozen=True)
class FractionalOrder:
    """Fractional orders ``a`` (derivative order) and ``b`` with cached ``k1``."""

    a: float = 1.0
    b: float = 1.0
    k1: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b)):
            if not (math.isfinite(v) and 0.0 < v <= 1.0):
                raise DomainError(f"fractional order {name} must lie in (0, 1], got {v!r}")
        if self.a == 1.0 and self.b == 1.0:
            k1 = 1.0
        else:
            k1 = gamma(self.b) / gamma(self.b - self.a + 1.0)
        object.__setattr__(self, "k1", k1)

    @property
    def ka(self) -> float:
        """The product ``k1 * a`` that appears throughout the parametric system."""
        return self.k1 * self.a

    @property
    def is_classical(self) -> bool:
        return self.a == 1.0 and self.b == 1.0


CLASSICAL = FractionalOrder(1.0, 1.0)


def k1_factor(order: FractionalOrder) -> float:
    """Scale factor ``Gamma(b) / Gamma(b - a + 1)``; exactly 1 at ``a = b = 1``."""
    return order.k1


def gfd_power(m: float, order: FractionalOrder, t: float) -> float:
    """GFD of ``t**m``: ``k1 * m * t**(m - a)``."""
    if t <= 0:
        raise DomainError(f"gfd_power requires t > 0, got {t!r}")
    if m == 0:
        return 0.0
    return order.k1 * m * t ** (m - order.a)


def _shift(order: FractionalOrder, t: float, eps: float) -> float:
    return order.k1 * eps * t ** (1.0 - order.a)


def gfd_numeric(
    f: Callable[[float], float],
    order: FractionalOrder,
    t: float,
    eps: float = DEFAULT_EPS,
) -> float:
    """Symmetric difference quotient of the GFD limit definition.

    Returns ``[f(t + h) - f(t - h)] / (2 eps)`` with ``h = k1 eps t**(1-a)``.
    """
    if t <= 0:
        raise DomainError(f"gfd_numeric requires t > 0, got {t!r}")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps!r}")
    h = _shift(order, t, eps)
    if t - h <= 0:
        raise DomainError(f"evaluation point t - h = {t - h!r} leaves (0, inf)")
    try:
        return (f(t + h) - f(t - h)) / (2.0 * eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"f is not evaluable near t = {t!r}: {exc}") from exc


def gfd_second(
    f: Callable[[float], float],
    order: FractionalOrder,
    t: float,
    step: float | None = None,
) -> float:
    """Iterated GFD ``k1**2 [(1-a) t**(1-2a) f'(t) + t**(2-2a) f''(t)]``.

    ``f'`` and ``f''`` come from central differences with relative step ``step``.
    """
    if t <= 0:
        raise DomainError(f"gfd_second requires t > 0, got {t!r}")
    h = (step if step is not None else _SECOND_STEP) * max(1.0, abs(t))
    if t - h <= 0:
        h = 0.5 * t
    try:
        fp, f0, fm = f(t + h), f(t), f(t - h)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"f is not evaluable near t = {t!r}: {exc}") from exc
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    a = order.a
    return order.k1**2 * ((1.0 - a) * t ** (1.0 - 2.0 * a) * d1 + t ** (2.0 - 2.0 * a) * d2)

"""Catalog of the ten exactly solvable potential families.

Each family knows its physical potential V(r), the change of variable
r -> s, the map from a trial energy E to the parametric inputs
(c1, c2, c3, xi1, xi2, xi3), and closed-form energies. Internally each
case works with its own dimensionless energy variable; physical energies
are reconstructed at the boundary.

Symbol map (customary notation -> here): fractional orders alpha, beta -> ``a``, ``b``;
parametric alpha_1..alpha_13 -> ``c1..c13``; the screening range alpha of
the deformed families -> ``alpha_s``; the Cornell range lambda -> ``lam``.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .engine import Branch, ParametricProblem
from .errors import DomainError
from .gfd import CLASSICAL, FractionalOrder


@dataclass(frozen=True, kw_only=True)
class Potential:
    """Common fields and the per-family interface."""

    mu: float = 1.0
    hbar: float = 1.0
    l: int = 0

    family: ClassVar[str] = ""
    # "u" for the reduced radial function u = rR, "R" for R itself
    radial_kind: ClassVar[str] = "u"
    whole_line: ClassVar[bool] = False
    l_dependent: ClassVar[bool] = True
    default_branch: ClassVar[Branch] = Branch.NEGATIVE_K
    # False when the printed fractional closed form disagrees with the
    # master condition; closed_form then uses the engine-derived form.
    printed_form_consistent: ClassVar[bool] = True
    notes: ClassVar[tuple] = ()

    def __post_init__(self):
        if not self.mu > 0:
            raise DomainError(f"{self.family}: reduced mass mu must be > 0")
        if not self.hbar > 0:
            raise DomainError(f"{self.family}: hbar must be > 0")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"{self.family}: l must be a non-negative integer")
        self.validate()

    def validate(self):
        pass

    def _require(self, cond, text):
        if not cond:
            raise DomainError(f"{self.family}: constraint violated: {text}")

    # -- interface -----------------------------------------------------------
    def potential(self, r):
        raise NotImplementedError

    def s_of_r(self, r):
        raise NotImplementedError

    def r_of_s(self, s):
        raise NotImplementedError

    def to_parametric(self, E, order: FractionalOrder = CLASSICAL) -> ParametricProblem:
        c, xi = self.coefficients(), self.xi(E)
        return ParametricProblem(*c, *(float(v) for v in xi), order=order)

    def coefficients(self) -> tuple:
        """(c1, c2, c3)."""
        raise NotImplementedError

    def xi(self, E):
        """(xi1, xi2, xi3) at trial energy E; vectorizes over arrays."""
        raise NotImplementedError

    def closed_form(self, n: int, order: FractionalOrder = CLASSICAL):
        """Fractional closed-form energy, or None when the state does not exist."""
        raise NotImplementedError

    def printed_closed_form(self, n: int, order: FractionalOrder = CLASSICAL):
        """The fractional closed form as usually printed, taken literally."""
        return self.closed_form(n, order)

    def classical_reference(self, n: int) -> float:
        raise NotImplementedError

    def continuum_threshold(self) -> float:
        """Asymptotic value of V; math.inf for confining potentials."""
        return math.inf

    def energy_center(self) -> float:
        return 0.0

    def energy_scale(self) -> float:
        raise NotImplementedError

    def radial_weight(self, r):
        r = np.asarray(r, dtype=float)
        return r * r if self.radial_kind == "R" else np.ones_like(r)

    def centrifugal(self, r):
        """Centrifugal term added by the oracle for radial (half-line) problems."""
        if self.whole_line or not self.l_dependent:
            return 0.0
        return self.hbar**2 * self.l * (self.l + 1) / (2.0 * self.mu * np.asarray(r, dtype=float) ** 2)

    def with_l(self, l: int) -> "Potential":
        return dataclasses.replace(self, l=l)

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}


def _check_n(n):
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")


# ---------------------------------------------------------------------------
# Laguerre-path families (c3 = 0)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, kw_only=True)
class ExtendedCornell(Potential):
    """V(r) = a r^2 + b r - c / r with s = exp(-lam r)."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    lam: float = 0.3

    family: ClassVar[str] = "ExtendedCornell"

    def validate(self):
        self._require(self.a >= 0 and self.b >= 0 and self.c >= 0, "a, b, c >= 0")
        self._require(self.lam > 0, "lambda > 0")

    @property
    def t123(self):
        m, h, lam = self.mu, self.hbar, self.lam
        qa = m * self.a / (lam**4 * h * h)
        qb = m * self.b / (lam**3 * h * h)
        qc = m * self.c / (lam * h * h)
        t1 = 12 * qa + 6 * qb
        t2 = 8 * qa + 6 * qb - 2 * qc
        t3 = 2 * qa + 2 * qb - 2 * qc + self.l * (self.l + 1)
        return t1, t2, t3

    def _unit(self):
        return self.hbar**2 * self.lam**2 / (2 * self.mu)

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return self.a * r * r + self.b * r - self.c / r

    def s_of_r(self, r):
        return np.exp(-self.lam * np.asarray(r, dtype=float))

    def r_of_s(self, s):
        return -np.log(s) / self.lam

    def coefficients(self):
        return 1.0, 1.0, 1.0

    def xi(self, E):
        t1, t2, t3 = self.t123
        e = np.asarray(E, dtype=float) / self._unit()
        return t1 - e, t2 - 2 * e, t3 - e

    def _closed(self, n, K):
        _check_n(n)
        t1, t2, t3 = self.t123
        t = t1 - t2 + t3
        if K * K / 4 + t < 0:
            return None
        M = (n + 0.5) * K + math.sqrt(K * K / 4 + t)
        root8 = (t1 - t3 - M * M) / (2 * M)
        if root8 < 0:
            return None
        u = self._unit()
        return u * (t3 + (K - 1) ** 2 / 4) - u * root8**2

    def closed_form(self, n, order=CLASSICAL):
        return self._closed(n, order.ka)

    def continuum_threshold(self):
        return 0.0 if self.a == 0 and self.b == 0 else math.inf

    def classical_reference(self, n):
        t1, t2, t3 = self.t123
        M = (n + 0.5) + math.sqrt(0.25 + t1 - t2 + t3)
        u = self._unit()
        return u * t3 - u * ((t1 - t3 - M * M) / (2 * M)) ** 2

    def energy_scale(self):
        return self._unit()


@dataclass(frozen=True, kw_only=True)
class Pseudoharmonic(Potential):
    """V(r) = V0 (r/r0 - r0/r)^2 with s = A^2 r^2."""

    V0: float = 1.0
    r0: float = 1.0
    A: float = 1.0

    family: ClassVar[str] = "Pseudoharmonic"
    radial_kind: ClassVar[str] = "R"
    printed_form_consistent: ClassVar[bool] = False

    def validate(self):
        self._require(self.V0 > 0 and self.r0 > 0, "V0 > 0, r0 > 0")
        self._require(self.A > 0, "A > 0")

    @property
    def gamma2(self):
        return self.V0 * self.mu / (2 * self.r0**2 * self.A**4 * self.hbar**2)

    @property
    def beta(self):
        return (self.mu / self.hbar**2) * (
            self.V0 * self.r0**2 + self.l * (self.l + 1) * self.hbar**2 / (2 * self.mu)
        )

    def _eps_to_E(self, eps):
        return eps * self.hbar**2 * self.A**2 / self.mu - 2 * self.V0

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return self.V0 * (r / self.r0 - self.r0 / r) ** 2

    def s_of_r(self, r):
        return self.A**2 * np.asarray(r, dtype=float) ** 2

    def r_of_s(self, s):
        return np.sqrt(s) / self.A

    def coefficients(self):
        return 1.5, 0.0, 0.0

    def xi(self, E):
        eps = self.mu / (self.hbar**2 * self.A**2) * (np.asarray(E, dtype=float) + 2 * self.V0)
        return self.gamma2 + 0 * eps, eps, self.beta + 0 * eps

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        K = order.ka
        g = math.sqrt(self.gamma2)
        eps = g * ((2 * n + 1) * K + 2 * math.sqrt((K - 1.5) ** 2 / 4 + self.beta))
        return self._eps_to_E(eps)

    def printed_closed_form(self, n, order=CLASSICAL):
        # gamma multiplies only the first term as printed
        K = order.ka
        g = math.sqrt(self.gamma2)
        eps = (2 * n + 1) * g * K + 2 * math.sqrt((K - 1.5) ** 2 / 4 + self.beta)
        return self._eps_to_E(eps)

    def classical_reference(self, n):
        g = math.sqrt(self.gamma2)
        return self._eps_to_E(((2 * n + 1) + 2 * math.sqrt(1 / 16 + self.beta)) * g)

    def energy_center(self):
        return -2 * self.V0

    def energy_scale(self):
        return self.hbar**2 * self.A**2 / self.mu


@dataclass(frozen=True, kw_only=True)
class _InverseSquarePlusCoulomb(Potential):
    """Shared algebra of Mie and Kratzer-Fues (c1 = 2, s = A r)."""

    A: float = 1.0
    radial_kind: ClassVar[str] = "R"

    def s_of_r(self, r):
        return self.A * np.asarray(r, dtype=float)

    def r_of_s(self, s):
        return np.asarray(s, dtype=float) / self.A

    def coefficients(self):
        return 2.0, 0.0, 0.0

    # subclasses define beta, gamma, offset (the threshold energy)
    def _unit(self):
        return self.hbar**2 * self.A**2 / (2 * self.mu)

    def xi(self, E):
        eps2 = (np.asarray(E, dtype=float) - self.offset) / self._unit()
        return -eps2, -self.beta + 0 * eps2, self.gamma + 0 * eps2

    def _denominator(self, n, K):
        return (2 * n + 1) * K + 2 * math.sqrt((K - 2) ** 2 / 4 + self.gamma)

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        minus_eps2 = self.beta**2 / self._denominator(n, order.ka) ** 2
        return self.offset - self._unit() * minus_eps2

    def classical_reference(self, n):
        eps2 = -self.beta**2 * (2 * n + 1 + math.sqrt(1 + 4 * self.gamma)) ** -2
        return self.offset + self._unit() * eps2

    def continuum_threshold(self):
        return self.offset

    def energy_center(self):
        return self.offset

    def energy_scale(self):
        return self._unit()


@dataclass(frozen=True, kw_only=True)
class Mie(_InverseSquarePlusCoulomb):
    """V(r) = V0 (a^2 / (2 r^2) - a / r)."""

    V0: float = 1.0
    a: float = 1.0

    family: ClassVar[str] = "Mie"

    def validate(self):
        self._require(self.V0 > 0 and self.a > 0, "V0 > 0, a > 0")
        self._require(self.A > 0, "A > 0")

    offset = 0.0

    @property
    def beta(self):
        return -2 * self.mu * self.V0 * self.a / (self.hbar**2 * self.A)

    @property
    def gamma(self):
        return (2 * self.mu / self.hbar**2) * (
            0.5 * self.V0 * self.a**2 + self.l * (self.l + 1) * self.hbar**2 / (2 * self.mu)
        )

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return self.V0 * (0.5 * (self.a / r) ** 2 - self.a / r)


@dataclass(frozen=True, kw_only=True)
class KratzerFues(_InverseSquarePlusCoulomb):
    """V(r) = De ((r - re) / r)^2."""

    De: float = 5.0
    re: float = 1.0

    family: ClassVar[str] = "KratzerFues"

    def validate(self):
        self._require(self.De > 0 and self.re > 0, "De > 0, re > 0")
        self._require(self.A > 0, "A > 0")

    @property
    def offset(self):
        return self.De

    @property
    def beta(self):
        return -4 * self.mu * self.De * self.re / (self.A * self.hbar**2)

    @property
    def gamma(self):
        return 2 * self.mu * (self.De * self.re**2 + self.l * (self.l + 1) * self.hbar**2 / (2 * self.mu)) / self.hbar**2

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return self.De * ((r - self.re) / r) ** 2


@dataclass(frozen=True, kw_only=True)
class HarmonicOscillator(Potential):
    """V(r) = mu omega^2 r^2 / 2 with s = (mu omega / hbar) r^2."""

    omega: float = 1.0

    family: ClassVar[str] = "HarmonicOscillator"

    def validate(self):
        self._require(self.omega > 0, "omega > 0")

    @property
    def kappa(self):
        return self.mu * self.omega / self.hbar

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return 0.5 * self.mu * self.omega**2 * r * r

    def s_of_r(self, r):
        return self.kappa * np.asarray(r, dtype=float) ** 2

    def r_of_s(self, s):
        return np.sqrt(np.asarray(s, dtype=float) / self.kappa)

    def coefficients(self):
        return 0.5, 0.0, 0.0

    def xi(self, E):
        beta2 = 2 * np.asarray(E, dtype=float) / (self.hbar * self.omega)
        return 0.25 + 0 * beta2, beta2 / 4, self.l * (self.l + 1) / 4 + 0 * beta2

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        K = order.ka
        return self.hbar * self.omega * ((2 * n + 1) * K + math.sqrt((K - 0.5) ** 2 + self.l * (self.l + 1)))

    def classical_reference(self, n):
        return self.hbar * self.omega * ((2 * n + 1) + math.sqrt(0.25 + self.l * (self.l + 1)))

    def energy_scale(self):
        return self.hbar * self.omega


@dataclass(frozen=True, kw_only=True)
class Morse(Potential):
    """V(r) = D0 (1 - exp(-delta r))^2 on the whole line, s = exp(-delta r)."""

    D0: float = 8.0
    delta: float = 1.0

    family: ClassVar[str] = "Morse"
    whole_line: ClassVar[bool] = True
    l_dependent: ClassVar[bool] = False

    def validate(self):
        self._require(self.D0 > 0 and self.delta > 0, "D0 > 0, delta > 0")

    @property
    def gamma(self):
        return 2 * self.mu * self.D0 / self.hbar**2

    @property
    def P(self):
        return self.gamma / self.delta**2

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return self.D0 * (1 - np.exp(-self.delta * r)) ** 2

    def s_of_r(self, r):
        return np.exp(-self.delta * np.asarray(r, dtype=float))

    def r_of_s(self, s):
        return -np.log(s) / self.delta

    def coefficients(self):
        return 1.0, 0.0, 0.0

    def xi(self, E):
        eps2 = -2 * self.mu * np.asarray(E, dtype=float) / self.hbar**2
        R = (eps2 + self.gamma) / self.delta**2
        return self.P + 0 * R, 2 * self.P + 0 * R, R

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        K = order.ka
        if math.sqrt(self.P) - (2 * n + 1) * K / 2 < 0:
            return None
        pref = self.hbar**2 * self.delta**2 / (8 * self.mu)
        root = math.sqrt(2 * self.mu * self.D0 / (self.hbar**2 * self.delta**2))
        return self.D0 - pref * (-((K - 1) ** 2) + ((2 * n + 1) * K - 2 * root) ** 2)

    def classical_reference(self, n):
        pref = self.hbar**2 * self.delta**2 / (8 * self.mu)
        root = math.sqrt(2 * self.mu * self.D0 / (self.hbar**2 * self.delta**2))
        return self.D0 - pref * ((2 * n + 1) - 2 * root) ** 2

    def continuum_threshold(self):
        return self.D0

    def energy_center(self):
        return self.D0

    def energy_scale(self):
        return self.hbar**2 * self.delta**2 / (2 * self.mu)


# ---------------------------------------------------------------------------
# Jacobi-path families (c1 = 1, c2 = c3 = q)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, kw_only=True)
class _Deformed(Potential):
    q: float = 1.0
    l_dependent: ClassVar[bool] = False

    def _check_q(self):
        self._require(self.q > 0, "q > 0")

    def coefficients(self):
        return 1.0, self.q, self.q


@dataclass(frozen=True, kw_only=True)
class WoodsSaxon(_Deformed):
    """V(r) = -V0 / (1 + exp(2 lam r)), the R0 -> 0 form; s = exp(-2 lam r)."""

    V0: float = 50.0
    lam: float = 1.0

    family: ClassVar[str] = "WoodsSaxon"

    def validate(self):
        self._require(self.V0 > 0 and self.lam > 0, "V0 > 0, lambda > 0")
        self._check_q()

    def _unit(self):
        return 2 * self.hbar**2 * self.lam**2 / self.mu

    @property
    def beta(self):
        return self.mu * self.V0 / (2 * self.hbar**2 * self.lam**2)

    def potential(self, r):
        return -self.V0 / (1 + np.exp(2 * self.lam * np.asarray(r, dtype=float)))

    def s_of_r(self, r):
        return np.exp(-2 * self.lam * np.asarray(r, dtype=float))

    def r_of_s(self, s):
        return -np.log(s) / (2 * self.lam)

    def xi(self, E):
        q, b = self.q, self.beta
        eps = -np.asarray(E, dtype=float) / self._unit()
        return eps * q * q, 2 * eps * q - b * q, eps - b

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        K, b, m = order.ka, self.beta, n + 1
        if b - K * K * m * m < 0:
            return None
        eps = -((K - 1) ** 2) / 4 + b / 2 + b**2 / (2 * m * K) ** 2 + (m * K / 2) ** 2
        return -self._unit() * eps

    def classical_reference(self, n):
        b, m = self.beta, n + 1
        return -self._unit() * (b / 2 + b**2 / (2 * m) ** 2 + (m / 2) ** 2)

    def continuum_threshold(self):
        return 0.0

    def energy_scale(self):
        return self._unit()


@dataclass(frozen=True, kw_only=True)
class DeformedRosenMorse(_Deformed):
    """q-deformed Rosen-Morse family with s = exp(-2 alpha_s r).

    The potential is the one implied by the parameter block,
    V(r) = q [V1 - (q V1 - V2) s] / (1 - q s)^2.
    """

    V1: float = -20.0
    V2: float = 1.0
    alpha_s: float = 0.5

    family: ClassVar[str] = "DeformedRosenMorse"

    def validate(self):
        self._require(math.isfinite(self.V1) and math.isfinite(self.V2), "V1, V2 real")
        self._require(self.alpha_s > 0, "alpha_s > 0")
        self._check_q()

    def _unit(self):
        return 2 * self.alpha_s**2 * self.hbar**2 / self.mu

    @property
    def beta(self):
        return self.V1 * self.q / self._unit()

    @property
    def gamma(self):
        return self.V2 * self.q / self._unit()

    def potential(self, r):
        s = self.s_of_r(r)
        q = self.q
        return q * (self.V1 - (q * self.V1 - self.V2) * s) / (1 - q * s) ** 2

    def s_of_r(self, r):
        return np.exp(-2 * self.alpha_s * np.asarray(r, dtype=float))

    def r_of_s(self, s):
        return -np.log(s) / (2 * self.alpha_s)

    def xi(self, E):
        q, b, g = self.q, self.beta, self.gamma
        eps = -np.asarray(E, dtype=float) / self._unit()
        return eps * q * q, 2 * eps * q + b * q - g, b + eps

    def _D(self, n, K):
        return (2 * n + 1) * K + math.sqrt(K * K + 4 * self.gamma / self.q)

    def _eps(self, n, K):
        _check_n(n)
        if K * K + 4 * self.gamma / self.q < 0:
            return None
        D = self._D(n, K)
        if -D / 4 - self.beta / D < 0:
            return None
        b = self.beta
        return -((K - 1) ** 2) / 4 - b / 2 + b**2 / D**2 + D**2 / 16

    def closed_form(self, n, order=CLASSICAL):
        eps = self._eps(n, order.ka)
        return None if eps is None else -self._unit() * eps

    def classical_reference(self, n):
        b = self.beta
        D = (2 * n + 1) + math.sqrt(1 + 4 * self.gamma / self.q)
        return -self._unit() * (-b / 2 + b**2 / D**2 + D**2 / 16)

    def continuum_threshold(self):
        return self.q * self.V1

    def energy_center(self):
        return self.q * self.V1

    def energy_scale(self):
        return self._unit()


@dataclass(frozen=True, kw_only=True)
class Hulthen(_Deformed):
    """V(r) = -(P/p) / (exp(r/p) - 1), solved as the V2 = 0, q = 1 member
    of the deformed Rosen-Morse block with alpha_s = 1/(2p), V1 = -P/p.
    Energies differ from that block by the constant P/p.
    """

    P: float = 10.0
    p: float = 2.0

    family: ClassVar[str] = "Hulthen"

    def validate(self):
        self._require(self.P > 0 and self.p > 0, "P > 0, p > 0")
        self._require(self.q == 1.0, "q = 1 (Hulthen is undeformed)")

    @property
    def block(self) -> DeformedRosenMorse:
        return DeformedRosenMorse(
            V1=-self.P / self.p, V2=0.0, alpha_s=1 / (2 * self.p), q=1.0,
            mu=self.mu, hbar=self.hbar, l=self.l,
        )

    @property
    def shift(self):
        return self.P / self.p

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return -(self.P / self.p) / np.expm1(r / self.p)

    def s_of_r(self, r):
        return np.exp(-np.asarray(r, dtype=float) / self.p)

    def r_of_s(self, s):
        return -self.p * np.log(s)

    def xi(self, E):
        return self.block.xi(np.asarray(E, dtype=float) - self.shift)

    def closed_form(self, n, order=CLASSICAL):
        e = self.block.closed_form(n, order)
        return None if e is None else e + self.shift

    def classical_reference(self, n):
        return self.block.classical_reference(n) + self.shift

    def continuum_threshold(self):
        return 0.0

    def energy_scale(self):
        return self.hbar**2 / (2 * self.mu * self.p**2)


@dataclass(frozen=True, kw_only=True)
class PoschlTeller(_Deformed):
    """V(r) = -4 V0 e^{-2 alpha_s r} / (1 + q e^{-2 alpha_s r})^2 with the
    signed substitution -s = exp(-2 alpha_s r).

    The negative-K condition has no root with a non-negative sqrt(c8) for this
    family; the positive-K branch carries the bound states.
    """

    V0: float = 5.0
    alpha_s: float = 0.5

    family: ClassVar[str] = "PoschlTeller"
    default_branch: ClassVar[Branch] = Branch.POSITIVE_K
    printed_form_consistent: ClassVar[bool] = False

    def validate(self):
        self._require(self.V0 > 0 and self.alpha_s > 0, "V0 > 0, alpha_s > 0")
        self._check_q()

    def _unit(self):
        return 2 * self.alpha_s**2 * self.hbar**2 / self.mu

    @property
    def beta2(self):
        return 2 * self.mu * self.V0 / (self.alpha_s**2 * self.hbar**2)

    def potential(self, r):
        e = np.exp(-2 * self.alpha_s * np.asarray(r, dtype=float))
        return -4 * self.V0 * e / (1 + self.q * e) ** 2

    def s_of_r(self, r):
        return -np.exp(-2 * self.alpha_s * np.asarray(r, dtype=float))

    def r_of_s(self, s):
        return -np.log(-np.asarray(s, dtype=float)) / (2 * self.alpha_s)

    def xi(self, E):
        q = self.q
        eps2 = -np.asarray(E, dtype=float) / self._unit()
        return eps2 * q * q, 2 * eps2 * q - self.beta2, eps2

    def _D(self, n, K):
        return (2 * n + 1) * K + math.sqrt(K * K + 4 * self.beta2 / self.q)

    def closed_form(self, n, order=CLASSICAL):
        _check_n(n)
        K = order.ka
        eps2 = self._D(n, K) ** 2 / 16 - (K - 1) ** 2 / 4
        if eps2 < 0:
            return None
        return -self._unit() * eps2

    def printed_closed_form(self, n, order=CLASSICAL):
        K = order.ka
        eps = -((K - 1) ** 2) / 4 - self._D(n, K) / 4
        return -self._unit() * eps**2

    def classical_reference(self, n):
        eps = -0.25 * ((2 * n + 1) + math.sqrt(1 + 4 * self.beta2 / self.q))
        return -self._unit() * eps**2

    def continuum_threshold(self):
        return 0.0

    def energy_scale(self):
        return self._unit()


FAMILIES = {
    cls.family: cls
    for cls in (
        ExtendedCornell, Pseudoharmonic, Mie, KratzerFues, HarmonicOscillator,
        Morse, WoodsSaxon, Hulthen, DeformedRosenMorse, PoschlTeller,
    )
}

_ALIASES = {
    "cornell": "ExtendedCornell", "extendedcornell": "ExtendedCornell",
    "pseudoharmonic": "Pseudoharmonic", "ph": "Pseudoharmonic",
    "mie": "Mie",
    "kratzer": "KratzerFues", "kratzerfues": "KratzerFues",
    "ho": "HarmonicOscillator", "harmonic": "HarmonicOscillator",
    "harmonicoscillator": "HarmonicOscillator",
    "morse": "Morse",
    "woodssaxon": "WoodsSaxon", "ws": "WoodsSaxon",
    "hulthen": "Hulthen",
    "deformedrosenmorse": "DeformedRosenMorse", "drm": "DeformedRosenMorse",
    "rosenmorse": "DeformedRosenMorse",
    "poschlteller": "PoschlTeller", "pt": "PoschlTeller",
}


def family_class(name: str):
    key = name.replace("-", "").replace("_", "").replace(" ", "").lower()
    try:
        return FAMILIES[_ALIASES[key]]
    except KeyError:
        raise DomainError(f"unknown potential family {name!r}; choose from {sorted(FAMILIES)}") from None


def make_potential(name: str, **params) -> Potential:
    cls = family_class(name)
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = set(params) - known
    if unknown:
        raise DomainError(f"{cls.family}: unknown parameter(s) {sorted(unknown)}; expected {sorted(known)}")
    return cls(**params)


# module-level spellings of the catalog operations
def to_parametric(spec: Potential, E: float, order: FractionalOrder = CLASSICAL) -> ParametricProblem:
    return spec.to_parametric(E, order)


def closed_form_energy(spec: Potential, n: int, l: int | None = None, order: FractionalOrder = CLASSICAL):
    if l is not None:
        spec = spec.with_l(l)
    return spec.closed_form(n, order)


def classical_reference(spec: Potential, n: int, l: int | None = None) -> float:
    if l is not None:
        spec = spec.with_l(l)
    return spec.classical_reference(n)


def s_transform(spec: Potential, r):
    return spec.s_of_r(r)

"""Exception types raised by gfnu."""


class GFNUError(Exception):
    """Base class for all gfnu errors."""


class DomainError(GFNUError, ValueError):
    """An argument lies outside the domain of the operation."""


class NoRealSolutionError(GFNUError):
    """A square-root argument of the parametric system is negative.

    ``name`` is the coefficient (``"c8"`` or ``"c9"``) and ``value`` its
    offending value.
    """

    def __init__(self, name, value):
        self.name = name
        self.value = value
        super().__init__(f"no real solution: {name} = {value!r} < 0")


class NoBoundStateError(GFNUError):
    """No sign change of the quantization residual inside the scanned window."""

    def __init__(self, window):
        self.window = window
        lo, hi = window
        super().__init__(f"no-bound-state-bracketed in [{lo!r}, {hi!r}]")


class NonNormalizableError(GFNUError):
    """A polynomial index of the wavefunction is <= -1."""

    def __init__(self, name, value):
        self.name = name
        self.value = value
        super().__init__(f"non-normalizable: {name} = {value!r} <= -1")

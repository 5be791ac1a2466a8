"""Exception types shared across the library.

Every failure mode callers are expected to catch has its own class so the
CLI can map them to exit codes and sweeps can convert them into
inconclusive outcomes without string matching.
"""


class WavecexError(Exception):
    """Base class for all library-specific errors."""


class NonConvergence(WavecexError):
    """Adaptive quadrature exhausted its panel budget before reaching tol."""


class NoCriticalAngle(WavecexError):
    """Speed c < 1: the phase factor 1 + c*cos(theta) has no zero on [0, pi]."""


class DomainTouchesSingularity(WavecexError):
    """Angular domain reaches or crosses the critical angle where an
    uncut integral is infinite."""


class DivergentAtOrigin(WavecexError):
    """The radial weight is nonintegrable at frequency zero for this
    Sobolev exponent (n - 1 - 2s <= -1 with nonvanishing profile)."""


class NyquistViolation(WavecexError):
    """Grid too coarse: the cutoff kernel has frequency content at or
    beyond the lattice Nyquist radius."""


class TimeWindowTooSmall(WavecexError):
    """Time quadrature window does not contain the profile's support
    (or its tails exceed tolerance)."""


class InsufficientData(WavecexError):
    """Not enough sequence entries for the requested fit window."""

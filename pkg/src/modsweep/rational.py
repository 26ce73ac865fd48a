"""Exact rational plumbing for resolution comparisons.

Every comparison that steers control flow (resolution ordering, zero tests
of merge gains) is done on integer ratios, never on floats.  Python ints
are unbounded, so cross-multiplied comparisons are always exact.
"""

from __future__ import annotations

from fractions import Fraction


def as_fraction(t) -> Fraction:
    """Convert ``t`` to an exact Fraction.

    Floats convert to their exact binary value, strings via the usual
    Fraction grammar ("0.7" and "7/10" both give 7/10).
    """
    if isinstance(t, Fraction):
        return t
    if isinstance(t, (int, float, str)):
        return Fraction(t)
    raise TypeError(f"cannot interpret {t!r} as an exact ratio")


def positive_fraction(t, name: str = "t") -> Fraction:
    f = as_fraction(t)
    if f <= 0:
        raise ValueError(f"{name} must be positive, got {t!r}")
    return f

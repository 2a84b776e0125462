"""Points of the complex plane, classified against the critical strip."""

from __future__ import annotations

from dataclasses import dataclass

# Classification labels for StripPoint.region.
OPEN_STRIP = "open-strip"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True)
class StripPoint:
    """A point s = sigma + i t, with strip classification helpers.

    sigma and t are stored as plain floats: the whole package works in
    binary64 and makes no attempt to track inputs that cannot be
    represented exactly there.
    """

    sigma: float
    t: float

    @staticmethod
    def from_complex(s: complex) -> "StripPoint":
        s = complex(s)
        return StripPoint(float(s.real), float(s.imag))

    def as_complex(self) -> complex:
        return complex(self.sigma, self.t)

    @property
    def region(self) -> str:
        """One of OPEN_STRIP, BOUNDARY, EXTERIOR.

        The strip is 0 < sigma < 1; its edges sigma = 0 and sigma = 1
        classify as BOUNDARY regardless of t.
        """
        if 0.0 < self.sigma < 1.0:
            return OPEN_STRIP
        if self.sigma == 0.0 or self.sigma == 1.0:
            return BOUNDARY
        return EXTERIOR

    @property
    def in_open_strip(self) -> bool:
        return 0.0 < self.sigma < 1.0


def as_strip_point(s) -> StripPoint:
    """Coerce a complex number, a (sigma, t) pair, or a StripPoint."""
    if isinstance(s, StripPoint):
        return s
    if isinstance(s, tuple) and len(s) == 2:
        return StripPoint(float(s[0]), float(s[1]))
    return StripPoint.from_complex(s)

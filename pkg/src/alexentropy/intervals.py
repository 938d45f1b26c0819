"""Closed real intervals with mpmath endpoints.

Every computation in :mod:`alexentropy.arch` runs in its own
``MPContext`` so that working precision is never shared between callers.
Endpoints keep the context they were created in; sums are rounded outward.
"""
from __future__ import annotations

from dataclasses import dataclass

from mpmath.ctx_mp import MPContext


def make_context(bits: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = int(bits)
    return ctx


def pad(ctx: MPContext, x, ulps: int = 8):
    """Absolute slack covering a few roundings of ``x`` at ``ctx.prec``."""
    return (abs(x) + 1) * ctx.ldexp(1, -ctx.prec + ulps.bit_length())


@dataclass(frozen=True)
class RealInterval:
    lo: object
    hi: object

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, ctx: MPContext, x) -> "RealInterval":
        x = ctx.mpf(x)
        return cls(x, x)

    @classmethod
    def around(cls, ctx: MPContext, x, radius=0) -> "RealInterval":
        """``[x - radius, x + radius]`` widened by the rounding slack of ``x``.

        An exact zero (``log 1``, or a zero multiplier) gets no slack.
        """
        x = ctx.mpf(x)
        r = ctx.mpf(radius) + (pad(ctx, x) if x else 0)
        return cls(x - r, x + r)

    @property
    def context(self) -> MPContext:
        return self.lo.context

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "RealInterval") -> "RealInterval":
        ctx = self.context
        return RealInterval(
            ctx.fadd(self.lo, other.lo, rounding="f"),
            ctx.fadd(self.hi, other.hi, rounding="c"),
        )

    def scale(self, k) -> "RealInterval":
        """Multiply by a nonnegative exact scalar."""
        ctx = self.context
        k = ctx.mpf(k)
        return RealInterval(
            ctx.fmul(self.lo, k, rounding="f"), ctx.fmul(self.hi, k, rounding="c")
        )

    def intersect(self, other: "RealInterval") -> "RealInterval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return RealInterval(lo, hi)

    def distance(self, other: "RealInterval"):
        """Gap between the intervals (0 if they overlap)."""
        if self.hi < other.lo:
            return other.lo - self.hi
        if other.hi < self.lo:
            return self.lo - other.hi
        return self.lo * 0

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        ctx = self.context
        return f"RealInterval({ctx.nstr(self.lo, 20)}, {ctx.nstr(self.hi, 20)})"


INF = "inf"


@dataclass(frozen=True)
class PlaceEntropy:
    """Entropy contribution of one place.

    ``place`` is a prime or :data:`INF`.  At a finite place ``exponent`` is the
    exact rational ``e_p`` and ``value`` encloses ``e_p * log p``; at the
    archimedean place ``exponent`` is ``None``.
    """

    place: object
    exponent: object
    value: RealInterval

    @property
    def is_finite(self) -> bool:
        return self.place != INF

"""Finite places: Newton polygons and p-adic entropies.

For a prime ``p`` the lower convex hull of ``(i, v_p(a_i))`` has one segment
of slope ``s`` and length ``l`` for every ``l`` roots of absolute value
``|alpha|_p = p^s``.  The expanding roots are the positive-slope segments, so
the entropy at ``p`` is ``e_p * log p`` with ``e_p`` the sum of ``s * l`` over
those segments.  Everything here is exact rational arithmetic; logarithms
only appear in :class:`PlaceEntropy` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arch import DEFAULT_PRECISION, archimedean_entropy
from .intervals import INF, PlaceEntropy, RealInterval, make_context
from .polycore import IntPoly, content

TRIAL_DIVISION_LIMIT = 10**6


class IdentityViolation(ArithmeticError):
    """An exact identity that must hold for every input failed."""


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    points: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, int], ...]
    segments: tuple[tuple[Fraction, int], ...]

    @property
    def slopes(self) -> list[Fraction]:
        return [s for s, _ in self.segments]


@dataclass(frozen=True)
class EntropySpectrum:
    """Entropy at every place.

    ``entries`` maps each prime with ``e_p > 0`` and the key :data:`INF` to a
    :class:`PlaceEntropy`.
    """

    entries: dict
    finite_total: RealInterval
    grand_total: RealInterval

    @property
    def finite(self) -> dict:
        return {p: e for p, e in self.entries.items() if p != INF}

    @property
    def archimedean(self) -> PlaceEntropy:
        return self.entries[INF]


@dataclass(frozen=True)
class LeadingCertificate:
    """``{p: (e_p, v_p(a_n))}`` for the primes dividing ``a_n``."""

    pairs: dict
    leading: int

    @property
    def holds(self) -> bool:
        return all(e == v for e, v in self.pairs.values())


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def valuation(n: int, p: int) -> int:
    """``v_p(n)`` for ``n != 0``."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n, v = abs(n), 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def factor_trial(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> dict[int, int]:
    """Factor ``|n|`` by trial division up to ``limit``.

    A cofactor left over once ``limit`` is reached cannot be certified prime
    this way and raises ``ValueError``.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= limit:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            raise ValueError(f"leading coefficient has a factor {n} beyond trial division")
    return out


def _lower_hull(points):
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_polygon(f: IntPoly, p: int) -> NewtonPolygon:
    """Lower convex hull of ``(i, v_p(a_i))`` over the nonzero coefficients.

    >>> newton_polygon(IntPoly((2, -3, 2)), 2).segments
    ((Fraction(-1, 1), 1), (Fraction(1, 1), 1))
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    points = tuple((i, valuation(a, p)) for i, a in enumerate(f.coeffs) if a)
    vertices = tuple(_lower_hull(points))
    segments = tuple(
        (Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(vertices, vertices[1:])
    )
    return NewtonPolygon(p, points, vertices, segments)


def expansion_exponent(poly: NewtonPolygon) -> Fraction:
    """``e_p``: total slope over the segments whose roots have ``|alpha|_p > 1``."""
    return sum((s * l for s, l in poly.segments if s > 0), Fraction(0))


def place_entropy(f: IntPoly, p: int, precision: int = DEFAULT_PRECISION) -> PlaceEntropy:
    """Entropy ``e_p * log p`` of the meridian action at the prime ``p``."""
    e = expansion_exponent(newton_polygon(f, p))
    if content(f) == 1 and e != valuation(f.leading, p):
        raise IdentityViolation(f"e_{p} = {e} but v_{p}(a_n) = {valuation(f.leading, p)} for {f}")
    ctx = make_context(precision)
    value = RealInterval.around(ctx, ctx.log(p) * e.numerator / e.denominator)
    return PlaceEntropy(p, e, value)


def entropy_spectrum(f: IntPoly, precision: int = DEFAULT_PRECISION) -> EntropySpectrum:
    """Entropies at all places and their sum.

    Only primes dividing ``a_n`` can expand, so ``a_n`` is factored and the
    real place is delegated to :func:`archimedean_entropy`.
    """
    ctx = make_context(precision)
    entries = {}
    finite_total = RealInterval.point(ctx, 0)
    for p in sorted(factor_trial(f.leading)):
        pe = place_entropy(f, p, precision)
        if pe.exponent > 0:
            entries[p] = pe
            finite_total = finite_total + pe.value
    inf = archimedean_entropy(f, precision)
    entries[INF] = inf
    return EntropySpectrum(entries, finite_total, finite_total + inf.value)


def leading_decomposition(f: IntPoly) -> LeadingCertificate:
    """Exact check that ``log|a_n|`` splits into the finite-place entropies.

    Compares ``e_p`` from the Newton polygon with ``v_p(a_n)`` for every
    ``p | a_n``; no logarithms involved.
    """
    if content(f) != 1:
        raise ValueError("identity requires primitive polynomial")
    pairs = {}
    for p in sorted(factor_trial(f.leading)):
        e = expansion_exponent(newton_polygon(f, p))
        pairs[p] = (e, valuation(f.leading, p))
    return LeadingCertificate(pairs, f.leading)


def finitely_generated_obstruction(f: IntPoly) -> tuple[bool, list[int]]:
    """``(True, [])`` when every finite-place entropy vanishes.

    Otherwise ``(False, primes)`` listing the primes with ``h(t_p) > 0``; each
    one rules out finite generation of the Alexander module over Z.
    """
    witnesses = [
        p for p in sorted(factor_trial(f.leading))
        if expansion_exponent(newton_polygon(f, p)) > 0
    ]
    return not witnesses, witnesses

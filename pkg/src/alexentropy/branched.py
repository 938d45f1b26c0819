"""Homology orders of branched cyclic covers and their growth.

``|H_1(X_r)|`` is the absolute value of ``Res(f, t^r - 1)``: the Fox product
over the nontrivial r-th roots of unity times the trivial factor
``|f(1)| = 1``.  An order of 0 encodes an infinite group, so sequences stay
dense integer lists.
"""
from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .arch import DEFAULT_PRECISION, all_roots_of_unity, cyclotomic_orders, mahler_measure
from .intervals import RealInterval
from .padic import is_prime, valuation
from .polycore import IntPoly, resultant_with_cyclotomic_power

DEFAULT_RMAX = 400
RMAX_CAP = 2000
MIN_WINDOW_ENTRIES = 5


@dataclass(frozen=True)
class HomologySequence:
    """``orders[r - 1] = |H_1(X_r; Z)|`` for ``r = 1 .. r_max``; 0 means infinite."""

    poly: IntPoly
    orders: tuple[int, ...]

    @property
    def r_max(self) -> int:
        return len(self.orders)

    def order(self, r: int) -> int:
        return self.orders[r - 1]

    def items(self):
        return enumerate(self.orders, start=1)


@dataclass(frozen=True)
class GrowthReport:
    window: tuple[int, int]
    per_r: tuple[tuple[int, float], ...]
    window_median: float
    mahler_reference: RealInterval
    deviation: float


@dataclass(frozen=True)
class PeriodicityReport:
    periodic: bool
    period: int | None
    cyclotomic_lcm: int | None = None


@dataclass(frozen=True)
class PPartProfile:
    prime: int
    valuations: tuple[tuple[int, int], ...]
    window: tuple[int, int]
    diagnostic: Fraction


def _require_knot_like(f: IntPoly):
    if sum(f.coeffs) not in (1, -1):
        raise ValueError("not a knot polynomial; Fox formula normalization fails")


def homology_order(f: IntPoly, r: int) -> int:
    """``|H_1(X_r(K); Z)|`` for the knot with Alexander polynomial ``f``.

    >>> [homology_order(IntPoly((1, -3, 1)), r) for r in range(1, 6)]
    [1, 5, 16, 45, 121]
    """
    _require_knot_like(f)
    if r < 1:
        raise ValueError("r must be a positive integer")
    return abs(resultant_with_cyclotomic_power(f, r))


def homology_sequence(f: IntPoly, r_max: int, workers: int | None = None) -> HomologySequence:
    """Orders for ``r = 1 .. r_max``, optionally spread over worker processes.

    Results are assembled in ``r`` order, so the output does not depend on
    ``workers``.
    """
    _require_knot_like(f)
    if r_max < 1:
        raise ValueError("r_max must be a positive integer")
    if r_max > RMAX_CAP:
        raise ValueError(
            f"r_max={r_max} exceeds the cap {RMAX_CAP}; orders grow like exp(m(f) * r)"
        )
    rs = range(1, r_max + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            orders = tuple(pool.map(partial(homology_order, f), rs, chunksize=16))
    else:
        orders = tuple(homology_order(f, r) for r in rs)
    return HomologySequence(f, orders)


def _window(seq: HomologySequence, window):
    if window is None:
        window = (max(1, seq.r_max // 2), seq.r_max)
    lo, hi = int(window[0]), int(window[1])
    if not 1 <= lo <= hi <= seq.r_max:
        raise ValueError(f"window {lo}:{hi} outside 1:{seq.r_max}")
    return lo, hi


def growth_estimate(seq: HomologySequence, window=None, precision: int = DEFAULT_PRECISION,
                    mahler: RealInterval | None = None) -> GrowthReport:
    """Median of ``log|H_1(X_r)| / r`` over the finite orders in ``window``.

    ``window`` defaults to ``(r_max // 2, r_max)``.  The median rather than the
    last term is used because circle roots make ``|alpha^r - 1|`` oscillate.
    """
    lo, hi = _window(seq, window)
    per_r = tuple(
        (r, math.log(seq.order(r)) / r) for r in range(lo, hi + 1) if seq.order(r)
    )
    if len(per_r) < MIN_WINDOW_ENTRIES:
        raise ValueError("window dominated by infinite homology")
    median = statistics.median(v for _, v in per_r)
    if mahler is None:
        mahler = mahler_measure(seq.poly, precision)
    deviation = abs(median - float(mahler.mid))
    return GrowthReport((lo, hi), per_r, median, mahler, deviation)


def _minimal_period(values) -> int:
    n = len(values)
    for p in range(1, n + 1):
        if n % p == 0 and all(values[i] == values[(i + p) % n] for i in range(n)):
            return p
    return n


def periodicity_check(f: IntPoly, r_max: int = 60) -> PeriodicityReport:
    """Period of the order sequence when every root is a root of unity.

    Then ``alpha^r`` only depends on ``r`` modulo the lcm ``L`` of the orders
    of the roots, so the sequence is ``L``-periodic; the minimal period is
    read off one full block and checked against the first ``r_max`` terms.
    """
    _require_knot_like(f)
    if not all_roots_of_unity(f):
        return PeriodicityReport(False, None)
    big_l = math.lcm(*cyclotomic_orders(f)) if f.degree else 1
    block = homology_sequence(f, big_l).orders
    period = _minimal_period(block)
    if big_l % period:
        raise ArithmeticError(f"period {period} does not divide {big_l}")
    seq = homology_sequence(f, r_max).orders
    if any(seq[i] != block[i % big_l] for i in range(len(seq))):
        raise ArithmeticError("order sequence is not periodic with the cyclotomic lcm")
    return PeriodicityReport(True, period, big_l)


def p_part_profile(seq: HomologySequence, p: int, window=None) -> PPartProfile:
    """``v_p(|H_1(X_r)|)`` for every finite order and the exact worst ``v_p / r`` in ``window``.

    A small diagnostic means the prime ``p`` cannot carry exponential growth.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lo, hi = _window(seq, window)
    vals = tuple((r, valuation(o, p)) for r, o in seq.items() if o)
    in_window = [Fraction(v, r) for r, v in vals if lo <= r <= hi]
    return PPartProfile(p, vals, (lo, hi), max(in_window, default=Fraction(0)))

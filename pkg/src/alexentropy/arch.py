"""Archimedean place: certified roots, Mahler measure, circle and Kronecker tests.

Roots are found by Aberth-Ehrlich iteration (a double-precision pass, then
refinement in a private mpmath context) and certified with the Weierstrass
inclusion disks ``D(z_i, n |W_i|)``, ``W_i = g(z_i) / (lc(g) prod_{j!=i}(z_i - z_j))``,
for the squarefree part ``g``.  Once the disks are pairwise disjoint each one
holds exactly one root.

The logarithmic Mahler measure is enclosed twice, from the certified roots
(Jensen's formula) and from Graeffe root squaring with the Landau and
binomial coefficient bounds; :func:`mahler_measure` returns the overlap.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from math import comb

from .intervals import INF, PlaceEntropy, RealInterval, make_context, pad
from .polycore import (
    IntPoly,
    cyclotomic_factorization,
    poly_divexact,
    poly_gcd,
    poly_mul,
    primitive_part,
    reciprocal,
    squarefree_decomposition,
    squarefree_part,
)

DEFAULT_PRECISION = 128
PRECISION_CAP = 2048
GRAEFFE_TOL = 1e-10
GRAEFFE_MAX_ITER = 64
MAHLER_AGREEMENT = 1e-9


class PrecisionError(ArithmeticError):
    """Roots could not be separated below the precision cap."""


class MahlerMismatch(ArithmeticError):
    """The two Mahler-measure enclosures are inconsistent."""


class Circle(enum.Enum):
    ON = "on"
    OFF = "off"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CertifiedRoot:
    """Disk ``|z - center| <= radius`` holding exactly one distinct root.

    ``reciprocal`` marks roots of the self-reciprocal part of their squarefree
    factor; only those can lie on the unit circle.
    """

    center: object
    radius: object
    multiplicity: int
    reciprocal: bool = False

    def __repr__(self):
        ctx = self.radius.context
        return (f"CertifiedRoot({ctx.nstr(self.center, 15)}, r={ctx.nstr(self.radius, 3)},"
                f" m={self.multiplicity})")


# -- Aberth-Ehrlich -------------------------------------------------------------

def _aberth_double(a, max_iter=500):
    n = len(a) - 1
    lead = float(a[-1])
    p = [float(x) / lead for x in a]
    dp = [i * p[i] for i in range(1, n + 1)]
    rad = abs(p[0]) ** (1.0 / n)
    centroid = -p[n - 1] / n
    z = [centroid + rad * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    for _ in range(max_iter):
        worst = 0.0
        for i in range(n):
            zi = z[i]
            pv = p[n]
            for c in reversed(p[:-1]):
                pv = pv * zi + c
            dv = dp[-1]
            for c in reversed(dp[:-1]):
                dv = dv * zi + c
            if pv == 0:
                continue
            s = sum(1.0 / (zi - z[j]) for j in range(n) if j != i and zi != z[j])
            w = pv / dv if dv != 0 else pv
            delta = w / (1 - w * s)
            z[i] = zi - delta
            worst = max(worst, abs(delta) / max(1.0, abs(zi)))
        if worst < 1e-15:
            break
    return z


def _horner(coeffs, z):
    acc = coeffs[-1] * 0 + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _aberth_refine(ctx, a, z, max_iter=200):
    n = len(a) - 1
    p = [ctx.mpf(x) for x in a]
    dp = [i * p[i] for i in range(1, n + 1)]
    z = [ctx.mpc(x) for x in z]
    tol = ctx.ldexp(1, -ctx.prec + 8)
    for _ in range(max_iter):
        worst = ctx.zero
        for i in range(n):
            zi = z[i]
            pv = _horner(p, zi)
            if pv == 0:
                continue
            dv = _horner(dp, zi)
            s = ctx.fsum(1 / (zi - z[j]) for j in range(n) if j != i and zi != z[j])
            w = pv / dv if dv != 0 else pv
            delta = w / (1 - w * s)
            z[i] = zi - delta
            worst = max(worst, abs(delta) / max(ctx.one, abs(zi)))
        if worst < tol:
            break
    return z


def _approximate_roots(ctx, a):
    if len(a) == 2:
        return [ctx.mpc(ctx.mpf(-a[0]) / a[1])]
    try:
        start = _aberth_double(a)
    except (OverflowError, ZeroDivisionError):
        n = len(a) - 1
        start = [cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    return _aberth_refine(ctx, a, start)


def _inclusion_radii(ctx, a, z):
    """Weierstrass inclusion radii for the roots of ``a`` approximated by ``z``."""
    n = len(a) - 1
    coeffs = [ctx.mpf(x) for x in a]
    abs_coeffs = [abs(c) for c in coeffs]
    lead = abs(coeffs[-1])
    slack = 4 * (n + 1) * ctx.ldexp(1, -ctx.prec)
    radii = []
    for i, zi in enumerate(z):
        val = abs(_horner(coeffs, zi)) + slack * _horner(abs_coeffs, abs(zi))
        denom = lead
        for j, zj in enumerate(z):
            if j != i:
                denom *= abs(zi - zj)
        if denom == 0:
            radii.append(ctx.inf)
            continue
        denom *= 1 - slack
        radii.append(n * val / denom + pad(ctx, abs(zi)))
    return radii


def _disjoint(centers, radii):
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if abs(centers[i] - centers[j]) <= radii[i] + radii[j]:
                return False
    return True


def _pieces(f: IntPoly):
    """Coprime factors ``(poly, multiplicity, is_reciprocal_part)`` covering all roots."""
    out = []
    for s, k in squarefree_decomposition(f.coeffs):
        q = poly_gcd(s, reciprocal(s))
        if len(q) > 1:
            out.append((q, k, True))
        u = primitive_part(poly_divexact(s, q)) if len(q) > 1 else s
        if len(u) > 1:
            out.append((u, k, False))
    return out


def _certify(f: IntPoly, bits: int):
    ctx = make_context(bits)
    pieces = _pieces(f)
    if not pieces:
        return []
    centers, tags, spans = [], [], []
    g = (1,)
    for poly, mult, recip in pieces:
        z = _approximate_roots(ctx, poly)
        spans.append((len(centers), len(centers) + len(z)))
        centers.extend(z)
        tags.extend([(mult, recip)] * len(z))
        g = poly_mul(g, poly)
    radii = _inclusion_radii(ctx, g, centers)
    if not _disjoint(centers, radii):
        return None
    # A piece disk meeting only its own g-disk pins that root to the piece.
    for (poly, _, _), (lo, hi) in zip(pieces, spans):
        own = _inclusion_radii(ctx, poly, centers[lo:hi])
        for i, r in zip(range(lo, hi), own):
            for j in range(len(centers)):
                if j != i and abs(centers[i] - centers[j]) <= r + radii[j]:
                    return None
    return [CertifiedRoot(c, r, m, rec) for c, r, (m, rec) in zip(centers, radii, tags)]


def roots_certified(f: IntPoly, precision: int = DEFAULT_PRECISION) -> list[CertifiedRoot]:
    """Certified disks for the distinct roots of ``f`` with multiplicities.

    Precision doubles until the disks separate, up to :data:`PRECISION_CAP`.
    """
    if f.degree < 1:
        raise ValueError("constant polynomial has no roots")
    bits = int(precision)
    while True:
        roots = _certify(f, bits)
        if roots is not None:
            return roots
        if bits >= PRECISION_CAP:
            raise PrecisionError(f"could not separate the roots of {f} at {bits} bits")
        bits = min(2 * bits, PRECISION_CAP)


# -- unit circle ----------------------------------------------------------------

def _matching(roots, root):
    best = min(roots, key=lambda s: abs(s.center - root.center))
    if abs(best.center - root.center) > best.radius + root.radius:
        raise ValueError("root does not belong to the given root set")
    return best


def on_unit_circle_exact(f: IntPoly, root: CertifiedRoot, roots=None,
                         precision: int = DEFAULT_PRECISION) -> Circle:
    """Decide ``|alpha| = 1`` for the root isolated by ``root``.

    Off-circle answers come from the disk itself, or from the fact that a
    circle root satisfies ``1/alpha = conj(alpha)`` and hence is a root of the
    self-reciprocal part.  For a root of that part, ``1/conj(alpha)`` is again a
    root; if the inverted disk meets no other isolating disk it must be
    ``alpha`` itself, so ``|alpha| = 1`` exactly.
    """
    if roots is None:
        roots = roots_certified(f, precision)
        root = _matching(roots, root)
    ctx = root.radius.context
    c = root.center
    a = abs(c)
    rho = root.radius + pad(ctx, a)
    if a - rho > 1 or a + rho < 1:
        return Circle.OFF
    if not root.reciprocal:
        return Circle.OFF
    den = a * a - rho * rho
    if den <= 0:
        return Circle.UNDECIDED
    inv_center = c / den
    inv_radius = rho / den + pad(ctx, abs(inv_center))
    for other in roots:
        if other is root:
            continue
        if abs(inv_center - other.center) <= inv_radius + other.radius:
            return Circle.UNDECIDED
    return Circle.ON


def _log_interval(ctx, lo, hi):
    a, b = ctx.log(lo), ctx.log(hi)
    return RealInterval(a - pad(ctx, a), b + pad(ctx, b))


def _outside_sum(f: IntPoly, precision: int) -> RealInterval:
    """Enclosure of ``sum_{|alpha| > 1} log|alpha|`` over roots with multiplicity."""
    bits = int(precision)
    while True:
        roots = roots_certified(f, bits)
        ctx = make_context(bits)
        total = RealInterval.point(ctx, 0)
        unresolved = []
        for root in roots:
            status = on_unit_circle_exact(f, root, roots)
            if status is Circle.ON:
                continue
            a = abs(root.center)
            rho = root.radius + pad(ctx, a)
            if status is Circle.OFF and a - rho > 1:
                total = total + _log_interval(ctx, a - rho, a + rho).scale(root.multiplicity)
            elif status is Circle.OFF and a + rho < 1:
                continue
            else:
                unresolved.append((root, a + rho))
        if not unresolved:
            return total
        if bits >= PRECISION_CAP:
            for root, upper in unresolved:
                hi = ctx.log(upper)
                total = total + RealInterval(ctx.zero, hi + pad(ctx, hi)).scale(root.multiplicity)
            return total
        bits = min(2 * bits, PRECISION_CAP)


def archimedean_entropy(f: IntPoly, precision: int = DEFAULT_PRECISION) -> PlaceEntropy:
    """Entropy at the real place, ``sum_{|alpha| > 1} log|alpha|``."""
    if f.degree < 1:
        return PlaceEntropy(INF, None, RealInterval.point(make_context(precision), 0))
    return PlaceEntropy(INF, None, _outside_sum(f, precision))


# -- Mahler measure ---------------------------------------------------------------

def mahler_measure_roots(f: IntPoly, precision: int = DEFAULT_PRECISION) -> RealInterval:
    """``log|a_n| + sum log max(1, |alpha|)`` from certified roots."""
    ctx = make_context(precision)
    lead = ctx.log(abs(f.leading))
    base = RealInterval.around(ctx, lead)
    if f.degree < 1:
        return base
    return base + _outside_sum(f, precision)


def mahler_measure_graeffe(f: IntPoly, precision: int = DEFAULT_PRECISION,
                           tol: float = GRAEFFE_TOL,
                           max_iter: int = GRAEFFE_MAX_ITER) -> RealInterval:
    """Enclosure of ``m(f)`` by Graeffe root squaring.

    After ``k`` squarings the polynomial ``f_k`` has Mahler measure
    ``M(f)^(2^k)`` and ``|c_j| / C(n, j) <= M(f_k) <= ||f_k||_2``.  Coefficients
    are rescaled every step and the scale is tracked in log form.
    """
    ctx = make_context(int(precision) + 64)
    n = f.degree
    if n < 1:
        return RealInterval.around(ctx, ctx.log(abs(f.leading)))
    c = [ctx.mpf(x) for x in f.coeffs]
    log_binom = [ctx.log(comb(n, j)) for j in range(n + 1)]
    log_scale = ctx.zero
    best_lo, best_hi = ctx.ninf, ctx.inf
    for k in range(max_iter + 1):
        mags = [abs(x) for x in c]
        lo = max(ctx.log(m) - log_binom[j] for j, m in enumerate(mags) if m)
        hi = ctx.log(ctx.fsum(m * m for m in mags)) / 2
        slack = (k + 1) * (n + 1) * ctx.ldexp(1, -int(precision)) * (abs(log_scale) + 1)
        weight = ctx.ldexp(1, -k)
        best_lo = max(best_lo, (lo + log_scale - slack) * weight)
        best_hi = min(best_hi, (hi + log_scale + slack) * weight)
        if best_hi - best_lo < tol or k == max_iter:
            break
        even, odd = c[0::2], c[1::2]
        e2 = [ctx.zero] * (n + 1)
        for i, x in enumerate(even):
            for j, y in enumerate(even):
                e2[i + j] += x * y
        for i, x in enumerate(odd):
            for j, y in enumerate(odd):
                e2[i + j + 1] -= x * y
        s = max(abs(x) for x in e2)
        c = [x / s for x in e2]
        log_scale = 2 * log_scale + ctx.log(s)
    out = make_context(precision)
    return RealInterval(out.mpf(best_lo), out.mpf(best_hi))


def mahler_measure(f: IntPoly, precision: int = DEFAULT_PRECISION) -> RealInterval:
    """Logarithmic Mahler measure ``m(f)``, checked by two independent methods.

    >>> float(mahler_measure(IntPoly((2, -3, 2))))  # doctest: +ELLIPSIS
    0.693147180559...
    """
    by_roots = mahler_measure_roots(f, precision)
    by_graeffe = mahler_measure_graeffe(f, precision)
    both = by_roots.intersect(by_graeffe)
    if both is not None:
        # M(f) >= |a_n| >= 1 for integer polynomials
        return RealInterval(max(both.lo, both.lo * 0), max(both.hi, both.hi * 0))
    gap = by_roots.distance(by_graeffe)
    if gap > MAHLER_AGREEMENT:
        raise MahlerMismatch(f"root and Graeffe enclosures of m({f}) are {gap} apart")
    return RealInterval(min(by_roots.hi, by_graeffe.hi), max(by_roots.lo, by_graeffe.lo))


# -- Kronecker ------------------------------------------------------------------------

def all_roots_of_unity(f: IntPoly) -> bool:
    """Exact test that every root of ``f`` is a root of unity."""
    g = squarefree_part(f.coeffs)
    _, rest = cyclotomic_factorization(g)
    return len(rest) <= 1


def cyclotomic_orders(f: IntPoly) -> dict[int, int]:
    """``{d: multiplicity}`` for the cyclotomic factors of ``f``."""
    found, _ = cyclotomic_factorization(f.coeffs)
    return found

"""Exact integer polynomial arithmetic.

Polynomials are stored as tuples of Python integers in ascending degree
order (constant term first).  :class:`IntPoly` is the normal form used for
Alexander polynomials: no power of ``t`` can be factored out and the leading
coefficient is positive, so the ``±t^k`` ambiguity is gone.

The helpers working on bare tuples (``poly_mul``, ``poly_gcd`` ...) accept
any integer coefficient sequence and are used by the other modules for
intermediate results that need not be in normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

Coeffs = tuple[int, ...]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in normal form, ``coeffs[i]`` is the coefficient of ``t**i``."""

    coeffs: Coeffs

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if not c:
            raise ValueError("IntPoly needs at least one coefficient")
        if c[0] == 0 or c[-1] == 0:
            raise ValueError(f"not in normal form (zero end coefficient): {c}")
        if c[-1] < 0:
            raise ValueError(f"not in normal form (negative leading coefficient): {c}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0]

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        return poly_str(self.coeffs)


@dataclass(frozen=True)
class ValidationReport:
    value_at_one: int
    is_knot_like: bool
    is_reciprocal: bool
    content: int
    messages: tuple[str, ...] = field(default_factory=tuple)


# -- bare coefficient tuples --------------------------------------------------

def strip(a: Sequence[int]) -> Coeffs:
    """Drop high-degree zero coefficients (``()`` is the zero polynomial)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Sequence) -> int:
    a = strip(a)
    return len(a) - 1 if a else -1


def poly_eval(a: Sequence, x):
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_str(a: Sequence[int], var: str = "t") -> str:
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    n = max(len(a), len(b))
    return strip(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_sub(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    return poly_add(a, [-c for c in b])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    """Division with remainder over the rationals."""
    a = [Fraction(c) for c in strip(a)]
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lb = Fraction(b[-1])
    if len(a) - 1 < db:
        return (), tuple(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return strip(q), strip(a[:db])


def poly_divexact(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Quotient ``a / b`` in Z[t]; raises if the division is not exact."""
    q, r = poly_divmod(a, b)
    if r or any(c.denominator != 1 for c in q):
        raise ArithmeticError(f"{poly_str(b)} does not divide {poly_str(a)} in Z[t]")
    return tuple(int(c) for c in q)


def content(f) -> int:
    """Gcd of the coefficients (positive); 0 for the zero polynomial."""
    a = f.coeffs if isinstance(f, IntPoly) else f
    return reduce(gcd, a, 0)


def primitive_part(a: Sequence[int]) -> Coeffs:
    """Divide out the content and make the leading coefficient positive."""
    a = strip(a)
    if not a:
        return ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def poly_derivative(a: Sequence[int]) -> Coeffs:
    return strip(i * a[i] for i in range(1, len(a)))


def pseudo_remainder(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """``lc(b)^(deg a - deg b + 1) * a`` reduced modulo ``b``, in Z[t]."""
    a = list(strip(a))
    b = strip(b)
    db = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    if steps <= 0:
        return tuple(a)
    for _ in range(steps):
        if len(a) - 1 < db:
            a = [lb * x for x in a]
            continue
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a = list(strip(a))
    return tuple(a)


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Primitive gcd in Z[t] (positive leading coefficient); ``()`` if both are zero."""
    a, b = primitive_part(a), primitive_part(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive_part(pseudo_remainder(a, b))
    return primitive_part(a)


def reciprocal(a: Sequence[int]) -> Coeffs:
    """``t^deg a * a(1/t)``; roots are inverted."""
    return strip(tuple(reversed(strip(a))))


def squarefree_decomposition(a: Sequence[int]) -> list[tuple[Coeffs, int]]:
    """Yun's algorithm: primitive ``[(s_k, k)]`` with ``a = c * prod s_k^k``, nonconstant ``s_k`` only."""
    a = primitive_part(a)
    if len(a) <= 1:
        return []
    out = []
    da = poly_derivative(a)
    g = poly_gcd(a, da)
    b = poly_divexact(a, g)
    c = poly_divexact(da, g)
    d = poly_sub(c, poly_derivative(b))
    k = 1
    while len(b) > 1:
        s = poly_gcd(b, d)
        b = poly_divexact(b, s)
        c = poly_divexact(d, s)
        d = poly_sub(c, poly_derivative(b))
        if len(s) > 1:
            out.append((primitive_part(s), k))
        k += 1
    return out


def squarefree_part(a: Sequence[int]) -> Coeffs:
    a = primitive_part(a)
    if len(a) <= 1:
        return a
    return primitive_part(poly_divexact(a, poly_gcd(a, poly_derivative(a))))


# -- normal form and validation -----------------------------------------------

def normalize(raw: Sequence[int], shift: int = 0) -> IntPoly:
    """Normal form of the Laurent polynomial ``t^shift * sum raw[i] t^i``.

    The power of ``t`` and the overall sign are units, so both are discarded.

    >>> normalize([0, -2, 3, -2], shift=-1).coeffs
    (2, -3, 2)
    """
    c = [int(x) for x in raw]
    while c and c[-1] == 0:
        c.pop()
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    c = c[k:]
    if not c:
        raise ValueError("zero polynomial has no normal form")
    if c[-1] < 0:
        c = [-x for x in c]
    return IntPoly(tuple(c))


def validate_alexander(f: IntPoly) -> ValidationReport:
    a = f.coeffs
    v1 = sum(a)
    cont = content(a)
    pal = a == a[::-1]
    msgs = []
    knot_like = v1 in (1, -1)
    if not knot_like:
        msgs.append(f"value at t=1 is {v1}, expected +1 or -1")
    if not pal:
        if a == tuple(-x for x in a[::-1]):
            msgs.append("coefficients are anti-palindromic (a_i = -a_(n-i))")
        else:
            msgs.append("coefficients are not palindromic")
    if cont != 1:
        msgs.append(f"content is {cont}")
    return ValidationReport(v1, knot_like, pal, cont, tuple(msgs))


# -- resultants ---------------------------------------------------------------

def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of ``f`` (degree n) and ``g`` (degree m), size n + m."""
    f, g = strip(f), strip(g)
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(m):
        row = [0] * size
        row[i:i + n + 1] = fd
        rows.append(row)
    for i in range(n):
        row = [0] * size
        row[i:i + m + 1] = gd
        rows.append(row)
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination; exact on integers."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """``Res(f, g) = lc(f)^deg g * prod g(alpha)`` over the roots alpha of f."""
    f, g = strip(f), strip(g)
    if not f or not g:
        return 0
    n, m = len(f) - 1, len(g) - 1
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    return bareiss_determinant(sylvester_matrix(f, g))


def _power_of_t_mod(f: Coeffs, r: int) -> tuple[Coeffs, int]:
    """``(R, e)`` with ``lc(f)^e * t^r == R (mod f)`` and ``deg R < deg f``.

    These are exactly the row operations that clear the ``t^r`` row of the
    Sylvester matrix against the band of shifted ``f`` rows.
    """
    n = len(f) - 1
    lead = f[-1]
    rem = [1] + [0] * (n - 1)
    e = 0
    for _ in range(r):
        top = rem[-1]
        shifted = [0] + rem[:-1]
        if top:
            rem = [lead * shifted[i] - top * f[i] for i in range(n)]
            e += 1
        else:
            rem = shifted
    return tuple(rem), e


def resultant_with_cyclotomic_power(f: IntPoly, r: int) -> int:
    """Exact ``Res(f, t^r - 1)``, sign included.

    The ``r`` rows of shifted ``f`` in the Sylvester matrix are used to reduce
    ``t^r - 1`` modulo ``f`` fraction-free; the remaining block of size at most
    ``2 deg f`` is handed to Bareiss elimination.

    >>> resultant_with_cyclotomic_power(IntPoly((1, -1, 1)), 6)
    0
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    a = f.coeffs if isinstance(f, IntPoly) else strip(f)
    n = len(a) - 1
    lead = a[-1]
    if n == 0:
        return lead ** r
    rem, e = _power_of_t_mod(a, r)
    h = list(rem)
    h[0] -= lead ** e
    h = strip(h)
    if not h:
        return 0
    k = len(h) - 1
    num = resultant(a, h) * lead ** r
    den = lead ** (k + e * n)
    q, rest = divmod(num, den)
    if rest:
        raise ArithmeticError("inexact resultant reduction")  # unreachable for integer input
    return q


# -- cyclotomic polynomials ----------------------------------------------------

def _divisors(d: int) -> list[int]:
    small = [i for i in range(1, int(d ** 0.5) + 1) if d % i == 0]
    return sorted(set(small + [d // i for i in small]))


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> Coeffs:
    num = (-1,) + (0,) * (d - 1) + (1,)
    for e in _divisors(d)[:-1]:
        num = poly_divexact(num, _cyclotomic_coeffs(e))
    return num


def cyclotomic(d: int) -> IntPoly:
    """The ``d``-th cyclotomic polynomial by exact division of ``t^d - 1``."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    return IntPoly(_cyclotomic_coeffs(d))


def totient(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_indices_up_to_degree(n: int) -> list[int]:
    """All ``d`` with ``totient(d) <= n``.  ``totient(d) >= sqrt(d / 2)`` bounds the search."""
    return [d for d in range(1, 2 * n * n + 3) if totient(d) <= n]


def cyclotomic_factorization(a: Sequence[int]) -> tuple[dict[int, int], Coeffs]:
    """Split off every cyclotomic factor: ``({d: multiplicity}, cofactor)``."""
    rest = primitive_part(a)
    found: dict[int, int] = {}
    for d in cyclotomic_indices_up_to_degree(max(len(rest) - 1, 0)):
        phi = _cyclotomic_coeffs(d)
        while len(rest) >= len(phi):
            q, r = poly_divmod(rest, phi)
            if r or any(c.denominator != 1 for c in q):
                break
            rest = tuple(int(c) for c in q)
            found[d] = found.get(d, 0) + 1
    return found, rest

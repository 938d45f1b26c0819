from fractions import Fraction

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import res_z

from alexentropy.polycore import (
    IntPoly,
    bareiss_determinant,
    content,
    cyclotomic,
    cyclotomic_factorization,
    normalize,
    poly_divexact,
    poly_gcd,
    poly_mul,
    resultant,
    resultant_with_cyclotomic_power,
    squarefree_decomposition,
    sylvester_matrix,
    validate_alexander,
)

T = sympy.symbols("t")


def to_sympy(coeffs):
    return sum(c * T**i for i, c in enumerate(coeffs))


def t_r_minus_1(r):
    return (-1,) + (0,) * (r - 1) + (1,)


def companion_resultant(coeffs, r):
    """Res(f, t^r - 1) = a_n^r det(C^r - I), with C the companion of f / a_n.

    Works with the integer matrix a_n * C to stay exact.
    """
    n = len(coeffs) - 1
    lead = coeffs[-1]
    if n == 0:
        return lead**r
    a = sympy.zeros(n, n)
    for i in range(1, n):
        a[i, i - 1] = lead
    for i in range(n):
        a[i, n - 1] = -coeffs[i]
    det = (a**r - lead**r * sympy.eye(n)).det(method="bareiss")
    return sympy.Rational(det, lead ** (n * r - r))


@pytest.mark.parametrize(
    "raw, shift, expected",
    [
        ([0, -2, 3, -2], -1, (2, -3, 2)),
        ([1], 5, (1,)),
        ([1, -3, 1], 0, (1, -3, 1)),
        ([0, 0, -1, 1, 0], 3, (-1, 1)),
    ],
)
def test_normalize(raw, shift, expected):
    assert normalize(raw, shift).coeffs == expected


def test_normalize_rejects_zero():
    with pytest.raises(ValueError, match="zero polynomial has no normal form"):
        normalize([0, 0, 0])


def test_intpoly_rejects_non_normal():
    with pytest.raises(ValueError):
        IntPoly((0, 1))
    with pytest.raises(ValueError):
        IntPoly((1, -1))


def test_validate_examples():
    r = validate_alexander(IntPoly((2, -3, 2)))
    assert (r.value_at_one, r.is_knot_like, r.is_reciprocal, r.content) == (1, True, True, 1)
    r = validate_alexander(IntPoly((1, -3, 1)))
    assert (r.value_at_one, r.is_knot_like, r.is_reciprocal) == (-1, True, True)
    r = validate_alexander(IntPoly((-1, 2)))
    assert (r.value_at_one, r.is_knot_like, r.is_reciprocal) == (1, True, False)
    assert r.messages


def test_validate_flags_without_rejecting():
    r = validate_alexander(IntPoly((-1, 0, 1)))
    assert not r.is_knot_like and not r.is_reciprocal
    assert any("anti-palindromic" in m for m in r.messages)
    r = validate_alexander(IntPoly((4, -6, 4)))
    assert r.content == 2 and not r.is_knot_like


@pytest.mark.parametrize("coeffs, expected", [((2, -3, 2), 1), ((4, -6, 4), 2), ((1,), 1)])
def test_content(coeffs, expected):
    assert content(IntPoly(coeffs)) == expected


@pytest.mark.parametrize("d", range(1, 40))
def test_cyclotomic_matches_sympy(d):
    expected = sympy.Poly(sympy.cyclotomic_poly(d, T), T).all_coeffs()[::-1]
    assert cyclotomic(d).coeffs == tuple(int(c) for c in expected)


def test_cyclotomic_examples():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    # division-chain oracle for d = 12
    chain = t_r_minus_1(12)
    for e in (1, 2, 3, 4, 6):
        chain = poly_divexact(chain, cyclotomic(e).coeffs)
    assert chain == (1, 0, -1, 0, 1)


def test_sylvester_layout():
    m = sylvester_matrix((-7, 0, 1), (3, 1))
    assert m == [[1, 0, -7], [1, 3, 0], [0, 1, 3]]


def test_bareiss_against_sympy():
    rows = [[2, -1, 0, 3], [0, 0, 4, 1], [5, 2, -3, 0], [1, 1, 1, 1]]
    assert bareiss_determinant(rows) == sympy.Matrix(rows).det()
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_resultant_examples():
    f = IntPoly((1, -1, 1))
    assert abs(resultant_with_cyclotomic_power(f, 2)) == 3
    assert resultant_with_cyclotomic_power(f, 6) == 0
    assert all(resultant_with_cyclotomic_power(IntPoly((1,)), r) == 1 for r in range(1, 20))


@pytest.mark.parametrize(
    "coeffs",
    [(1, -1, 1), (1, -3, 1), (2, -3, 2), (4, -7, 4), (1, -3, 5, -3, 1), (3, 0, -2, 7), (5,)],
)
@pytest.mark.parametrize("r", [1, 2, 3, 5, 8, 13, 21])
def test_resultant_three_routes(coeffs, r):
    fast = resultant_with_cyclotomic_power(IntPoly(coeffs), r)
    assert fast == resultant(coeffs, t_r_minus_1(r))
    assert fast == companion_resultant(coeffs, r)
    assert fast == res_z(to_sympy(coeffs), T**r - 1, T)
    # sympy.resultant flips the sign for some odd-degree inputs, e.g. 7t^3 - 2t^2 + 3, r = 5
    assert abs(fast) == abs(sympy.resultant(to_sympy(coeffs), T**r - 1, T))


def test_gcd_and_squarefree():
    a = poly_mul((1, -1, 1), (1, -3, 1))
    b = poly_mul((1, -1, 1), (2, -3, 2))
    assert poly_gcd(a, b) == (1, -1, 1)
    sq = poly_mul(poly_mul((1, -1, 1), (1, -1, 1)), (1, -3, 1))
    assert sorted(squarefree_decomposition(sq)) == [((1, -3, 1), 1), ((1, -1, 1), 2)]


def test_cyclotomic_factorization():
    found, rest = cyclotomic_factorization(poly_mul(poly_mul((1, -1, 1), (1, -1, 1)), (2, -3, 2)))
    assert found == {6: 2}
    assert rest == (2, -3, 2)


def test_divexact_rejects_inexact():
    with pytest.raises(ArithmeticError):
        poly_divexact((1, 0, 1), (2, 1))


def test_eval_on_fractions():
    assert IntPoly((2, -3, 2))(Fraction(1, 2)) == 1
    assert IntPoly((2, -3, 2))(Fraction(1, 3)) == Fraction(11, 9)

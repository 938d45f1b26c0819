"""Mahler measure from certified roots and from Graeffe squaring.

The two enclosures are computed independently; their overlap is what
mahler_measure reports.  Lehmer's polynomial is the delicate case, with
eight roots on the unit circle and one real root just outside it.
"""
from alexentropy import IntPoly, mahler_measure
from alexentropy.arch import mahler_measure_graeffe, mahler_measure_roots

cases = {
    "4_1": IntPoly((1, -3, 1)),
    "5_2": IntPoly((2, -3, 2)),
    "6_3": IntPoly((1, -3, 5, -3, 1)),
    "Lehmer": IntPoly((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)),
}

for name, f in cases.items():
    by_roots = mahler_measure_roots(f)
    by_graeffe = mahler_measure_graeffe(f)
    both = mahler_measure(f)
    print(f"{name:7} roots {by_roots!r}")
    print(f"{'':7} graeffe {by_graeffe!r}")
    print(f"{'':7} m(f) ~ {float(both.mid):.15f}  width {float(both.width):.1e}")

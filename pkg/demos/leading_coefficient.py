"""Where the leading coefficient of an Alexander polynomial goes.

For each table knot we split the total entropy into its places and check
that the p-adic exponents add back up to the leading coefficient exactly.
"""
from alexentropy import builtin_table, entropy_spectrum, leading_decomposition
from alexentropy.intervals import INF

for rec in builtin_table():
    f = rec.poly
    spec = entropy_spectrum(f)
    cert = leading_decomposition(f)
    places = ", ".join(f"p={p}: e={e.exponent}" for p, e in sorted(spec.finite.items())) or "none"
    arch = float(spec.entries[INF].value.mid)
    print(f"{rec.name:4} {str(f):28} a_n={f.leading}  finite places [{places}]"
          f"  archimedean {arch:.6f}  identity {'holds' if cert.holds else 'FAILS'}")

"""No single prime carries the growth of |H_1(X_r)|.

For r in [200, 300] the p-part of the order stays tiny next to r, even
though log|H_1|/r stays near the Mahler measure.
"""
import math

from alexentropy import lookup
from alexentropy.branched import homology_sequence, p_part_profile

for name in ("4_1", "5_2"):
    seq = homology_sequence(lookup(name).poly, 300)
    worst_total = min(math.log(seq.order(r)) / r for r in range(200, 301))
    print(f"{name}: min log|H_1|/r on [200,300] = {worst_total:.4f}")
    for p in (2, 3, 5):
        prof = p_part_profile(seq, p, (200, 300))
        print(f"   p={p}: max v_p/r = {prof.diagnostic} = {float(prof.diagnostic):.4f}")

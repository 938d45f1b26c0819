"""Growth of |H_1| of cyclic branched covers.

4_1 converges almost immediately.  5_2 has all its roots on the unit
circle, so log|H_1(X_r)|/r wanders around log 2 and only the median over a
window settles.  3_1 has only roots of unity and the orders are periodic.
"""
import math

from alexentropy import lookup
from alexentropy.branched import growth_estimate, homology_sequence, periodicity_check

fig8 = homology_sequence(lookup("4_1").poly, 100)
print("4_1 first orders:", fig8.orders[:8])
print("4_1 median over [50,100]:", growth_estimate(fig8, (50, 100)).window_median)

seq = homology_sequence(lookup("5_2").poly, 400)
for r in (50, 100, 200, 300, 400):
    print(f"5_2 r={r:3}  log|H_1|/r = {math.log(seq.order(r)) / r:.5f}")
rep = growth_estimate(seq, (200, 400))
print(f"5_2 median over [200,400]: {rep.window_median:.5f}  (log 2 = {math.log(2):.5f})")

trefoil = periodicity_check(lookup("3_1").poly, 60)
print("3_1 periodic:", trefoil.periodic, "period", trefoil.period)

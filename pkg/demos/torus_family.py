"""Torus knots sit exactly on c = 2g + b + |K| - 2.

Closed forms for T(p, q) are checked against the closure of the standard
braid, and the HOMFLY lower bound M + (E - e)/2 is shown to hit pq - p.
"""

from math import gcd

from knotbounds import bounds as B
from knotbounds import closure, degrees, homfly, seifert_circles, torus_braid

print(f"{'T(p,q)':8} {'c':>3} {'c(D)':>5} {'s(D)':>5} {'2g':>3} {'|K|':>4}  F?      HOMFLY bound")
for p in range(2, 9):
    for q in range(2, p + 1):
        ti = B.torus_invariants(p, q)
        D = closure(torus_braid(p, q))
        verdict = B.f_check(ti.c, ti.g2, ti.b, ti.components)
        hb = "-"
        if gcd(p, q) == 1 and ti.c <= 16:
            hb = B.homfly_crossing_bound(degrees(homfly(D)))
        print(f"T({p},{q})".ljust(8), f"{ti.c:>3} {D.c:>5} {seifert_circles(D).s:>5} {ti.g2:>3} {ti.components:>4}  {str(verdict):7} {hb}")

# the other closed form for 2g drifts away whenever |K| != 2
odd = [(p, q) for p in range(2, 9) for q in range(2, p + 1)
       if B.torus_display_genus_twice(p, q) != B.torus_invariants(p, q).g2]
print(f"\npq-p-q+|K|-2 disagrees with c-q-|K|+2 on {len(odd)} of 28 pairs")

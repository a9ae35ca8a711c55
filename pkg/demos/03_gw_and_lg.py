"""
Gromov-Witten invariants of OG and LG
=====================================

"""

from ogqh import LGQuery, gw, lg_gw, lg_gw_odd
from ogqh.ogring import admissible_degree
from ogqh.partitions import strict_partitions

n = 3
parts = strict_partitions(n)

# every nonzero three-point invariant with a <= b <= c
for i, a in enumerate(parts):
    for j in range(i, len(parts)):
        for c in parts[j:]:
            b = parts[j]
            d = admissible_degree(a, b, c, n)
            if d is not None:
                value = gw(a, b, c, d, n)
                if value:
                    print(f"<{a}, {b}, {c}>_{d} = {value}")

# an odd degree LG invariant by both routes
q = LGQuery(4, (3, 1), (2, 1), (2, 1), 1)
print("LG(3,6):", lg_gw(q), lg_gw_odd(q.a, q.b, q.c, q.e, q.n))

"""
Checking the polynomial identities
==================================

"""

from collections import Counter

from ogqh.identities import check_appendix, check_boxprop, identity_suite, run_jobs

# a single check returns its exact residual
rep = check_boxprop((4, 3, 1), 6)
print(rep, "residual:", rep.residual)

rep = check_appendix((2, 2), 3)
print(rep)

# the full sweep, tallied by identity
reports = run_jobs(identity_suite(5))
print(Counter((r.identity, r.passed) for r in reports))

"""Sweep the corrected fiber formula against brute-force enumeration.

Also shows where the old count gcd(a_i, q-1) breaks, and that it never does
under gcd(a_i, a_j, q-1) = 1.
"""
from collections import Counter

from wpsfq.verify import SweepConfig, check_valuation_identity, run_sweep, valuation_identity_sweep

report = run_sweep(SweepConfig(q_list=(2, 3, 4, 5, 7, 8, 9), n_range=(1, 2), weight_max=6, jobs=4))
print(report.summary())

wrong_old = [c for c in report.cases if not c.old_match]
print("old formula wrong in", len(wrong_old), "cases; hypothesis held in",
      sum(c.hypothesis for c in wrong_old), "of them")
print("first few:")
for c in wrong_old[:5]:
    print("  ", c.summary())

print("by q:", dict(Counter(c.q for c in wrong_old)))

# the arithmetic behind it: gcd(a, m*d)/gcd(a, d) vs gcd(a, m)
holds, witnesses = check_valuation_identity(2, 4, 4)
print("a=2 d=4 m=4 identity holds:", holds, witnesses)
print(valuation_identity_sweep(200))

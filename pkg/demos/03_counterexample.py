"""The fiber of pi_2 : P(1,1,1,4) -> P(1,1,2,4) over [0:0:1:2] in F_5.

The superseded count gcd(a_i, q-1) predicts 2 preimages; there is one.
"""
from wpsfq.ff import make_field
from wpsfq.fiber import fiber_bruteforce, fiber_formula, fiber_formula_old, pi_map
from wpsfq.verify import reproduce_counterexample
from wpsfq.wps import normalize

F5 = make_field(5)
target = (1, 1, 2, 4)
P = normalize(F5, target, (0, 0, 1, 2))

fiber = fiber_bruteforce(target, 2, P)
print("preimages:", [str(Q) for Q in fiber])
print("corrected formula:", fiber_formula(P, 2))
print("old formula:", fiber_formula_old(2, 5))

# [0:0:1:2] and [0:0:-1:2] are the same source point
src = (1, 1, 1, 4)
print("[0:0:4:2] normalizes to", normalize(F5, src, (0, 0, 4, 2)))
print("its image:", pi_map(target, 2, normalize(F5, src, (0, 0, 4, 2))))

print(reproduce_counterexample().summary())
for a0, a1 in [(2, 2), (3, 5)]:
    print(reproduce_counterexample(a0, a1).summary())

"""Small finite fields: encodings, generators, roots of unity, Frobenius.

Run with ``python demos/01_field_arithmetic.py``.
"""
from math import gcd

from wpsfq.ff import make_field

# F_9 = F_3[alpha]/(alpha^2 + 1); the element c0 + c1*alpha is encoded as c0 + 3*c1
F9 = make_field(3, 2)
print("F_9 modulus coefficients (c0, c1):", F9.modulus)
print("generator:", F9.generator, "digits:", F9.digits(F9.generator))

alpha = 3
print("alpha^2 =", F9.mul(alpha, alpha), "(that is -1 = 2)")
print("1/(1+alpha) =", F9.inv(4))

# mu_r(F_q) has gcd(r, q-1) elements
for r in (2, 3, 4, 8):
    mu = sorted(F9.roots_of_unity(r))
    print(f"mu_{r}(F_9) = {mu}  size {len(mu)} = gcd({r}, 8) = {gcd(r, 8)}")

# the 3-power Frobenius fixes exactly the prime subfield
print("fixed by x -> x^3:", [x for x in F9.elements() if F9.frobenius(x, 3) == x])

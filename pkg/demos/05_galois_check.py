"""F_q-points as Frobenius-fixed points over F_{q^2}.

Counting points fixed by x -> x^q among P(w)(F_{q^2}) recovers the F_q count,
which supports working with F_q-representatives only.
"""
from wpsfq.census import count_points
from wpsfq.ff import make_field
from wpsfq.verify import frobenius_fixed_count

for weights, p, k in [((1, 1), 5, 1), ((2, 3), 7, 1), ((1, 1, 2, 4), 5, 1), ((2, 2), 3, 1), ((3, 6, 2), 2, 2)]:
    q = p**k
    fixed = frobenius_fixed_count(weights, p, k)
    count = count_points(make_field(p, k), weights)
    print(f"P{weights}: fixed in F_{q * q} = {fixed}, count over F_{q} = {count}")

"""Points of a weighted projective space over F_q.

Equality is taken over the algebraic closure, so P(2, 3)(F_7) has 7 + 1
points even though F_7^* alone splits some of them further.
"""
from wpsfq.census import count_points, enumerate_space, t_set
from wpsfq.ff import make_field
from wpsfq.wps import in_T_i, normalize, representatives, scale

F7 = make_field(7)
w = (2, 3)

census = enumerate_space(F7, w)
print(f"P{w}(F_7) has {census.count} points:")
print("  ", " ".join(str(pt) for pt in census.points))

# (1, 0) and (3, 0) are related by lam = sqrt(3), which lies outside F_7
print("[1:0] == [3:0]:", normalize(F7, w, (1, 0)) == normalize(F7, w, (3, 0)))
print("F_7-representatives of [1:0]:", sorted(representatives(F7, w, (1, 0))))

# the F_7^* action on tuples, for comparison
print("F_7^* orbit of (1, 0):", sorted({scale(F7, w, (1, 0), lam) for lam in F7.units()}))

for i in range(2):
    print(f"T_{i}:", " ".join(str(pt) for pt in t_set(census, i)))

x = normalize(F7, (2, 1), (3, 1))
print(f"{x} in T_0 of P(2,1): {in_T_i(x, 0)}  (3 is not a square mod 7)")

print("count of P(1,1,2,4)(F_5):", count_points(make_field(5), (1, 1, 2, 4)))

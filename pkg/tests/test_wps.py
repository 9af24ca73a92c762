from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpsfq.ff import make_field
from wpsfq.wps import (
    SpaceError,
    coordinate_point,
    in_T_i,
    normalize,
    parse_coords,
    parse_weights,
    points_equal,
    representatives,
    scale,
    support,
)

F625 = make_field(5, 4)


def closure_class(weights, raw):
    """F_5-tuples reachable from ``raw`` by any lam in F_625^*.

    F_625^* contains mu_{4d} for d <= 4, which is every scalar that can keep
    an F_5-tuple rational when the weights are at most 4.
    """
    out = set()
    for lam in F625.units():
        y = tuple(F625.mul(F625.pow(lam, a), x) for a, x in zip(weights, raw))
        if all(c < 5 for c in y):
            out.add(y)
    return out


@pytest.mark.parametrize("weights", [w for w in product(range(1, 5), repeat=2)] + [(2, 4, 2), (1, 2, 4), (3, 3, 2)])
def test_representatives_match_closure_oracle(F5, weights):
    for raw in product(range(5), repeat=len(weights)):
        if any(raw):
            assert representatives(F5, weights, raw) == closure_class(weights, raw)


def test_counterexample_representatives(F5):
    a = normalize(F5, (1, 1, 1, 4), (0, 0, 4, 2))
    b = normalize(F5, (1, 1, 1, 4), (0, 0, 1, 2))
    assert a == b and a.coords == (0, 0, 1, 2)
    assert points_equal(a, b)
    assert scale(F5, (1, 1, 1, 4), (0, 0, 1, 2), 4) == (0, 0, 4, 2)


def test_orbit_minimum_p23(F7):
    orbit = {(pow(l, 2, 7), pow(l, 3, 7)) for l in range(1, 7)}
    assert len(orbit) == 6
    assert normalize(F7, (2, 3), (1, 1)).coords == min(orbit) == (1, 1)
    for x in orbit:
        assert normalize(F7, (2, 3), x).coords == (1, 1)


def test_points_equal_examples(F5):
    x = normalize(F5, (1, 1), (1, 2))
    assert points_equal(x, x)
    assert not points_equal(x, normalize(F5, (1, 1), (1, 3)))
    assert all(scale(F5, (1, 1), (1, 2), l) != (1, 3) for l in range(1, 5))
    with pytest.raises(SpaceError):
        points_equal(x, normalize(F5, (1, 2), (1, 2)))


def test_non_well_formed_classes_merge_over_closure(F7):
    # lam = sqrt(3) lies outside F_7, yet carries (1, 0) to (3, 0) in P(2, 3)
    assert all(pow(l, 2, 7) != 3 for l in range(1, 7))
    assert normalize(F7, (2, 3), (1, 0)) == normalize(F7, (2, 3), (3, 0))


def test_support_examples(F5):
    assert support(normalize(F5, (1, 1, 2, 4), (0, 0, 1, 2))) == (2, 3)
    assert support(normalize(F5, (1, 2, 3), (1, 0, 0))) == (0,)
    assert support(normalize(F5, (1, 2, 3, 1), (1, 3, 4, 0))) == (0, 1, 2)


def test_in_T_i_examples(F5, F7):
    P = normalize(F5, (1, 1, 2, 4), (0, 0, 1, 2))
    assert in_T_i(P, 2)
    assert not in_T_i(P, 0)
    for i in range(3):
        assert not in_T_i(coordinate_point(F5, (2, 3, 4), i), i)
    Q = normalize(F7, (2, 3), (1, 1))
    brute = {i: any(pow(l, (2, 3)[i], 7) * 1 % 7 == 1 for l in range(1, 7)) for i in (0, 1)}
    assert in_T_i(Q, 0) == brute[0] is True
    assert in_T_i(Q, 1) == brute[1] is True
    with pytest.raises(SpaceError):
        in_T_i(Q, 2)


def test_T_i_needs_rational_one(F7):
    # support {0, 1} of P(2, 1): the class of (3, 1) is {(3 nu^2, nu)}; 3 is not a square mod 7
    x = normalize(F7, (2, 1), (3, 1))
    assert not in_T_i(x, 0)
    assert in_T_i(x, 1)


def test_scale_action(F5):
    w, raw = (1, 2, 3), (1, 4, 2)
    assert scale(F5, w, raw, 1) == raw
    for l in range(1, 5):
        assert scale(F5, w, scale(F5, w, raw, l), F5.inv(l)) == raw
    with pytest.raises(SpaceError):
        scale(F5, w, raw, 0)


def test_errors(F5):
    with pytest.raises(SpaceError):
        normalize(F5, (1, 1), (0, 0))
    with pytest.raises(SpaceError):
        normalize(F5, (1, 1), (1, 0, 0))
    with pytest.raises(SpaceError):
        normalize(F5, (1,), (1,))
    with pytest.raises(SpaceError):
        normalize(F5, (0, 1), (1, 1))
    with pytest.raises(SpaceError):
        parse_weights("1,x")
    with pytest.raises(SpaceError):
        parse_coords("1;2")
    assert parse_weights("1,1,2,4") == (1, 1, 2, 4)


SPACES = [(q, w) for q in (2, 3, 4, 5, 7) for n in (1, 2) for w in product(range(1, 5), repeat=n + 1)]


@pytest.mark.parametrize("q,weights", SPACES)
def test_action_properties_exhaustive(q, weights):
    from wpsfq.ff import field_of_order

    F = field_of_order(q)
    for raw in product(range(q), repeat=len(weights)):
        if not any(raw):
            continue
        x = normalize(F, weights, raw)
        assert normalize(F, weights, x.coords) == x
        supp = tuple(j for j, c in enumerate(raw) if c)
        assert support(x) == supp
        orbit = {scale(F, weights, raw, l) for l in F.units()}
        stab = [l for l in F.units() if scale(F, weights, raw, l) == raw]
        assert (q - 1) % len(orbit) == 0
        assert len(orbit) * len(stab) == q - 1
        d = 0
        for j in supp:
            d = gcd(d, weights[j])
        assert len(stab) == gcd(q - 1, d)
        for l in F.units():
            y = scale(F, weights, raw, l)
            assert tuple(j for j, c in enumerate(y) if c) == supp
            assert normalize(F, weights, y) == x


@settings(max_examples=200, deadline=None)
@given(
    q=st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16]),
    weights=st.lists(st.integers(1, 8), min_size=2, max_size=4),
    data=st.data(),
)
def test_normalize_picks_minimum_of_class(q, weights, data):
    from wpsfq.ff import field_of_order

    F = field_of_order(q)
    raw = data.draw(st.lists(st.integers(0, q - 1), min_size=len(weights), max_size=len(weights)).filter(any))
    x = normalize(F, weights, raw)
    reps = representatives(F, weights, raw)
    assert x.coords == min(reps)
    assert tuple(raw) in reps
    assert len(reps) == q - 1  # reduced weights act freely
    for r in reps:
        assert normalize(F, weights, r) == x


def test_equality_is_equivalence_relation(F5):
    w = (2, 4, 2)
    pts = {raw: normalize(F5, w, raw) for raw in product(range(5), repeat=3) if any(raw)}
    cls = {raw: closure_class(w, raw) for raw in pts}
    for a, pa in pts.items():
        assert points_equal(pa, pa)
        for b, pb in pts.items():
            assert points_equal(pa, pb) == (b in cls[a]) == (a in cls[b])

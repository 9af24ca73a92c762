from itertools import product
from math import gcd

import pytest

from wpsfq.ff import FieldError, field_of_order, is_prime, make_field, prime_power

SMALL_Q = [q for q in range(2, 26) if len({p for p in range(2, q + 1) if q % p == 0 and is_prime(p)}) == 1]
BUILDABLE_64 = [q for q in range(2, 65) if len({p for p in range(2, q + 1) if q % p == 0 and is_prime(p)}) == 1]


def naive_mul(a, b, F):
    """Schoolbook product of the encoded polynomials, reduced by long division."""
    p, k = F.p, F.k
    da = [(a // p**j) % p for j in range(k)]
    db = [(b // p**j) % p for j in range(k)]
    prod = [0] * (2 * k)
    for i in range(k):
        for j in range(k):
            prod[i + j] += da[i] * db[j]
    full = list(F.modulus) + [1]
    for top in range(2 * k - 1, k - 1, -1):
        c = prod[top] % p
        for j in range(k + 1):
            prod[top - k + j] -= c * full[j]
    return sum((prod[j] % p) * p**j for j in range(k))


def test_prime_fields():
    F = make_field(5)
    assert (F.q, F.modulus, F.generator) == (5, (), 2)
    assert [pow(2, e, 5) for e in range(1, 5)] == [2, 4, 3, 1]
    assert make_field(2).generator == 1
    assert make_field(7).generator == 3


def test_f9_modulus_is_smallest_rootless_quadratic():
    expected = next(
        (c0, c1) for c0, c1 in product(range(3), repeat=2)
        if all((x * x + c1 * x + c0) % 3 for x in range(3))
    )
    assert expected == (1, 0)
    assert make_field(3, 2).modulus == expected


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 3), (2, 6), (5, 2)])
def test_modulus_has_no_factorization(p, k):
    F = make_field(p, k)
    target = list(F.modulus) + [1]
    for d in range(1, k // 2 + 1):
        for low1 in product(range(p), repeat=d):
            for low2 in product(range(p), repeat=k - d):
                f, g = list(low1) + [1], list(low2) + [1]
                prod = [0] * (k + 1)
                for i, a in enumerate(f):
                    for j, b in enumerate(g):
                        prod[i + j] = (prod[i + j] + a * b) % p
                assert prod != target


def test_errors():
    with pytest.raises(FieldError):
        make_field(4)
    with pytest.raises(FieldError):
        make_field(2, 17)
    with pytest.raises(FieldError):
        prime_power(12)
    with pytest.raises(ZeroDivisionError):
        make_field(5).inv(0)
    with pytest.raises(FieldError):
        make_field(5).roots_of_unity(0)


def test_small_examples(F5, F9):
    assert F5.mul(2, 3) == 1
    assert F5.pow(2, 4) == 1
    for x in F9.units():
        assert F9.mul(F9.inv(x), x) == 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements())
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(a, a) == 0
        assert F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.mul(a, b) == (naive_mul(a, b, F) if F.k > 1 else a * b % q)
            assert F.add(a, b) == F.add(b, a)
            for c in els if q <= 9 else (1, q - 1):
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_large_field_without_tables():
    F = make_field(2, 9)
    assert F.mul_table is None
    for a, b in [(3, 500), (511, 511), (17, 0), (256, 2)]:
        assert F.mul(a, b) == naive_mul(a, b, F)
        assert F.add(a, b) == a ^ b


@pytest.mark.parametrize("q", BUILDABLE_64)
def test_generator_order(q):
    F = field_of_order(q)
    g = F.generator
    assert F.pow(g, q - 1) == 1
    for d in range(1, q - 1):
        if (q - 1) % d == 0:
            assert F.pow(g, d) != 1
    assert all(F.generator <= x or F.order(x) < q - 1 for x in F.units())


@pytest.mark.parametrize("q", BUILDABLE_64)
def test_roots_of_unity_count(q):
    F = field_of_order(q)
    for r in range(1, 21):
        brute = {x for x in range(1, q) if F.pow(x, r) == 1}
        assert F.roots_of_unity(r) == brute
        assert len(brute) == gcd(r, q - 1)


def test_roots_of_unity_examples(F5):
    assert F5.roots_of_unity(4) == {1, 2, 3, 4}
    assert F5.roots_of_unity(2) == {1, 4}
    assert make_field(3, 2).roots_of_unity(1) == {1}


def test_encoding_round_trip(F9):
    for q in (8, 9, 25, 27):
        F = field_of_order(q)
        for x in F.elements():
            assert F.from_digits(F.digits(x)) == x


def test_frobenius(F5, F9):
    assert F5.frobenius(3, 5) == 3
    fixed = [x for x in F9.elements() if F9.frobenius(x, 3) == x]
    assert len(fixed) == 3
    assert fixed == [0, 1, 2]  # the prime subfield keeps its encoding
    for x in F9.elements():
        assert F9.frobenius(F9.frobenius(x, 3), 3) == x
    with pytest.raises(FieldError):
        F9.frobenius(1, 5)
    with pytest.raises(FieldError):
        make_field(2, 3).frobenius(1, 4)


def test_pickles_by_parameters():
    import pickle

    F = make_field(2, 3)
    G = pickle.loads(pickle.dumps(F))
    assert G == F and G.generator == F.generator

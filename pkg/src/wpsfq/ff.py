"""Exact arithmetic in small finite fields F_q, q = p^k.

Elements are plain integers in ``[0, q)``.  The element
``c_0 + c_1*alpha + ... + c_{k-1}*alpha^{k-1}`` is encoded as
``c_0 + c_1*p + ... + c_{k-1}*p^{k-1}``; in a prime field the encoding is the
residue itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np

DEFAULT_FIELD_BOUND = 2**16
TABLE_BOUND = 256


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n >= 1``, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``(p, k)`` with ``q == p**k``; raise if not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p, k = ps[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# -- polynomials over F_p as digit lists (constant term first) ---------------

def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + c
    return x


def _polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # x^k = -(c_0 + ... + c_{k-1} x^{k-1})
    for top in range(2 * k - 2, k - 1, -1):
        c = prod[top]
        if c:
            prod[top] = 0
            for j, mj in enumerate(modulus):
                prod[top - k + j] = (prod[top - k + j] - c * mj) % p
    return prod[:k]


def _polymod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of ``num`` by the monic polynomial ``den`` (both full coefficient lists)."""
    num = list(num)
    dd = len(den) - 1
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        if c:
            for j in range(dd + 1):
                num[top - dd + j] = (num[top - dd + j] - c * den[j]) % p
    return num[:dd]


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division of ``x^k + sum c_j x^j`` by every monic polynomial of degree 1..k//2."""
    k = len(modulus)
    full = list(modulus) + [1]
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if not any(_polymod(full, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # product() over range(p) yields tuples in left-to-right lexicographic order
    for coeffs in product(range(p), repeat=k):
        if coeffs[0] == 0:
            continue  # divisible by x
        if is_irreducible(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with a fixed modulus and generator.

    Two specs compare equal iff they have the same ``(p, k)``; the lookup
    tables are derived data and excluded from comparison.
    """

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    generator: int
    exp: np.ndarray = field(repr=False, compare=False)
    log: np.ndarray = field(repr=False, compare=False)
    mul_table: np.ndarray | None = field(default=None, repr=False, compare=False)
    add_table: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __hash__(self):
        return hash((self.p, self.k))

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # -- element checks --------------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element of F_{self.q}")
        return x

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def digits(self, x: int) -> list[int]:
        return _digits(x, self.p, self.k)

    def from_digits(self, ds) -> int:
        return _undigits([c % self.p for c in ds], self.p)

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return _undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return _undigits([-x % self.p for x in self.digits(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return int(self.exp[-int(self.log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise FieldError("negative exponent")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[int(self.log[a]) * e % (self.q - 1)])

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.q - 1) // gcd(int(self.log[a]), self.q - 1)

    def roots_of_unity(self, r: int) -> set[int]:
        """mu_r(F_q) = {x in F_q^* : x^r = 1}."""
        if r < 1:
            raise FieldError("roots of unity need r >= 1")
        return {x for x in self.units() if self.pow(x, r) == 1}

    def frobenius(self, x: int, base_q: int) -> int:
        """x -> x^base_q where base_q is the order of a subfield."""
        try:
            bp, bk = prime_power(base_q)
        except FieldError:
            raise FieldError(f"{base_q} is not a subfield order of F_{self.q}") from None
        if bp != self.p or self.k % bk:
            raise FieldError(f"{base_q} is not a subfield order of F_{self.q}")
        return self.pow(x, base_q)


def _slow_mul(a: int, b: int, p: int, k: int, modulus: tuple[int, ...]) -> int:
    if k == 1:
        return a * b % p
    return _undigits(_polymulmod(_digits(a, p, k), _digits(b, p, k), modulus, p), p)


def _slow_pow(a: int, e: int, p: int, k: int, modulus) -> int:
    acc = 1
    while e:
        if e & 1:
            acc = _slow_mul(acc, a, p, k, modulus)
        a = _slow_mul(a, a, p, k, modulus)
        e >>= 1
    return acc


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1, bound: int = DEFAULT_FIELD_BOUND) -> FieldSpec:
    """Build F_{p^k}.

    The modulus is the lexicographically smallest monic irreducible of
    degree ``k`` (coefficients ``c_0, ..., c_{k-1}`` compared left to right),
    and the generator is the smallest encoding of order ``q - 1``.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if k < 1:
        raise FieldError(f"k={k} must be >= 1")
    q = p**k
    if q > bound:
        raise FieldError(f"q={q} exceeds the field bound {bound}")
    modulus = smallest_irreducible(p, k) if k > 1 else ()

    cofactors = [(q - 1) // ell for ell in prime_factors(q - 1)] if q > 2 else []
    generator = next(
        g for g in range(1, q)
        if all(_slow_pow(g, c, p, k, modulus) != 1 for c in cofactors)
    )

    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for t in range(q - 1):
        exp[t] = x
        log[x] = t
        x = _slow_mul(x, generator, p, k, modulus)

    mul_table = add_table = None
    if k > 1 and q <= TABLE_BOUND:
        lg = log[1:]
        mul_table = np.zeros((q, q), dtype=np.int64)
        mul_table[1:, 1:] = exp[(lg[:, None] + lg[None, :]) % (q - 1)]
        dig = np.array([_digits(v, p, k) for v in range(q)], dtype=np.int64)
        place = p ** np.arange(k, dtype=np.int64)
        add_table = ((dig[:, None, :] + dig[None, :, :]) % p) @ place

    return FieldSpec(p, k, q, modulus, generator, exp, log, mul_table, add_table)


def field_of_order(q: int, bound: int = DEFAULT_FIELD_BOUND) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k, bound)

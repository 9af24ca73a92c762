"""Points of weighted projective spaces P(a_0, ..., a_n) over F_q.

Two F_q-tuples ``x`` and ``y`` give the same point when some
``lam`` in the algebraic closure satisfies ``y_j = lam^{a_j} x_j`` for all
``j``.  For tuples with support ``S`` and ``d = gcd(a_j : j in S)`` the
scalars that keep every coordinate in F_q are exactly those with
``lam^d in F_q^*``, so the F_q-representatives of a point form one orbit of
F_q^* acting with the reduced weights ``a_j / d``.  Everything here works
with that finite orbit; the closure is never built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .ff import FieldSpec

Weights = tuple[int, ...]


class SpaceError(ValueError):
    pass


def check_weights(weights: Sequence[int]) -> Weights:
    w = tuple(int(a) for a in weights)
    if len(w) < 2:
        raise SpaceError(f"need at least two weights, got {w}")
    if any(a < 1 for a in w):
        raise SpaceError(f"weights must be positive, got {w}")
    return w


def parse_weights(text: str) -> Weights:
    try:
        return check_weights(int(t) for t in text.split(","))
    except ValueError as exc:
        raise SpaceError(f"malformed weights {text!r}: {exc}") from None


def parse_coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise SpaceError(f"malformed point {text!r}") from None


def format_coords(coords: Sequence[int]) -> str:
    return ",".join(str(c) for c in coords)


def gcd_over(weights: Sequence[int], indices) -> int:
    """gcd of ``weights[j]`` for ``j`` in ``indices``; the empty gcd is refused."""
    vals = [weights[j] for j in indices]
    if not vals:
        raise SpaceError("gcd over an empty index set")
    return reduce(gcd, vals)


def _check_raw(field: FieldSpec, weights: Weights, raw: Sequence[int]) -> tuple[int, ...]:
    raw = tuple(int(c) for c in raw)
    if len(raw) != len(weights):
        raise SpaceError(f"point {raw} has {len(raw)} coordinates, space needs {len(weights)}")
    for c in raw:
        field.check(c)
    if not any(raw):
        raise SpaceError("the zero tuple is not a point")
    return raw


@dataclass(frozen=True, order=True)
class WpsPoint:
    """A point stored as its canonical (lexicographically minimal) representative."""

    coords: tuple[int, ...]
    weights: Weights
    field: FieldSpec

    def __str__(self):
        return "[" + ":".join(map(str, self.coords)) + "]"

    @property
    def support(self) -> tuple[int, ...]:
        return support(self)


def scale(field: FieldSpec, weights: Weights, raw: Sequence[int], lam: int) -> tuple[int, ...]:
    """The weighted action ``x_j -> lam^{a_j} x_j`` of ``lam`` in F_q^*."""
    if lam == 0:
        raise SpaceError("scaling by zero")
    return tuple(field.mul(field.pow(lam, a), x) for a, x in zip(weights, raw))


def reduced_weights(weights: Weights, raw: Sequence[int]) -> Weights:
    """Weights divided by their gcd over the support of ``raw`` (zero coordinates keep theirs)."""
    d = gcd_over(weights, [j for j, x in enumerate(raw) if x])
    return tuple(a // d if a % d == 0 else a for a in weights)


def representatives(field: FieldSpec, weights: Weights, raw: Sequence[int]) -> set[tuple[int, ...]]:
    """All F_q-rational coordinate tuples of the point through ``raw``."""
    raw = _check_raw(field, check_weights(weights), raw)
    b = reduced_weights(weights, raw)
    return {scale(field, b, raw, nu) for nu in field.units()}


def normalize(field: FieldSpec, weights: Sequence[int], raw: Sequence[int]) -> WpsPoint:
    weights = check_weights(weights)
    return WpsPoint(min(representatives(field, weights, raw)), weights, field)


def _same_space(x: WpsPoint, y: WpsPoint):
    if x.weights != y.weights or x.field != y.field:
        raise SpaceError(f"points live in different spaces: {x.weights}/F_{x.field.q} vs {y.weights}/F_{y.field.q}")


def points_equal(x: WpsPoint, y: WpsPoint) -> bool:
    _same_space(x, y)
    return x.coords == y.coords


def support(x: WpsPoint) -> tuple[int, ...]:
    return tuple(j for j, c in enumerate(x.coords) if c)


def coordinate_point(field: FieldSpec, weights: Sequence[int], i: int) -> WpsPoint:
    weights = check_weights(weights)
    raw = [0] * len(weights)
    raw[i] = 1
    return normalize(field, weights, raw)


def in_T_i(x: WpsPoint, i: int) -> bool:
    """Whether ``x`` has an F_q-representative with coordinate ``i`` equal to 1
    and is not the ``i``-th coordinate point."""
    if not 0 <= i < len(x.weights):
        raise SpaceError(f"index {i} out of range for {len(x.weights)} coordinates")
    if x.coords[i] == 0 or len(support(x)) < 2:
        return False
    return any(r[i] == 1 for r in representatives(x.field, x.weights, x.coords))

"""The power maps pi_i and the F_q-point count of their fibers.

``pi_i : P(a_0, ..., 1, ..., a_n) -> P(a_0, ..., a_i, ..., a_n)`` raises
coordinate ``i`` to the power ``a_i``; the source space has weight 1 in
position ``i``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .census import canonical_indices, canonical_table, decode, encode
from .ff import FieldSpec
from .wps import (
    SpaceError,
    Weights,
    WpsPoint,
    check_weights,
    format_coords,
    gcd_over,
    in_T_i,
    normalize,
    support,
)


def _check_index(weights: Weights, i: int):
    if not 0 <= i < len(weights):
        raise SpaceError(f"index {i} out of range for {len(weights)} coordinates")


def source_weights(target_weights: Sequence[int], i: int) -> Weights:
    w = check_weights(target_weights)
    _check_index(w, i)
    return w[:i] + (1,) + w[i + 1:]


def pi_map(target_weights: Sequence[int], i: int, source_point: WpsPoint) -> WpsPoint:
    target = check_weights(target_weights)
    if source_point.weights != source_weights(target, i):
        raise SpaceError(
            f"{source_point} lives in P{source_point.weights}, pi_{i} starts from P{source_weights(target, i)}"
        )
    field = source_point.field
    raw = list(source_point.coords)
    raw[i] = field.pow(raw[i], target[i])
    return normalize(field, target, raw)


def fiber_bruteforce(target_weights: Sequence[int], i: int, P: WpsPoint, budget: int | None = None) -> list[WpsPoint]:
    """Every F_q-point of the source space whose image is ``P``, by full enumeration."""
    target = check_weights(target_weights)
    if P.weights != target:
        raise SpaceError(f"{P} is not a point of P{target}")
    src = source_weights(target, i)
    out = []
    for idx in canonical_indices(P.field, src, budget):
        coords = decode(np.array([idx]), P.field.q, len(src))[0]
        Q = WpsPoint(tuple(int(c) for c in coords), src, P.field)
        if pi_map(target, i, Q).coords == P.coords:
            out.append(Q)
    return out


def fiber_sizes(field: FieldSpec, target_weights: Sequence[int], i: int, budget: int | None = None) -> dict[int, int]:
    """Map target canonical index -> number of source points over it (all fibers at once)."""
    target = check_weights(target_weights)
    src = source_weights(target, i)
    q = field.q
    coords = decode(canonical_indices(field, src, budget), q, len(src))
    xi = coords[:, i]
    coords[:, i] = np.where(xi != 0, field.exp[(field.log[xi] * target[i]) % (q - 1)], 0)
    images = canonical_table(field, target, budget)[encode(coords, q)]
    keys, counts = np.unique(images, return_counts=True)
    return dict(zip(keys.tolist(), counts.tolist()))


def deltas(weights: Weights, supp: Sequence[int], i: int) -> tuple[int, int]:
    """(delta_P, delta_{i,P}): weight gcds over the support, and over the support minus i."""
    rest = [j for j in supp if j != i]
    if i not in supp or not rest:
        raise SpaceError(f"support {tuple(supp)} must contain {i} and another index")
    delta_P = gcd_over(weights, supp)
    delta_iP = gcd_over(weights, rest)
    if delta_P != gcd(weights[i], delta_iP):
        raise ArithmeticError(f"delta_P={delta_P} disagrees with gcd(a_i, delta_iP)={gcd(weights[i], delta_iP)}")
    return delta_P, delta_iP


def corrected_count(weights: Weights, supp: Sequence[int], i: int, q: int) -> int:
    """gcd(a_i, (q-1) * delta_{i,P}) / delta_P."""
    delta_P, delta_iP = deltas(weights, supp, i)
    num = gcd(weights[i], (q - 1) * delta_iP)
    if num % delta_P:
        raise ArithmeticError(f"delta_P={delta_P} does not divide {num}")
    return num // delta_P


def fiber_formula(P: WpsPoint, i: int) -> int:
    if not in_T_i(P, i):
        raise SpaceError(f"{P} is not in T_{i}")
    return corrected_count(P.weights, support(P), i, P.field.q)


def fiber_formula_old(a_i: int, q: int) -> int:
    """The superseded count gcd(a_i, q - 1)."""
    return gcd(a_i, q - 1)


def hypothesis_check(target_weights: Sequence[int], i: int, q: int) -> bool:
    """gcd(a_i, a_j, q - 1) == 1 for every j != i."""
    w = check_weights(target_weights)
    _check_index(w, i)
    return all(gcd(gcd(w[i], a), q - 1) == 1 for j, a in enumerate(w) if j != i)


@dataclass(frozen=True)
class FiberReport:
    q: int
    p: int
    k: int
    target_weights: Weights
    i: int
    point: tuple[int, ...]
    delta_P: int
    delta_iP: int
    brute: int
    formula: int
    old_formula: int
    hypothesis: bool

    @property
    def match(self) -> bool:
        return self.brute == self.formula

    @property
    def old_match(self) -> bool:
        return self.brute == self.old_formula

    def sort_key(self):
        return (self.q, self.target_weights, self.i, self.point)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["target_weights"] = list(self.target_weights)
        d["point"] = format_coords(self.point)
        d["match"] = self.match
        d["old_match"] = self.old_match
        return d

    def summary(self) -> str:
        return (
            f"F_{self.q} P{self.target_weights} i={self.i} P=[{':'.join(map(str, self.point))}] "
            f"delta_P={self.delta_P} delta_iP={self.delta_iP} "
            f"brute={self.brute} formula={self.formula} old={self.old_formula} "
            f"hypothesis={self.hypothesis}"
        )


CSV_FIELDS = [
    "q", "p", "k", "target_weights", "i", "point", "delta_P", "delta_iP",
    "brute", "formula", "old_formula", "hypothesis", "match", "old_match",
]


def make_report(field: FieldSpec, weights: Weights, i: int, coords: tuple[int, ...], brute: int) -> FiberReport:
    supp = [j for j, c in enumerate(coords) if c]
    delta_P, delta_iP = deltas(weights, supp, i)
    return FiberReport(
        q=field.q,
        p=field.p,
        k=field.k,
        target_weights=weights,
        i=i,
        point=tuple(coords),
        delta_P=delta_P,
        delta_iP=delta_iP,
        brute=brute,
        formula=corrected_count(weights, supp, i, field.q),
        old_formula=fiber_formula_old(weights[i], field.q),
        hypothesis=hypothesis_check(weights, i, field.q),
    )


def build_fiber_report(target_weights: Sequence[int], i: int, P: WpsPoint, budget: int | None = None) -> FiberReport:
    target = check_weights(target_weights)
    if not in_T_i(P, i):
        raise SpaceError(f"{P} is not in T_{i}")
    brute = len(fiber_bruteforce(target, i, P, budget))
    return make_report(P.field, target, i, P.coords, brute)

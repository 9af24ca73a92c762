"""Enumeration of P(a_0, ..., a_n)(F_q).

Tuples in F_q^{n+1} are indexed by ``sum x_j * q^(n-j)`` so that integer
order is lexicographic order with coordinate 0 most significant.  The
canonical representative of a point is the smallest index among its
F_q-representatives, found by looping over every scalar of F_q^*.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .ff import FieldSpec
from .wps import SpaceError, Weights, WpsPoint, check_weights, format_coords

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 18


class BudgetError(RuntimeError):
    pass


def default_budget() -> int:
    env = os.environ.get("WPS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(q: int, length: int, budget: int | None = None) -> int:
    budget = default_budget() if budget is None else budget
    total = q**length
    if total > budget:
        raise BudgetError(f"F_{q}^{length} has {total} tuples, over the enumeration budget {budget}")
    return total


def decode(indices: np.ndarray, q: int, length: int) -> np.ndarray:
    """Coordinate array of shape (len(indices), length) from tuple indices."""
    out = np.empty((len(indices), length), dtype=np.int64)
    rest = np.asarray(indices, dtype=np.int64)
    for j in range(length - 1, -1, -1):
        rest, out[:, j] = np.divmod(rest, q)
    return out


def encode(coords: np.ndarray, q: int) -> np.ndarray:
    coords = np.asarray(coords, dtype=np.int64)
    idx = np.zeros(coords.shape[0], dtype=np.int64)
    for j in range(coords.shape[1]):
        idx = idx * q + coords[:, j]
    return idx


def _support_gcds(weights: Weights) -> np.ndarray:
    """gcd of the weights over each nonzero support bitmask (bit j = coordinate j)."""
    out = np.zeros(1 << len(weights), dtype=np.int64)
    for mask in range(1, 1 << len(weights)):
        out[mask] = reduce(gcd, [a for j, a in enumerate(weights) if mask >> j & 1])
    return out


def canonicalize_coords(field: FieldSpec, weights: Weights, coords: np.ndarray) -> np.ndarray:
    """Canonical tuple index for each row of ``coords`` (rows must be nonzero)."""
    q = field.q
    nz = coords != 0
    mask = (nz * (1 << np.arange(coords.shape[1]))).sum(axis=1)
    d = _support_gcds(weights)[mask]
    expo = np.asarray(weights, dtype=np.int64)[None, :] // d[:, None]
    logs = field.log[coords]
    best = np.full(coords.shape[0], np.iinfo(np.int64).max, dtype=np.int64)
    for t in range(q - 1):  # nu = generator^t
        scaled = np.where(nz, field.exp[(t * expo + logs) % (q - 1)], 0)
        np.minimum(best, encode(scaled, q), out=best)
    return best


def _chunks(total: int) -> Iterator[tuple[int, int]]:
    for lo in range(1, total, CHUNK):
        yield lo, min(total, lo + CHUNK)


def canonical_table(field: FieldSpec, weights: Weights, budget: int | None = None) -> np.ndarray:
    """``table[idx]`` is the canonical index of tuple ``idx``; ``table[0] = -1``."""
    weights = check_weights(weights)
    check_budget(field.q, len(weights), budget)
    return _canonical_table(field, weights)


@lru_cache(maxsize=512)
def _canonical_table(field: FieldSpec, weights: Weights) -> np.ndarray:
    total = field.q ** len(weights)
    table = np.empty(total, dtype=np.int64)
    table[0] = -1
    for lo, hi in _chunks(total):
        coords = decode(np.arange(lo, hi), field.q, len(weights))
        table[lo:hi] = canonicalize_coords(field, weights, coords)
    table.flags.writeable = False
    return table


def canonical_indices(field: FieldSpec, weights: Weights, budget: int | None = None) -> np.ndarray:
    """Sorted canonical indices, one per point."""
    table = canonical_table(field, check_weights(weights), budget)
    idx = np.arange(1, len(table))
    return idx[table[1:] == idx]


def count_points(field: FieldSpec, weights: Sequence[int], budget: int | None = None) -> int:
    """Number of F_q-points, streamed chunk by chunk without keeping the census."""
    weights = check_weights(weights)
    total = check_budget(field.q, len(weights), budget)
    count = 0
    for lo, hi in _chunks(total):
        idx = np.arange(lo, hi)
        coords = decode(idx, field.q, len(weights))
        count += int(np.count_nonzero(canonicalize_coords(field, weights, coords) == idx))
    return count


def t_mask(field: FieldSpec, weights: Weights, coords: np.ndarray, i: int) -> np.ndarray:
    """Vectorized membership in T_i for canonical coordinate rows.

    Coordinate ``i`` can be scaled to 1 iff ``x_i`` lies in the image of
    ``nu -> nu^(a_i/d)``, the subgroup of F_q^* of index gcd(a_i/d, q-1).
    """
    nz = coords != 0
    mask = (nz * (1 << np.arange(coords.shape[1]))).sum(axis=1)
    d = _support_gcds(weights)[mask]
    b = weights[i] // np.where(d == 0, 1, d)
    step = np.gcd(b, field.q - 1)
    logs = field.log[coords[:, i]]
    return nz[:, i] & (nz.sum(axis=1) >= 2) & (logs % step == 0)


@dataclass(frozen=True)
class SpaceCensus:
    field: FieldSpec
    weights: Weights
    indices: np.ndarray = field(repr=False)
    coords: np.ndarray = field(repr=False)
    points: list[WpsPoint] = field(repr=False)
    t_sets: list[list[WpsPoint]] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        return {
            "q": self.field.q,
            "p": self.field.p,
            "k": self.field.k,
            "weights": list(self.weights),
            "count": self.count,
            "points": [format_coords(pt.coords) for pt in self.points],
            "t_sets": [[format_coords(pt.coords) for pt in ts] for ts in self.t_sets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"x{j}" for j in range(len(self.weights))])
        writer.writerows(pt.coords for pt in self.points)
        return buf.getvalue()


def enumerate_space(field: FieldSpec, weights: Sequence[int], budget: int | None = None) -> SpaceCensus:
    weights = check_weights(weights)
    indices = canonical_indices(field, weights, budget)
    coords = decode(indices, field.q, len(weights))
    points = [WpsPoint(tuple(int(c) for c in row), weights, field) for row in coords]
    t_sets = []
    for i in range(len(weights)):
        member = t_mask(field, weights, coords, i)
        t_sets.append([pt for pt, m in zip(points, member) if m])
    return SpaceCensus(field, weights, indices, coords, points, t_sets)


def t_set(census: SpaceCensus, i: int) -> list[WpsPoint]:
    if not 0 <= i < len(census.weights):
        raise SpaceError(f"index {i} out of range for {len(census.weights)} coordinates")
    return census.t_sets[i]


def projective_count(q: int, n: int) -> int:
    """1 + q + ... + q^n."""
    return sum(q**j for j in range(n + 1))

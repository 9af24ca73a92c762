"""Exhaustive checks of the fiber-count formula against brute-force enumeration."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence

import numpy as np

from .census import canonical_indices, canonical_table, check_budget, count_points, decode, encode, t_mask
from .ff import field_of_order, is_prime, make_field, prime_factors, prime_power
from .fiber import CSV_FIELDS, FiberReport, build_fiber_report, fiber_sizes, make_report
from .wps import Weights, check_weights, format_coords, normalize


@dataclass(frozen=True)
class SweepConfig:
    q_list: tuple[int, ...] = (2, 3, 4, 5, 7)
    n_range: tuple[int, ...] = (1, 2)
    weight_max: int = 6
    mode: str = "exhaustive"
    samples: int = 500
    seed: int = 0
    budget: int | None = None
    jobs: int = 1

    def __post_init__(self):
        for q in self.q_list:
            prime_power(q)
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.weight_max < 1 or any(n < 1 for n in self.n_range):
            raise ValueError("weight_max and every n must be >= 1")

    def cells(self) -> list[tuple[int, Weights, int]]:
        """The (q, weights, i) grid, in sort order, possibly subsampled."""
        grid = [
            (q, w, i)
            for q in sorted(self.q_list)
            for n in sorted(self.n_range)
            for w in product(range(1, self.weight_max + 1), repeat=n + 1)
            for i in range(n + 1)
        ]
        if self.mode == "sampled":
            picked = random.Random(self.seed).sample(range(len(grid)), min(self.samples, len(grid)))
            grid = [grid[j] for j in sorted(picked)]
        return grid

    def to_dict(self) -> dict:
        # jobs is left out: reports must not depend on it
        return {
            "q_list": list(self.q_list),
            "n_range": list(self.n_range),
            "weight_max": self.weight_max,
            "mode": self.mode,
            "samples": self.samples if self.mode == "sampled" else None,
            "seed": self.seed if self.mode == "sampled" else None,
        }


@dataclass
class SweepReport:
    config: SweepConfig
    cases: list[FiberReport]
    elapsed: float = 0.0

    @property
    def mismatches(self) -> list[FiberReport]:
        return [c for c in self.cases if not c.match]

    @property
    def totals(self) -> dict:
        matches = sum(c.match for c in self.cases)
        return {
            "cases": len(self.cases),
            "matches": matches,
            "mismatches": len(self.cases) - matches,
            "old_formula_mismatches": sum(not c.old_match for c in self.cases),
        }

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        # elapsed stays out so identical sweeps serialize identically
        doc = {
            "config": self.config.to_dict(),
            "totals": self.totals,
            "mismatches": [c.to_dict() for c in self.mismatches],
            "cases": [c.to_dict() for c in self.cases],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for c in self.cases:
            row = c.to_dict()
            row["target_weights"] = format_coords(c.target_weights)
            writer.writerow(row)
        return buf.getvalue()

    def summary(self) -> str:
        t = self.totals
        return (
            f"cases={t['cases']} matches={t['matches']} mismatches={t['mismatches']} "
            f"old_formula_mismatches={t['old_formula_mismatches']} elapsed={self.elapsed:.2f}s"
        )


class SweepAborted(RuntimeError):
    pass


def run_cell(q: int, weights: Weights, i: int, budget: int | None = None) -> list[FiberReport]:
    """Reports for every point of T_i in P(weights)(F_q)."""
    field = field_of_order(q)
    indices = canonical_indices(field, weights, budget)
    coords = decode(indices, q, len(weights))
    member = t_mask(field, weights, coords, i)
    sizes = fiber_sizes(field, weights, i, budget)
    return [
        make_report(field, weights, i, tuple(int(c) for c in row), sizes.get(int(idx), 0))
        for idx, row in zip(indices[member], coords[member])
    ]


def _run_cell_args(args) -> list[FiberReport]:
    q, weights, i, budget = args
    try:
        return run_cell(q, weights, i, budget)
    except Exception as exc:
        raise SweepAborted(f"q={q} weights={weights} i={i}: {exc}") from exc


def run_sweep(config: SweepConfig) -> SweepReport:
    start = time.perf_counter()
    work = [(q, w, i, config.budget) for q, w, i in config.cells()]
    for q, w, _, budget in work:
        check_budget(q, len(w), budget)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_cell_args, work, chunksize=max(1, len(work) // (8 * config.jobs))))
    else:
        chunks = [_run_cell_args(args) for args in work]
    cases = sorted((c for chunk in chunks for c in chunk), key=FiberReport.sort_key)
    return SweepReport(config, cases, time.perf_counter() - start)


# -- valuation identity ---------------------------------------------------

def ell_adic_valuation(ell: int, m: int) -> int:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if m <= 0:
        raise ValueError("valuation needs m >= 1")
    e = 0
    while m % ell == 0:
        m //= ell
        e += 1
    return e


@dataclass(frozen=True)
class ValuationWitness:
    ell: int
    alpha: int
    kappa: int
    delta: int
    lhs: int
    rhs: int


def valuation_witness(ell: int, a: int, d: int, m: int) -> ValuationWitness:
    alpha = ell_adic_valuation(ell, a)
    kappa = ell_adic_valuation(ell, m)
    delta = ell_adic_valuation(ell, d)
    return ValuationWitness(
        ell, alpha, kappa, delta,
        lhs=min(alpha, kappa + delta) - min(alpha, delta),
        rhs=min(alpha, kappa),
    )


def check_valuation_identity(a: int, d: int, m: int) -> tuple[bool, list[ValuationWitness]]:
    """Whether gcd(a, m*d) / gcd(a, d) == gcd(a, m), with witnesses at every prime of a*d*m.

    Read ``a`` as a_i, ``m`` as q - 1 and ``d`` as delta_{i,P}.
    """
    holds = gcd(a, m * d) // gcd(a, d) == gcd(a, m)
    return holds, [valuation_witness(ell, a, d, m) for ell in prime_factors(a * d * m)]


def valuation_identity_sweep(limit: int) -> dict:
    """Check every triple 1 <= a, d, m <= limit, vectorized over (d, m) for each a.

    Returns counts; ``identity_failures`` and ``witness_failures`` must be zero.
    """
    vals = np.arange(1, limit + 1, dtype=np.int64)
    d, m = np.meshgrid(vals, vals, indexing="ij")
    vtab = {}
    out = {"triples": 0, "coprime_triples": 0, "identity_failures": 0,
           "witness_failures": 0, "unconditional_failures": 0}
    for a in range(1, limit + 1):
        coprime = np.gcd(np.gcd(a, d), m) == 1
        holds = np.gcd(a, m * d) // np.gcd(a, d) == np.gcd(a, m)
        out["triples"] += holds.size
        out["coprime_triples"] += int(coprime.sum())
        out["identity_failures"] += int((coprime & ~holds).sum())
        out["unconditional_failures"] += int((~holds).sum())
        # primes not dividing a give alpha = 0 and lhs = rhs = 0
        for ell in prime_factors(a):
            if ell not in vtab:
                vtab[ell] = np.array([0] + [ell_adic_valuation(ell, v) for v in range(1, limit + 1)])
            alpha = ell_adic_valuation(ell, a)
            kappa, delta = vtab[ell][m], vtab[ell][d]
            lhs = np.minimum(alpha, kappa + delta) - np.minimum(alpha, delta)
            rhs = np.minimum(alpha, kappa)
            vanish = np.minimum(np.minimum(alpha, kappa), delta) == 0
            out["witness_failures"] += int((vanish & (lhs != rhs)).sum())
    return out


# -- counterexample and Galois check --------------------------------------

def reproduce_counterexample(a0: int = 1, a1: int = 1, a2: int = 2) -> FiberReport:
    """The fiber of pi_2 : P(a0,a1,1,4) -> P(a0,a1,a2,4) over [0:0:1:2] in F_5."""
    field = make_field(5, 1)
    weights = check_weights((a0, a1, a2, 4))
    P = normalize(field, weights, (0, 0, 1, 2))
    report = build_fiber_report(weights, 2, P)
    if report.brute != report.formula:
        raise AssertionError(f"brute force and corrected formula disagree: {report.summary()}")
    if a2 == 2 and (report.brute, report.formula, report.old_formula) != (1, 1, 2):
        raise AssertionError(f"expected brute=1 formula=1 old=2, got {report.summary()}")
    return report


def frobenius_fixed_count(weights: Sequence[int], p: int, k: int, budget: int | None = None) -> int:
    """Points of P(weights)(F_{q^2}) fixed by x -> x^q coordinate-wise, q = p^k."""
    weights = check_weights(weights)
    big = make_field(p, 2 * k)
    q, Q = p**k, big.q
    check_budget(Q, len(weights), budget)
    indices = canonical_indices(big, weights, budget)
    coords = decode(indices, Q, len(weights))
    frob = np.where(coords != 0, big.exp[(big.log[coords] * q) % (Q - 1)], 0)
    images = canonical_table(big, weights, budget)[encode(frob, Q)]
    return int(np.count_nonzero(images == indices))


def galois_crosscheck(weights: Sequence[int], p: int, k: int = 1, budget: int | None = None) -> bool:
    return frobenius_fixed_count(weights, p, k, budget) == count_points(make_field(p, k), weights, budget)

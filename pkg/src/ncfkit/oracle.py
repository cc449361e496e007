"""Brute-force ground truth for the counting formulas.

enumerate_ncfs sweeps the entire descriptor space
(permutations x set choices x output vectors), tabulates every descriptor,
and deduplicates the truth tables; census runs the detector over all p^(p^n)
functions. Wherever both fit their budgets the two counts and the closed
formula must agree exactly.

Both sweeps partition cleanly: the descriptor space by permutation, the
function space by table index range. Workers accumulate locally and merge
once at the end, so the final counts do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded
from .field import IntervalSet, PrimeField, interval_sets
from .functions import TruthTable
from .ncf import NcfDescriptor, _detect_values

DEFAULT_DESCRIPTOR_BUDGET = 10**7
DEFAULT_CENSUS_BUDGET = 10**6


@dataclass(frozen=True)
class EnumerationResult:
    p: int
    n: int
    descriptor_count: int
    distinct_function_count: int
    tables: tuple[TruthTable, ...] | None = None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "descriptors": str(self.descriptor_count),
            "distinct": str(self.distinct_function_count),
        }


def descriptor_space_size(p: int, n: int) -> int:
    """n! * (2(p-1))^n * p^n * (p-1): permutations, set choices, free
    outputs b_1..b_n, and the constrained b_{n+1}."""
    return math.factorial(n) * (2 * (p - 1)) ** n * p**n * (p - 1)


def enumerate_ncfs(
    p: int,
    n: int,
    budget: int = DEFAULT_DESCRIPTOR_BUDGET,
    include_tables: bool = False,
    workers: int = 1,
) -> EnumerationResult:
    """Sweep every descriptor, deduplicate the truth tables, count both."""
    field = PrimeField(p)
    required = descriptor_space_size(p, n)
    if required > budget:
        raise BudgetExceeded(required, budget, "descriptors")
    perms = list(itertools.permutations(range(1, n + 1)))
    if workers > 1 and len(perms) > 1:
        chunks = [perms[i::workers] for i in range(workers)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_sweep_perms, [(p, n, c) for c in chunks]))
        swept = sum(count for count, _ in parts)
        distinct: set[bytes] = set()
        for _, tables in parts:
            distinct |= tables
    else:
        swept, distinct = _sweep_perms((p, n, perms))
    assert swept == required
    tables = None
    if include_tables:
        tables = tuple(TruthTable(field, n, values) for values in sorted(distinct))
    return EnumerationResult(p, n, swept, len(distinct), tables)


def _sweep_perms(args: tuple[int, int, list[tuple[int, ...]]]) -> tuple[int, set[bytes]]:
    p, n, perms = args
    field = PrimeField(p)
    catalog = interval_sets(field)
    points = list(itertools.product(range(p), repeat=n))
    swept = 0
    distinct: set[bytes] = set()
    for sigma in perms:
        order = [v - 1 for v in sigma]
        for sets in itertools.product(catalog, repeat=n):
            # Which layer fires at each point is fixed once sigma and the
            # sets are chosen; sweeping outputs is then a table lookup.
            firing = bytes(_first_layer(sets, order, point, n) for point in points)
            for outs in itertools.product(range(p), repeat=n):
                last_free = outs[-1]
                for b_last in range(p):
                    if b_last == last_free:
                        continue
                    full = outs + (b_last,)
                    distinct.add(bytes(full[j] for j in firing))
                    swept += 1
    return swept, distinct


def _first_layer(
    sets: tuple[IntervalSet, ...], order: list[int], point: tuple[int, ...], n: int
) -> int:
    for j in range(n):
        if sets[j].contains(point[order[j]]):
            return j
    return n


def census(
    p: int,
    n: int,
    budget: int = DEFAULT_CENSUS_BUDGET,
    workers: int = 1,
) -> int:
    """Run detection over every function F_p^n -> F_p; count the hits."""
    PrimeField(p)
    total = p ** (p**n)
    if total > budget:
        raise BudgetExceeded(total, budget, "functions")
    if workers > 1:
        bounds = [(total * i // workers, total * (i + 1) // workers) for i in range(workers)]
        bounds = [(lo, hi) for lo, hi in bounds if lo < hi]
        with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
            parts = pool.map(_census_range, [(p, n, lo, hi) for lo, hi in bounds])
        return sum(parts)
    return _census_range((p, n, 0, total))


def _census_range(args: tuple[int, int, int, int]) -> int:
    p, n, start, stop = args
    field = PrimeField(p)
    variables = tuple(range(1, n + 1))
    size = p**n
    # Odometer over value vectors, seeded by decoding the range start.
    digits = []
    rest = start
    for _ in range(size):
        rest, d = divmod(rest, p)
        digits.append(d)
    digits.reverse()
    hits = 0
    for _ in range(start, stop):
        if _detect_values(field, bytes(digits), variables) is not None:
            hits += 1
        for i in range(size - 1, -1, -1):
            digits[i] += 1
            if digits[i] < p:
                break
            digits[i] = 0
    return hits


def random_ncf(p: int, n: int, seed: int) -> NcfDescriptor:
    """Uniform draw over the descriptor space (not over distinct functions:
    every function has many descriptors). Deterministic for a fixed seed."""
    field = PrimeField(p)
    rng = random.Random(seed)
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    catalog = interval_sets(field)
    sets = tuple(rng.choice(catalog) for _ in range(n))
    outputs = [rng.randrange(p) for _ in range(n)]
    last = rng.randrange(p - 1)
    if last >= outputs[-1]:
        last += 1
    outputs.append(last)
    return NcfDescriptor(field, n, tuple(sigma), sets, tuple(outputs))

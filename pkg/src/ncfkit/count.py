"""Exact counts of nested canalyzing functions over F_p.

Write RNCF(n) for the number of n-variable nested canalyzing functions that
factor as a product of two or more nested canalyzing functions, INCF(n) for
those that do not, and NCF(n) for all of them. The counts satisfy

    NCF(n)  = RNCF(n) + INCF(n) = p * RNCF(n)
    INCF(n) = (p-1) * RNCF(n)
    RNCF(1) = (p-1)^2
    RNCF(2) = 4 (p-1)^4
    RNCF(n) = sum_{r=2}^{n-1} C(n, r-1) 2^{r-1} (p-1)^r RNCF(n-r+1)
              + 2^{n-1} (p-1)^{n+1} (2 + n(p-2))          for n >= 3,

where the closing term counts the functions that factor into n layers.
Everything here is exact integer arithmetic; the only float in the module
is the log-ratio diagnostic of BoundsReport.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import BadArity
from .field import PrimeField

_memo: dict[tuple[int, int], int] = {}
_memo_lock = threading.Lock()


def _check_prime(p: int) -> None:
    PrimeField(p)


def rncf(p: int, n: int) -> int:
    """Number of n-variable nested canalyzing functions over F_p that split
    into a product of two or more such functions."""
    _check_prime(p)
    if n < 1:
        raise BadArity(f"arity must be >= 1, got {n}")
    cached = _memo.get((p, n))
    if cached is not None:
        return cached
    # Bottom-up fill; the recursion reaches all the way down to arity 2.
    values = [0, (p - 1) ** 2, 4 * (p - 1) ** 4]
    for m in range(3, n + 1):
        total = rncf_nn(p, m)
        for r in range(2, m):
            total += math.comb(m, r - 1) * 2 ** (r - 1) * (p - 1) ** r * values[m - r + 1]
        values.append(total)
    with _memo_lock:
        for m in range(1, n + 1):
            _memo[(p, m)] = values[m]
    return values[n]


def ncf_count(p: int, n: int) -> int:
    """Total number of n-variable nested canalyzing functions over F_p."""
    return p * rncf(p, n)


def incf(p: int, n: int) -> int:
    """Number of n-variable nested canalyzing functions over F_p that do not
    split into a product of nested canalyzing functions."""
    return (p - 1) * rncf(p, n)


def rncf_nn(p: int, n: int) -> int:
    """Closed form for the n-variable functions that factor into n layers:
    2^{n-1} (p-1)^{n+1} (2 + n(p-2)). Valid for n >= 3; smaller arities are
    seeded directly in the recursion."""
    _check_prime(p)
    if n < 3:
        raise BadArity(f"the n-layer closed form needs n >= 3, got {n}")
    return 2 ** (n - 1) * (p - 1) ** (n + 1) * (2 + n * (p - 2))


def rncf_split(p: int, n: int, factors: int) -> int:
    """Count of n-variable functions factoring into exactly `factors` layers,
    C(n, r+1) 2^{n-r-1} (p-1)^{n-r-1} INCF(r+1) with r = n - factors; the
    per-r terms sum to rncf(p, n)."""
    _check_prime(p)
    if not 2 <= factors <= n:
        raise BadArity(f"factor count must be in 2..{n}, got {factors}")
    if factors == n:
        return rncf(p, 2) if n == 2 else rncf_nn(p, n)
    r = n - factors
    return math.comb(n, r + 1) * 2 ** (n - r - 1) * (p - 1) ** (n - r - 1) * incf(p, r + 1)


def boolean_e(n: int) -> int:
    """The two-valued cascade count E(n): E(1)=2, E(2)=4, and

        E(n) = sum_{r=2}^{n-1} C(n, r-1) 2^{r-1} E(n-r+1) + 2^n.

    Kept independent of rncf so that 2 E(n) = ncf_count(2, n) for n >= 2 is
    a genuine cross-check of two recursions. At n = 1 the seed E(1) = 2
    disagrees with the two canalyzing one-variable functions; the seed only
    feeds the recursion and is not a function count.
    """
    if n < 1:
        raise BadArity(f"arity must be >= 1, got {n}")
    values = [0, 2, 4]
    for m in range(3, n + 1):
        total = 2**m
        for r in range(2, m):
            total += math.comb(m, r - 1) * 2 ** (r - 1) * values[m - r + 1]
        values.append(total)
    return values[n]


@dataclass(frozen=True)
class BoundsRow:
    """Exact bound checks and the vanishing-ratio diagnostic for one arity."""

    n: int
    rncf: int
    split_bound_ok: bool  # 2^{r-1} (p-1)^r RNCF(n-r+1) <= RNCF(n) for r=2..n-1
    layer_bound: int  # 2^{2n} (p-1)^{n+2}, must dominate rncf_nn
    layer_bound_ok: bool
    growth_bound: int  # 2^{n(n-1)} (p-1)^{2n}, must dominate rncf
    growth_bound_ok: bool
    log_ratio: float  # log_p NCF(n) - p^n, a display-only trend


@dataclass(frozen=True)
class BoundsReport:
    p: int
    rows: tuple[BoundsRow, ...]

    @property
    def all_ok(self) -> bool:
        return all(r.split_bound_ok and r.layer_bound_ok and r.growth_bound_ok for r in self.rows)

    @property
    def log_ratio_strictly_decreasing(self) -> bool:
        ratios = [r.log_ratio for r in self.rows]
        return all(b < a for a, b in zip(ratios, ratios[1:]))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "rows": [
                {
                    "n": r.n,
                    "rncf": str(r.rncf),
                    "split_bound_ok": r.split_bound_ok,
                    "layer_bound": str(r.layer_bound),
                    "layer_bound_ok": r.layer_bound_ok,
                    "growth_bound": str(r.growth_bound),
                    "growth_bound_ok": r.growth_bound_ok,
                    "log_ratio": r.log_ratio,
                }
                for r in self.rows
            ],
            "all_ok": self.all_ok,
            "log_ratio_strictly_decreasing": self.log_ratio_strictly_decreasing,
        }


def bounds_report(p: int, n_max: int) -> BoundsReport:
    """Exact big-integer verification of the three upper bounds for
    3 <= n <= n_max, plus the log-ratio trend that substitutes for the
    vanishing-ratio limit."""
    _check_prime(p)
    if n_max < 3:
        raise BadArity(f"need n_max >= 3, got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        value = rncf(p, n)
        split_ok = all(
            2 ** (r - 1) * (p - 1) ** r * rncf(p, n - r + 1) <= value for r in range(2, n)
        )
        layer_bound = 2 ** (2 * n) * (p - 1) ** (n + 2)
        growth_bound = 2 ** (n * (n - 1)) * (p - 1) ** (2 * n)
        rows.append(
            BoundsRow(
                n=n,
                rncf=value,
                split_bound_ok=split_ok,
                layer_bound=layer_bound,
                layer_bound_ok=rncf_nn(p, n) <= layer_bound,
                growth_bound=growth_bound,
                growth_bound_ok=value <= growth_bound,
                log_ratio=math.log(ncf_count(p, n), p) - p**n,
            )
        )
    return BoundsReport(p, tuple(rows))

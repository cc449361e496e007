"""Arithmetic in F_p = {0 < 1 < ... < p-1} and the catalog of admissible
canalyzing input sets.

A canalyzing input set is a proper nonempty subinterval of F_p whose
complement is again a subinterval; equivalently a prefix {0..t} or a
suffix {t..p-1}. For a fixed p there are exactly 2(p-1) of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ZeroInverse

PREFIX = "P"
SUFFIX = "S"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """F_p with elements stored as canonical representatives 0..p-1."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")

    def check(self, a: int) -> int:
        if not 0 <= a < self.p:
            raise ValueError(f"{a} is not a canonical element of F_{self.p}")
        return a

    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        # pow(0, 0, p) == 1 % p, which is the 0^0 = 1 convention we need.
        return pow(a, e, self.p)


@dataclass(frozen=True)
class IntervalSet:
    """Threshold interval of F_p: Prefix(t) = {0..t} or Suffix(t) = {t..p-1}.

    Stored as (kind, threshold) only; membership is a single comparison and
    the subset is never materialized. Proper/nonempty bounds (t <= p-2 for a
    prefix, 1 <= t <= p-1 for a suffix) are enforced by validate() against a
    concrete field, since the object itself does not know p.
    """

    kind: str
    threshold: int

    def __post_init__(self):
        if self.kind not in (PREFIX, SUFFIX):
            raise ValueError(f"kind must be {PREFIX!r} or {SUFFIX!r}, got {self.kind!r}")
        low = 0 if self.kind == PREFIX else 1
        if self.threshold < low:
            raise ValueError(f"threshold {self.threshold} too small for kind {self.kind!r}")

    @classmethod
    def prefix(cls, t: int) -> "IntervalSet":
        return cls(PREFIX, t)

    @classmethod
    def suffix(cls, t: int) -> "IntervalSet":
        return cls(SUFFIX, t)

    def validate(self, field: PrimeField) -> "IntervalSet":
        high = field.p - 2 if self.kind == PREFIX else field.p - 1
        if self.threshold > high:
            raise ValueError(f"{self} is not a proper nonempty interval of F_{field.p}")
        return self

    def contains(self, x: int) -> bool:
        if self.kind == PREFIX:
            return x <= self.threshold
        return x >= self.threshold

    def members(self, field: PrimeField) -> range:
        self.validate(field)
        if self.kind == PREFIX:
            return range(self.threshold + 1)
        return range(self.threshold, field.p)

    def size(self, field: PrimeField) -> int:
        self.validate(field)
        if self.kind == PREFIX:
            return self.threshold + 1
        return field.p - self.threshold

    def complement(self, field: PrimeField) -> "IntervalSet":
        self.validate(field)
        if self.kind == PREFIX:
            return IntervalSet(SUFFIX, self.threshold + 1)
        return IntervalSet(PREFIX, self.threshold - 1)

    def __str__(self) -> str:
        return f"{self.kind}{self.threshold}"

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        """Parse the text form 'P<t>' / 'S<t>', e.g. 'P1' = {0,1}."""
        text = text.strip()
        if len(text) < 2 or text[0] not in (PREFIX, SUFFIX) or not text[1:].isdigit():
            raise ValueError(f"bad interval set {text!r}; expected P<t> or S<t>")
        return cls(text[0], int(text[1:]))


@lru_cache(maxsize=None)
def interval_sets(field: PrimeField) -> tuple[IntervalSet, ...]:
    """All 2(p-1) canalyzing input sets of F_p.

    Deterministic order: prefixes by ascending threshold, then suffixes by
    ascending threshold. No two entries denote the same subset.
    """
    prefixes = [IntervalSet(PREFIX, t) for t in range(field.p - 1)]
    suffixes = [IntervalSet(SUFFIX, t) for t in range(1, field.p)]
    return tuple(prefixes + suffixes)


def complement(s: IntervalSet, field: PrimeField) -> IntervalSet:
    """Set complement within F_p; an involution on the interval catalog."""
    return s.complement(field)

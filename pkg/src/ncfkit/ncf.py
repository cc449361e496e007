"""Nested canalyzing functions: descriptors, construction, detection,
and the two output-preserving symmetry transforms.

A descriptor is (sigma, S_1..S_n, b_1..b_{n+1}) with b_n != b_{n+1}. The
function it describes outputs b_j at the first layer j whose test
x_{sigma(j)} in S_j succeeds, and b_{n+1} if every test fails. The same
function also has the closed polynomial form

    sum_{m=1}^{n} (b_{m+1} - b_m) * prod_{i=1}^{m} Q_{S_i}(x_{sigma(i)}) + b_1

where Q_S is the indicator of the complement of S; build_polynomial
computes exactly that expansion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ArityMismatch, InvalidDescriptor
from .field import IntervalSet, PrimeField, interval_sets
from .functions import TruthTable, slice_values
from .poly import PolyR, mul_univariate, set_indicator


@dataclass(frozen=True)
class NcfDescriptor:
    """Layer order sigma, canalyzing input sets, and canalyzing outputs."""

    field: PrimeField
    n: int
    sigma: tuple[int, ...]
    sets: tuple[IntervalSet, ...]
    outputs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDescriptor("arity must be >= 1")
        if sorted(self.sigma) != list(range(1, self.n + 1)):
            raise InvalidDescriptor(f"sigma {self.sigma} is not a permutation of 1..{self.n}")
        if len(self.sets) != self.n:
            raise InvalidDescriptor(f"need {self.n} input sets, got {len(self.sets)}")
        for s in self.sets:
            try:
                s.validate(self.field)
            except ValueError as exc:
                raise InvalidDescriptor(str(exc)) from None
        if len(self.outputs) != self.n + 1:
            raise InvalidDescriptor(f"need {self.n + 1} outputs, got {len(self.outputs)}")
        for b in self.outputs:
            if not 0 <= b < self.field.p:
                raise InvalidDescriptor(f"output {b} is not an element of F_{self.field.p}")
        if self.outputs[-1] == self.outputs[-2]:
            raise InvalidDescriptor("the last two outputs must differ")

    def to_text(self) -> str:
        sigma = ",".join(str(v) for v in self.sigma)
        sets = ",".join(str(s) for s in self.sets)
        outs = ",".join(str(b) for b in self.outputs)
        return f"sigma={sigma} sets={sets} b={outs}"

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "n": self.n,
            "sigma": list(self.sigma),
            "sets": [str(s) for s in self.sets],
            "b": list(self.outputs),
        }

    @classmethod
    def from_parts(cls, field: PrimeField, sigma: str, sets: str, b: str) -> "NcfDescriptor":
        """Build from the flag syntax, e.g. sigma='2,1' sets='P0,S2' b='0,1,2'."""
        try:
            sig = tuple(int(v) for v in sigma.split(","))
            outs = tuple(int(v) for v in b.split(","))
        except ValueError as exc:
            raise InvalidDescriptor(f"bad integer list: {exc}") from None
        try:
            ss = tuple(IntervalSet.parse(t) for t in sets.split(","))
        except ValueError as exc:
            raise InvalidDescriptor(str(exc)) from None
        return cls(field, len(sig), sig, ss, outs)

    @classmethod
    def from_json(cls, obj: dict) -> "NcfDescriptor":
        fld = PrimeField(obj["p"])
        sets = tuple(IntervalSet.parse(t) for t in obj["sets"])
        return cls(fld, obj["n"], tuple(obj["sigma"]), sets, tuple(obj["b"]))


def build_table(d: NcfDescriptor) -> TruthTable:
    """Tabulate the layered rule at every point of F_p^n."""
    p = d.field.p
    values = bytearray()
    for point in itertools.product(range(p), repeat=d.n):
        values.append(_ladder_output(d, point))
    return TruthTable(d.field, d.n, bytes(values))


def _ladder_output(d: NcfDescriptor, point: tuple[int, ...]) -> int:
    for j in range(d.n):
        if d.sets[j].contains(point[d.sigma[j] - 1]):
            return d.outputs[j]
    return d.outputs[d.n]


def build_polynomial(d: NcfDescriptor) -> PolyR:
    """Expand the layered rule into dense polynomial coefficients.

    Accumulates b_1 + sum_m (b_{m+1} - b_m) * G_m where G_m is the running
    product of the first m complement indicators, each applied to the
    variable its layer tests.
    """
    p = d.field.p
    size = p**d.n
    acc = [0] * size
    acc[0] = d.outputs[0]
    running = [0] * size
    running[0] = 1
    product = PolyR(d.field, d.n, bytes(running))
    for m in range(1, d.n + 1):
        q = set_indicator(d.sets[m - 1], d.field)
        product = mul_univariate(product, d.sigma[m - 1], q)
        delta = (d.outputs[m] - d.outputs[m - 1]) % p
        if delta:
            for i, c in enumerate(product.coeffs):
                if c:
                    acc[i] = (acc[i] + delta * c) % p
    return PolyR(d.field, d.n, bytes(acc))


def detect(table: TruthTable) -> NcfDescriptor | None:
    """Find a descriptor reproducing the table exactly, or None.

    Deterministic backtracking: at each layer, candidate variables are tried
    in ascending index and candidate sets in catalog order, so the result is
    the lexicographically first descriptor under that order. Descriptors are
    never unique (the last layer can always swap its set for the complement
    with the last two outputs exchanged).
    """
    if table.n < 1:
        raise ArityMismatch("detection needs arity >= 1")
    found = _detect_values(table.field, table.values, tuple(range(1, table.n + 1)))
    if found is None:
        return None
    sigma, sets, outputs = found
    return NcfDescriptor(table.field, table.n, sigma, sets, outputs)


def _detect_values(
    field: PrimeField, values: bytes, variables: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[IntervalSet, ...], tuple[int, ...]] | None:
    p = field.p
    m = len(variables)
    catalog = interval_sets(field)
    if m == 1:
        for s in catalog:
            on = {values[x] for x in range(p) if s.contains(x)}
            off = {values[x] for x in range(p) if not s.contains(x)}
            if len(on) == 1 and len(off) == 1 and on != off:
                return (variables, (s,), (on.pop(), off.pop()))
        return None
    for pos, var in enumerate(variables):
        slices = [slice_values(values, p, m, pos + 1, a) for a in range(p)]
        for s in catalog:
            on_values = set()
            off_slices = []
            for a in range(p):
                if s.contains(a):
                    on_values.update(slices[a])
                else:
                    off_slices.append(slices[a])
            if len(on_values) != 1:
                continue
            if any(part != off_slices[0] for part in off_slices[1:]):
                continue
            rest = variables[:pos] + variables[pos + 1 :]
            deeper = _detect_values(field, off_slices[0], rest)
            if deeper is not None:
                sig, sets, outs = deeper
                return ((var,) + sig, (s,) + sets, (on_values.pop(),) + outs)
    return None


def complement_last(d: NcfDescriptor) -> NcfDescriptor:
    """Swap the last set for its complement and exchange the last two outputs.

    An involution that leaves the truth table unchanged.
    """
    sets = d.sets[:-1] + (d.sets[-1].complement(d.field),)
    outputs = d.outputs[:-2] + (d.outputs[-1], d.outputs[-2])
    return NcfDescriptor(d.field, d.n, d.sigma, sets, outputs)


def shift(d: NcfDescriptor, b: int) -> NcfDescriptor:
    """Add b to every output; the truth table shifts by b pointwise."""
    d.field.check(b)
    outputs = tuple((v + b) % d.field.p for v in d.outputs)
    return NcfDescriptor(d.field, d.n, d.sigma, d.sets, outputs)

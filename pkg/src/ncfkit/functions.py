"""Dense truth tables for functions F_p^n -> F_p.

Points are tuples (a_1, ..., a_n); the table index is the mixed-radix
number with x_1 most significant, so lexicographic point order equals
index order. Values are stored as bytes, which caps p at 97.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch, BadVariable, ParseError
from .field import IntervalSet, PrimeField

MAX_TABLE_P = 97

Point = tuple[int, ...]


def index_of(point: Sequence[int], field: PrimeField) -> int:
    """Mixed-radix index of a point, x_1 most significant."""
    idx = 0
    for a in point:
        idx = idx * field.p + field.check(a)
    return idx


def point_at(index: int, field: PrimeField, n: int) -> Point:
    """Inverse of index_of for arity n."""
    if not 0 <= index < field.p**n:
        raise ValueError(f"index {index} out of range for p={field.p}, n={n}")
    coords = []
    for _ in range(n):
        index, a = divmod(index, field.p)
        coords.append(a)
    return tuple(reversed(coords))


def all_points(field: PrimeField, n: int) -> Iterator[Point]:
    """Points of F_p^n in index order."""
    p = field.p
    for idx in range(p**n):
        yield point_at(idx, field, n)


@dataclass(frozen=True)
class TruthTable:
    """Value vector of a function F_p^n -> F_p, one byte per point.

    n = 0 is permitted (a bare constant); it shows up when peeling the last
    variable off a table. Operations defined only for genuine functions
    state n >= 1 themselves.
    """

    field: PrimeField
    n: int
    values: bytes

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("arity must be >= 0")
        if self.field.p > MAX_TABLE_P:
            raise ValueError(f"tables support p <= {MAX_TABLE_P}, got p={self.field.p}")
        if len(self.values) != self.field.p**self.n:
            raise ValueError(
                f"table needs {self.field.p ** self.n} values, got {len(self.values)}"
            )
        if any(v >= self.field.p for v in self.values):
            raise ValueError(f"table entries must be < p={self.field.p}")

    @classmethod
    def from_values(cls, field: PrimeField, n: int, values: Iterable[int]) -> "TruthTable":
        return cls(field, n, bytes(values))

    def value_at(self, point: Sequence[int]) -> int:
        if len(point) != self.n:
            raise ArityMismatch(f"point has {len(point)} coordinates, table arity is {self.n}")
        return self.values[index_of(point, self.field)]

    def to_text(self) -> str:
        header = f"{self.field.p} {self.n}"
        return header + "\n" + " ".join(str(v) for v in self.values) + "\n"

    def to_json(self) -> dict:
        return {"p": self.field.p, "n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj: dict) -> "TruthTable":
        return cls(PrimeField(obj["p"]), obj["n"], bytes(obj["values"]))


def slice_values(values: bytes, p: int, n: int, var: int, value: int) -> bytes:
    """Sub-vector of an n-ary value vector with x_var fixed (var is 1-based)."""
    stride = p ** (n - var)
    block = stride * p
    base = value * stride
    parts = [values[q * block + base : q * block + base + stride] for q in range(p ** (var - 1))]
    return b"".join(parts)


def slice_table(table: TruthTable, var: int, value: int) -> TruthTable:
    """Fix x_var = value, giving the (n-1)-ary table over the remaining variables."""
    if not 1 <= var <= table.n:
        raise BadVariable(f"variable {var} out of range 1..{table.n}")
    table.field.check(value)
    sub = slice_values(table.values, table.field.p, table.n, var, value)
    return TruthTable(table.field, table.n - 1, sub)


@dataclass(frozen=True)
class Restriction:
    """Result of splitting a table along one variable against an interval set.

    constant_on_set is the single output forced whenever x_var lies in the
    set, or None if that regime is not constant. off_set_slices holds one
    (n-1)-ary sub-table per complement value of x_var; off_set_common is
    their shared table when they all agree (i.e. the off-set regime does not
    depend on x_var), else None.
    """

    constant_on_set: int | None
    off_set_slices: tuple[TruthTable, ...]

    @property
    def off_set_common(self) -> TruthTable | None:
        first = self.off_set_slices[0]
        for other in self.off_set_slices[1:]:
            if other.values != first.values:
                return None
        return first


def restrict(table: TruthTable, var: int, s: IntervalSet) -> Restriction:
    """Split a table along x_var into the set regime and its complement."""
    if table.n < 1:
        raise ArityMismatch("restrict needs arity >= 1")
    if not 1 <= var <= table.n:
        raise BadVariable(f"variable {var} out of range 1..{table.n}")
    s.validate(table.field)
    p = table.field.p
    on_values = set()
    off_slices = []
    for a in range(p):
        part = slice_values(table.values, p, table.n, var, a)
        if s.contains(a):
            on_values.update(part)
        else:
            off_slices.append(TruthTable(table.field, table.n - 1, part))
    constant = on_values.pop() if len(on_values) == 1 else None
    return Restriction(constant, tuple(off_slices))


def parse_table(text: str) -> TruthTable:
    """Parse the two-line text format: 'p n' then p^n space-separated values.

    Raises ParseError with a 1-based line/column on malformed input.
    """
    tokens_by_line = _tokenize(text)
    if not tokens_by_line:
        raise ParseError(1, 1, "empty input; expected header 'p n'")
    header_line, header = tokens_by_line[0]
    if len(header) != 2:
        raise ParseError(header_line, header[-1][1] if header else 1,
                         f"header needs exactly 2 integers 'p n', got {len(header)}")
    p = _int_token(header[0], "p", header_line)
    n = _int_token(header[1], "n", header_line)
    try:
        fld = PrimeField(p)
    except ValueError as exc:
        raise ParseError(header_line, header[0][1], str(exc)) from None
    if n < 1:
        raise ParseError(header_line, header[1][1], f"arity must be >= 1, got {n}")
    body = [(line, tok) for line, toks in tokens_by_line[1:] for tok in toks]
    expected = p**n
    if len(body) != expected:
        line, col = (body[-1][0], body[-1][1][1]) if body else (header_line + 1, 1)
        raise ParseError(line, col, f"expected {expected} values, got {len(body)}")
    values = []
    for line, tok in body:
        v = _int_token(tok, "value", line)
        if v >= p:
            raise ParseError(line, tok[1], f"value {v} out of range for p={p}")
        values.append(v)
    return TruthTable(fld, n, bytes(values))


def _tokenize(text: str) -> list[tuple[int, list[tuple[str, int]]]]:
    """Nonempty lines as (line_no, [(token, column), ...]), 1-based."""
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = []
        col = 0
        for part in line.split(" "):
            if part:
                tokens.append((part, col + 1))
            col += len(part) + 1
        if tokens:
            out.append((line_no, tokens))
    return out


def _int_token(token: tuple[str, int], what: str, line: int = 1) -> int:
    text, col = token
    if not text.isdigit():
        raise ParseError(line, col, f"{what} must be a nonnegative integer, got {text!r}")
    return int(text)

"""The ring R of reduced polynomials over F_p, i.e. F_p[x_1..x_n] modulo
x_i^p - x_i, which is in bijection with the functions F_p^n -> F_p.

A PolyR stores the p^n coefficients C_{e_1...e_n} densely, indexed exactly
like truth-table points (x_1 most significant). The bridge between the two
representations is built from one-variable indicator polynomials:

    point_indicator(r): 1 at x = r, 0 elsewhere, as an explicit degree-(p-1)
        expansion (p-1) * [x^{p-1} + r x^{p-2} + ... + r^{p-2} x + prod_{a != r} a].
    set_indicator(S):   0 on S, 1 off S; the sum of point indicators over
        the complement of S.

interpolate() sums f(a) * prod_i point_indicator(a_i) over all points and is
the exact inverse of evaluate().
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArityMismatch, BadExponent, ParseError
from .field import IntervalSet, PrimeField
from .functions import MAX_TABLE_P, TruthTable, index_of


@dataclass(frozen=True)
class UniPoly:
    """One-variable reduced polynomial, coefficients c_0..c_{p-1}."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.p:
            raise ValueError(f"need exactly {self.field.p} coefficients")
        for c in self.coeffs:
            self.field.check(c)

    def eval_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.p
        return acc


def point_indicator(r: int, field: PrimeField) -> UniPoly:
    """The polynomial taking value 1 at r and 0 at every other element.

    Built from the closed-form expansion; the constant term for r = 0 is
    (p-1) * (p-1)!, which Wilson's theorem makes 1 mod p.
    """
    p = field.p
    field.check(r)
    coeffs = [0] * p
    coeffs[p - 1] = p - 1
    rpow = 1
    for j in range(1, p - 1):
        rpow = (rpow * r) % p
        coeffs[p - 1 - j] = ((p - 1) * rpow) % p
    prod = 1
    for a in range(p):
        if a != r:
            prod = (prod * a) % p
    coeffs[0] = (coeffs[0] + (p - 1) * prod) % p
    poly = UniPoly(field, tuple(coeffs))
    assert all(poly.eval_at(x) == (1 if x == r else 0) for x in range(p))
    return poly


def set_indicator(s: IntervalSet, field: PrimeField) -> UniPoly:
    """The polynomial that is 0 on the interval set and 1 off it."""
    s.validate(field)
    coeffs = [0] * field.p
    for r in s.complement(field).members(field):
        for i, c in enumerate(point_indicator(r, field).coeffs):
            coeffs[i] = (coeffs[i] + c) % field.p
    return UniPoly(field, tuple(coeffs))


@dataclass(frozen=True)
class PolyR:
    """Dense reduced polynomial in n variables; coeffs[index_of(e)] = C_e."""

    field: PrimeField
    n: int
    coeffs: bytes

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("arity must be >= 0")
        if self.field.p > MAX_TABLE_P:
            raise ValueError(f"polynomials support p <= {MAX_TABLE_P}, got p={self.field.p}")
        if len(self.coeffs) != self.field.p**self.n:
            raise ValueError(
                f"polynomial needs {self.field.p ** self.n} coefficients, got {len(self.coeffs)}"
            )
        if any(c >= self.field.p for c in self.coeffs):
            raise ValueError(f"coefficients must be < p={self.field.p}")

    @classmethod
    def from_coeffs(cls, field: PrimeField, n: int, coeffs: Iterable[int]) -> "PolyR":
        return cls(field, n, bytes(coeffs))

    def to_text(self) -> str:
        lines = [f"{self.field.p} {self.n}"]
        for idx, c in enumerate(self.coeffs):
            if c:
                exps = _exponents_at(idx, self.field.p, self.n)
                lines.append(" ".join(str(e) for e in exps) + f" : {c}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        terms = [
            {"exp": list(_exponents_at(idx, self.field.p, self.n)), "coeff": c}
            for idx, c in enumerate(self.coeffs)
            if c
        ]
        return {"p": self.field.p, "n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "PolyR":
        fld = PrimeField(obj["p"])
        n = obj["n"]
        coeffs = [0] * fld.p**n
        for term in obj["terms"]:
            coeffs[index_of(term["exp"], fld)] = term["coeff"]
        return cls(fld, n, bytes(coeffs))


def _exponents_at(index: int, p: int, n: int) -> tuple[int, ...]:
    exps = []
    for _ in range(n):
        index, e = divmod(index, p)
        exps.append(e)
    return tuple(reversed(exps))


def coefficient_at(q: PolyR, exponents: Sequence[int]) -> int:
    """The stored coefficient C_{e_1...e_n}."""
    if len(exponents) != q.n:
        raise ArityMismatch(f"got {len(exponents)} exponents, arity is {q.n}")
    for e in exponents:
        if not 0 <= e < q.field.p:
            raise BadExponent(f"exponent {e} out of range 0..{q.field.p - 1}")
    return q.coeffs[index_of(exponents, q.field)]


def evaluate(q: PolyR, point: Sequence[int]) -> int:
    """Value of the polynomial at a point, with the 0^0 = 1 convention."""
    if len(point) != q.n:
        raise ArityMismatch(f"point has {len(point)} coordinates, arity is {q.n}")
    p = q.field.p
    powers = _power_table(p)
    for a in point:
        q.field.check(a)

    def block(offset: int, size: int, depth: int) -> int:
        if depth == q.n:
            return q.coeffs[offset]
        sub = size // p
        row = powers[point[depth]]
        acc = 0
        for e in range(p):
            c = block(offset + e * sub, sub, depth + 1)
            if c:
                acc += c * row[e]
        return acc % p

    return block(0, len(q.coeffs), 0)


def table_of(q: PolyR) -> TruthTable:
    """Evaluate the polynomial on the whole grid F_p^n in one pass.

    Contracts one variable at a time against the power table, which is much
    faster than p^n separate evaluate() calls; agreement of the two paths is
    exercised in the tests.
    """
    p = q.field.p
    powers = _power_table(p)
    values = list(q.coeffs)
    size = len(values)
    stride = size // p if q.n else 1
    for _ in range(q.n):
        out = [0] * size
        for b in range(stride):
            base = b * p
            chunk = values[base : base + p]
            for x in range(p):
                row = powers[x]
                acc = 0
                for e in range(p):
                    c = chunk[e]
                    if c:
                        acc += c * row[e]
                out[x * stride + b] = acc % p
        values = out
    return TruthTable(q.field, q.n, bytes(values))


def interpolate(table: TruthTable) -> PolyR:
    """The unique reduced polynomial agreeing with the table at every point."""
    p = table.field.p
    indicators = _indicator_table(p)
    coeffs = [0] * len(table.values)
    for idx, v in enumerate(table.values):
        if not v:
            continue
        vec = [v]
        shift = len(table.values)
        for _ in range(table.n):
            shift //= p
            row = indicators[(idx // shift) % p]
            vec = [(c * w) % p for c in vec for w in row]
        for j, t in enumerate(vec):
            if t:
                coeffs[j] = (coeffs[j] + t) % p
    return PolyR(table.field, table.n, bytes(coeffs))


def mul_univariate(q: PolyR, var: int, u: UniPoly) -> PolyR:
    """Multiply by a one-variable polynomial in x_var, reducing by x^p = x.

    This is the only product the package needs: the layered construction of
    canalyzing polynomials multiplies one indicator factor at a time.
    """
    if not 1 <= var <= q.n:
        raise BadExponent(f"variable {var} out of range 1..{q.n}")
    p = q.field.p
    stride = p ** (q.n - var)
    out = [0] * len(q.coeffs)
    for idx, c in enumerate(q.coeffs):
        if not c:
            continue
        e_var = (idx // stride) % p
        base = idx - e_var * stride
        for k, uc in enumerate(u.coeffs):
            if not uc:
                continue
            e_new = e_var + k
            if e_new >= p:
                # x^p = x, so any exponent >= p drops by p-1 back into 1..p-1.
                e_new -= p - 1
            j = base + e_new * stride
            out[j] = (out[j] + c * uc) % p
    return PolyR(q.field, q.n, bytes(out))


@lru_cache(maxsize=None)
def _power_table(p: int) -> tuple[tuple[int, ...], ...]:
    """powers[x][e] = x^e mod p with 0^0 = 1."""
    return tuple(tuple(pow(x, e, p) for e in range(p)) for x in range(p))


@lru_cache(maxsize=None)
def _indicator_table(p: int) -> tuple[tuple[int, ...], ...]:
    field = PrimeField(p)
    return tuple(point_indicator(r, field).coeffs for r in range(p))


def parse_poly(text: str) -> PolyR:
    """Parse the sparse text form: header 'p n', then 'e_1 ... e_n : c' lines."""
    lines = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise ParseError(1, 1, "empty input; expected header 'p n'")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(s.isdigit() for s in parts):
        raise ParseError(header_no, 1, f"header must be 'p n', got {header!r}")
    p, n = int(parts[0]), int(parts[1])
    try:
        fld = PrimeField(p)
    except ValueError as exc:
        raise ParseError(header_no, 1, str(exc)) from None
    coeffs = [0] * p**n
    for no, line in lines[1:]:
        if ":" not in line:
            raise ParseError(no, 1, f"expected 'e_1 .. e_n : c', got {line!r}")
        left, _, right = line.partition(":")
        exps = left.split()
        if len(exps) != n or not all(s.isdigit() for s in exps) or not right.split():
            raise ParseError(no, 1, f"expected {n} exponents and a coefficient in {line!r}")
        e = [int(s) for s in exps]
        if any(x >= p for x in e):
            raise ParseError(no, 1, f"exponent out of range 0..{p - 1} in {line!r}")
        c = right.split()[0]
        if not c.isdigit() or int(c) >= p:
            raise ParseError(no, line.index(":") + 2, f"bad coefficient {c!r} for p={p}")
        coeffs[index_of(e, fld)] = int(c)
    return PolyR(fld, n, bytes(coeffs))

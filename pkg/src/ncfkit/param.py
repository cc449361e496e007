"""Coefficient parametrization of nested canalyzing polynomials.

For a descriptor (sigma, S_1..S_n, b_1..b_{n+1}) write, per layer i,

    a_i(k)   = coefficient of x^k in the complement indicator Q_{S_i}
             = (p-1) * |S_i^c|                     for k = p-1
             = (p-1) * sum_{r in S_i^c} r^{p-1-k}   for 0 < k < p-1
             = Q_{S_i}(0)  (1 iff 0 not in S_i)     for k = 0

and B_m = b_{m+1} - b_m. Reading exponent tuples in layer order
(d_i = exponent of the variable layer i tests), the coefficients of the
canalyzing polynomial are pinned by six relations:

    top_coefficient   C at the all-(p-1) tuple equals
                      B_n (p-1)^n prod_i |S_i^c|.
    interior_blocks   C at [all p-1 except d_i = k], 0 < k < p-1, equals
                      |S_i^c|^{-1} (sum_{r in S_i^c} r^{p-1-k}) * top.
    zero_blocks       C at [all p-1 except d_i = 0], i <= n-1, equals
                      (p-1) |S_i^c|^{-1} Q_{S_i}(0) * top.
    corner_sums       C at [p-1 on layers 1..L, then zeros] equals
                      [prod_{i<=L} (p-1)|S_i^c|] *
                      sum_{j=0}^{n-L} B_{n-j} prod_{i=L+1}^{n-j} Q_{S_i}(0).
    product_relation  every other nonzero tuple factors through its corner
                      and blocks: C_e = K_L prod_{i<=L} top^{-1} C_block(i, d_i)
                      with L the last nonzero layer of e.
    constant_relation C at the all-zero tuple: for n >= 2,
                      K_1 * C_block(1, 0) = top * (C_0 - b_1); for n = 1 the
                      equivalent direct form C_0 = b_1 + B_1 Q_{S_1}(0).

Two published readings are deliberately not followed (literal=True restores
them so the divergence can be demonstrated):

  * interior_blocks is sometimes stated with an extra (p-1) factor, which
    contradicts the construction whenever the power sum is nonzero;
  * the corner-sum indicator product is sometimes written with the summation
    index on the set subscript, which names no set at j = 0 and repeats one
    factor otherwise; the per-layer product above is what the expansion gives;
  * at n = 1 the product form of constant_relation would force b_1 = 0.

interior_blocks is checked for every layer including the last: for
exponents strictly between 0 and p-1 only the full product contributes to
that coefficient, so the closed form holds for all layers, and checking the
last layer is what catches single-coefficient tampering at n = 1. The
zero-exponent block of the last layer genuinely has a second contribution,
so zero_blocks stops at n-1; that pattern is the L = n-1 corner and is
pinned by corner_sums instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch, DegenerateDescriptor
from .functions import index_of
from .ncf import NcfDescriptor
from .poly import PolyR

CHECKS = (
    "top_coefficient",
    "interior_blocks",
    "zero_blocks",
    "corner_sums",
    "product_relation",
    "constant_relation",
)


@dataclass(frozen=True)
class ParamReport:
    """Pass/fail per relation plus every violating exponent tuple."""

    top_coefficient: bool
    interior_blocks: bool
    zero_blocks: bool
    corner_sums: bool
    product_relation: bool
    constant_relation: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def all_pass(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checks": {name: getattr(self, name) for name in CHECKS},
            "all_pass": self.all_pass,
            "violations": [
                {"check": name, "exp": list(exps)} for name, exps in self.violations
            ],
        }


class _Context:
    """Descriptor-side quantities shared by the checker and the generator."""

    def __init__(self, d: NcfDescriptor):
        if d.outputs[-1] == d.outputs[-2]:
            raise DegenerateDescriptor("the last two outputs must differ")
        self.d = d
        self.field = d.field
        p = d.field.p
        self.p = p
        self.n = d.n
        # 0-based position of the variable each layer tests.
        self.pos = [v - 1 for v in d.sigma]
        comp = [s.complement(d.field) for s in d.sets]
        self.csize = [c.size(d.field) % p for c in comp]
        self.q0 = [0 if s.contains(0) else 1 for s in d.sets]
        self.psum = [
            [sum(pow(r, p - 1 - k, p) for r in c.members(d.field)) % p for k in range(p)]
            for c in comp
        ]
        self.B = [(d.outputs[m + 1] - d.outputs[m]) % p for m in range(d.n)]

    def top_value(self) -> int:
        p = self.p
        value = self.B[self.n - 1] * pow(p - 1, self.n, p)
        for c in self.csize:
            value = value * c % p
        return value % p

    def block_ratio(self, layer: int, k: int, literal: bool = False) -> int:
        """C_block(layer, k) / top for 0-based layer and exponent k."""
        p = self.p
        inv_c = self.field.inv(self.csize[layer])
        if k == p - 1:
            return 1
        if k == 0:
            return (p - 1) * inv_c * self.q0[layer] % p
        ratio = inv_c * self.psum[layer][k] % p
        if literal:
            ratio = ratio * (p - 1) % p
        return ratio

    def corner_value(self, last: int, literal: bool = False) -> int:
        """Predicted coefficient with p-1 on layers 1..last and zeros after."""
        p = self.p
        prefix = 1
        for i in range(last):
            prefix = prefix * (p - 1) * self.csize[i] % p
        total = 0
        for j in range(self.n - last + 1):
            term = self.B[self.n - 1 - j]
            if literal and j > 0:
                term = term * pow(self.q0[j - 1], self.n - last - j, p) % p
            else:
                for i in range(last, self.n - j):
                    term = term * self.q0[i] % p
            total = (total + term) % p
        return prefix * total % p

    def constant_value(self) -> int:
        p = self.p
        total = self.d.outputs[0]
        for j in range(self.n):
            term = self.B[self.n - 1 - j]
            for i in range(self.n - j):
                term = term * self.q0[i] % p
            total = (total + term) % p
        return total

    def block_index(self, layer: int, k: int) -> int:
        exps = [self.p - 1] * self.n
        exps[self.pos[layer]] = k
        return index_of(exps, self.field)

    def corner_index(self, last: int) -> int:
        exps = [0] * self.n
        for i in range(last):
            exps[self.pos[i]] = self.p - 1
        return index_of(exps, self.field)


def check_parametrization(q: PolyR, d: NcfDescriptor, literal: bool = False) -> ParamReport:
    """Verify every coefficient relation of the parametrization against q.

    All arithmetic is mod p; |S^c| enters as a field element and the product
    relation divides by the stored top coefficient (nonzero whenever the
    top_coefficient relation itself holds). literal=True swaps in the
    uncorrected published readings described in the module docstring.
    """
    if q.n != d.n or q.field.p != d.field.p:
        raise ArityMismatch(
            f"polynomial is p={q.field.p}, n={q.n}; descriptor is p={d.field.p}, n={d.n}"
        )
    ctx = _Context(d)
    p, n = ctx.p, ctx.n
    coeffs = q.coeffs
    violations: list[tuple[str, tuple[int, ...]]] = []

    def exps_of(idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(n):
            idx, e = divmod(idx, p)
            out.append(e)
        return tuple(reversed(out))

    bidx = [[ctx.block_index(layer, k) for k in range(p)] for layer in range(n)]
    cidx = [0] + [ctx.corner_index(last) for last in range(1, n + 1)]

    top_idx = bidx[0][p - 1]
    top = coeffs[top_idx]
    if top != ctx.top_value():
        violations.append(("top_coefficient", exps_of(top_idx)))

    for layer in range(n):
        for k in range(1, p - 1):
            idx = bidx[layer][k]
            if coeffs[idx] != ctx.block_ratio(layer, k, literal) * top % p:
                violations.append(("interior_blocks", exps_of(idx)))

    for layer in range(n - 1):
        idx = bidx[layer][0]
        if coeffs[idx] != ctx.block_ratio(layer, 0) * top % p:
            violations.append(("zero_blocks", exps_of(idx)))

    for last in range(1, n + 1):
        idx = cidx[last]
        if coeffs[idx] != ctx.corner_value(last, literal):
            violations.append(("corner_sums", exps_of(idx)))

    inv_top = ctx.field.inv(top) if top else None
    for idx in range(1, len(coeffs)):
        exps = exps_of(idx)
        layer_exps = [exps[ctx.pos[i]] for i in range(n)]
        last = max(i + 1 for i in range(n) if layer_exps[i])
        if inv_top is not None:
            rhs = coeffs[cidx[last]]
            for i in range(last):
                rhs = rhs * inv_top % p * coeffs[bidx[i][layer_exps[i]]] % p
            ok = coeffs[idx] == rhs
        else:
            lhs = coeffs[idx] * pow(top, last, p) % p
            rhs = coeffs[cidx[last]]
            for i in range(last):
                rhs = rhs * coeffs[bidx[i][layer_exps[i]]] % p
            ok = lhs == rhs
        if not ok:
            violations.append(("product_relation", exps))

    if n == 1 and not literal:
        ok = coeffs[0] == ctx.constant_value()
    else:
        lhs = coeffs[cidx[1]] * coeffs[bidx[0][0]] % p
        rhs = top * ((coeffs[0] - d.outputs[0]) % p) % p
        ok = lhs == rhs
    if not ok:
        violations.append(("constant_relation", exps_of(0)))

    failed = {name for name, _ in violations}
    return ParamReport(
        *(name not in failed for name in CHECKS),
        violations=tuple(violations),
    )


def coefficients_from_parameters(d: NcfDescriptor) -> PolyR:
    """Fill all p^n coefficients directly from the descriptor closed forms.

    Deliberately does not touch the indicator-product construction, so the
    coefficientwise equality with build_polynomial is a genuine cross-check.
    """
    ctx = _Context(d)
    p, n = ctx.p, ctx.n
    ratios = [[ctx.block_ratio(layer, k) for k in range(p)] for layer in range(n)]
    corners = [0] + [ctx.corner_value(last) for last in range(1, n + 1)]
    coeffs = [0] * p**n
    coeffs[0] = ctx.constant_value()
    for idx in range(1, len(coeffs)):
        rest, exps = idx, []
        for _ in range(n):
            rest, e = divmod(rest, p)
            exps.append(e)
        exps.reverse()
        layer_exps = [exps[ctx.pos[i]] for i in range(n)]
        last = max(i + 1 for i in range(n) if layer_exps[i])
        c = corners[last]
        for i in range(last):
            c = c * ratios[i][layer_exps[i]] % p
        coeffs[idx] = c
    return PolyR(d.field, n, bytes(coeffs))

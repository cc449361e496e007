import math
import random

import pytest

from ncfkit import (
    ArityMismatch,
    BadExponent,
    IntervalSet,
    ParseError,
    PolyR,
    PrimeField,
    TruthTable,
    coefficient_at,
    evaluate,
    interpolate,
    mul_univariate,
    parse_poly,
    point_indicator,
    set_indicator,
    table_of,
)
from ncfkit.field import interval_sets

PRIMES = [2, 3, 5, 7, 11, 13]


def test_point_indicator_p2():
    assert point_indicator(1, PrimeField(2)).coeffs == (0, 1)  # the polynomial x


def test_point_indicator_p3_expansion():
    # Independent expansion of 2(x-1)(x-2) = 2x^2 - 6x + 4 = 2x^2 + 1 mod 3.
    got = point_indicator(0, PrimeField(3))
    assert got.coeffs == (1, 0, 2)
    assert [got.eval_at(x) for x in range(3)] == [1, 0, 0]


def test_point_indicator_p5_pointwise():
    got = point_indicator(2, PrimeField(5))
    assert [got.eval_at(x) for x in range(5)] == [0, 0, 1, 0, 0]


def test_point_indicator_correct_everywhere():
    for p in PRIMES:
        field = PrimeField(p)
        for r in range(p):
            ind = point_indicator(r, field)
            for x in range(p):
                assert ind.eval_at(x) == (1 if x == r else 0)


def test_partition_of_unity():
    for p in PRIMES:
        field = PrimeField(p)
        total = [0] * p
        for r in range(p):
            for i, c in enumerate(point_indicator(r, field).coeffs):
                total[i] = (total[i] + c) % p
        assert total == [1] + [0] * (p - 1)


def test_wilson_constant_term():
    for p in PRIMES:
        ind = point_indicator(0, PrimeField(p))
        assert ind.coeffs[0] == (p - 1) * math.factorial(p - 1) % p == 1


def test_set_indicator_examples():
    assert set_indicator(IntervalSet.prefix(0), PrimeField(2)).coeffs == (0, 1)
    q3 = set_indicator(IntervalSet.prefix(0), PrimeField(3))
    assert [q3.eval_at(x) for x in range(3)] == [0, 1, 1]
    q5 = set_indicator(IntervalSet.prefix(2), PrimeField(5))
    assert [q5.eval_at(x) for x in range(5)] == [0, 0, 0, 1, 1]


def test_set_indicator_everywhere_and_complement_identity():
    for p in PRIMES:
        field = PrimeField(p)
        for s in interval_sets(field):
            q = set_indicator(s, field)
            for x in range(p):
                assert q.eval_at(x) == (0 if s.contains(x) else 1)
            qc = set_indicator(s.complement(field), field)
            total = [(a + b) % p for a, b in zip(q.coeffs, qc.coeffs)]
            assert total == [1] + [0] * (p - 1)


def test_interpolate_constant():
    field = PrimeField(3)
    q = interpolate(TruthTable.from_values(field, 2, [2] * 9))
    assert q.coeffs == bytes([2] + [0] * 8)


def test_interpolate_identity_p2():
    q = interpolate(TruthTable.from_values(PrimeField(2), 1, [0, 1]))
    assert q.coeffs == bytes([0, 1])  # the polynomial x


def _round_trip(table):
    q = interpolate(table)
    assert table_of(q).values == table.values


def test_round_trip_exhaustive_p2():
    f2 = PrimeField(2)
    for n in (1, 2):
        for code in range(2 ** (2**n)):
            values = [(code >> i) & 1 for i in range(2**n)]
            _round_trip(TruthTable.from_values(f2, n, values))


def test_round_trip_random():
    rng = random.Random(20240601)
    combos = [(p, n) for p in PRIMES for n in range(1, 8) if p**n <= 125]
    for p, n in combos:
        field = PrimeField(p)
        size = p**n
        for _ in range(1000):
            table = TruthTable.from_values(field, n, [rng.randrange(p) for _ in range(size)])
            _round_trip(table)


def test_evaluate_matches_table_of():
    rng = random.Random(99)
    for p, n in [(2, 3), (3, 2), (5, 2), (7, 1)]:
        field = PrimeField(p)
        size = p**n
        for _ in range(20):
            q = PolyR.from_coeffs(field, n, [rng.randrange(p) for _ in range(size)])
            grid = table_of(q)
            for idx in range(size):
                pt = []
                rest = idx
                for _ in range(n):
                    rest, a = divmod(rest, p)
                    pt.append(a)
                pt.reverse()
                assert evaluate(q, tuple(pt)) == grid.values[idx]


def test_evaluate_examples():
    f2 = PrimeField(2)
    zero = PolyR.from_coeffs(f2, 2, [0, 0, 0, 0])
    assert all(evaluate(zero, pt) == 0 for pt in [(0, 0), (0, 1), (1, 0), (1, 1)])
    x1x2 = PolyR.from_coeffs(f2, 2, [0, 0, 0, 1])
    assert evaluate(x1x2, (1, 1)) == 1
    with pytest.raises(ArityMismatch):
        evaluate(x1x2, (1,))


def test_evaluate_zero_power_convention():
    # Constant polynomial must evaluate to the constant even where some
    # coordinate is 0, which requires 0^0 = 1.
    f3 = PrimeField(3)
    const = PolyR.from_coeffs(f3, 2, [2] + [0] * 8)
    assert evaluate(const, (0, 0)) == 2


def test_coefficient_at():
    f3 = PrimeField(3)
    const = PolyR.from_coeffs(f3, 2, [2] + [0] * 8)
    assert coefficient_at(const, (0, 0)) == 2
    top = PolyR.from_coeffs(f3, 2, [0] * 8 + [1])
    assert coefficient_at(top, (2, 2)) == 1
    with pytest.raises(BadExponent):
        coefficient_at(top, (2, 3))
    with pytest.raises(ArityMismatch):
        coefficient_at(top, (2,))


def test_mul_univariate_reduces_high_powers():
    f3 = PrimeField(3)
    x_sq = PolyR.from_coeffs(f3, 1, [0, 0, 1])
    u = set_indicator(IntervalSet.prefix(0), f3)
    product = mul_univariate(x_sq, 1, u)
    # Pointwise the product must agree with multiplying values.
    for x in range(3):
        expected = table_of(x_sq).values[x] * u.eval_at(x) % 3
        assert table_of(product).values[x] == expected


def test_poly_text_and_json_round_trip():
    f3 = PrimeField(3)
    q = PolyR.from_coeffs(f3, 2, [1, 0, 0, 0, 0, 2, 0, 0, 1])
    assert parse_poly(q.to_text()) == q
    assert PolyR.from_json(q.to_json()) == q
    text = q.to_text()
    assert text.splitlines()[0] == "3 2"
    assert "2 2 : 1" in text


def test_parse_poly_errors():
    with pytest.raises(ParseError):
        parse_poly("")
    with pytest.raises(ParseError):
        parse_poly("3 2\n0 : 1\n")  # wrong exponent count
    with pytest.raises(ParseError):
        parse_poly("3 2\n0 3 : 1\n")  # exponent out of range
    with pytest.raises(ParseError):
        parse_poly("3 2\n0 1 : 5\n")  # coefficient out of range
    with pytest.raises(ParseError):
        parse_poly("6 1\n0 : 1\n")  # composite p

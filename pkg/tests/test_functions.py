import random
from collections import Counter

import pytest

from ncfkit import (
    ArityMismatch,
    BadVariable,
    IntervalSet,
    ParseError,
    PrimeField,
    TruthTable,
    index_of,
    parse_table,
    point_at,
    restrict,
    slice_table,
)


def test_index_examples():
    assert index_of((0, 0, 0), PrimeField(5)) == 0
    assert index_of((1, 2), PrimeField(3)) == 5
    assert index_of((1, 0, 1), PrimeField(2)) == 5


def test_index_bijection_exhaustive():
    for p in (2, 3, 5):
        field = PrimeField(p)
        for n in (1, 2, 3):
            seen = set()
            for idx in range(p**n):
                pt = point_at(idx, field, n)
                assert index_of(pt, field) == idx
                seen.add(pt)
            assert len(seen) == p**n


def test_eval_examples():
    f2, f3 = PrimeField(2), PrimeField(3)
    const = TruthTable.from_values(f3, 2, [2] * 9)
    assert all(const.value_at(pt) == 2 for pt in [(0, 0), (1, 2), (2, 2)])
    and2 = TruthTable.from_values(f2, 2, [0, 0, 0, 1])
    assert and2.value_at((1, 1)) == 1
    ident = TruthTable.from_values(f3, 1, [0, 1, 2])
    assert ident.value_at((2,)) == 2


def test_eval_arity_mismatch():
    t = TruthTable.from_values(PrimeField(2), 2, [0, 0, 0, 1])
    with pytest.raises(ArityMismatch):
        t.value_at((1,))


def test_restrict_and_gate():
    t = TruthTable.from_values(PrimeField(2), 2, [0, 0, 0, 1])
    r = restrict(t, 1, IntervalSet.prefix(0))
    assert r.constant_on_set == 0
    assert r.off_set_common is not None
    assert list(r.off_set_common.values) == [0, 1]


def test_restrict_xor_not_constant():
    t = TruthTable.from_values(PrimeField(2), 2, [0, 1, 1, 0])
    r = restrict(t, 1, IntervalSet.prefix(0))
    assert r.constant_on_set is None


def test_restrict_to_zero_ary():
    t = TruthTable.from_values(PrimeField(3), 1, [0, 0, 2])
    r = restrict(t, 1, IntervalSet.prefix(1))
    assert r.constant_on_set == 0
    common = r.off_set_common
    assert common.n == 0 and list(common.values) == [2]


def test_restrict_off_slices_can_disagree():
    # x_1 = 1 and x_1 = 2 give different slices, so no common table.
    t = TruthTable.from_values(PrimeField(3), 2, [0, 0, 0, 1, 1, 1, 2, 2, 2])
    r = restrict(t, 1, IntervalSet.prefix(0))
    assert r.constant_on_set == 0
    assert r.off_set_common is None
    assert len(r.off_set_slices) == 2


def test_restrict_partitions_values():
    rng = random.Random(3)
    f3 = PrimeField(3)
    for _ in range(25):
        t = TruthTable.from_values(f3, 2, [rng.randrange(3) for _ in range(9)])
        for var in (1, 2):
            s = IntervalSet.prefix(rng.randrange(2))
            on = Counter()
            for a in s.members(f3):
                on.update(slice_table(t, var, a).values)
            off = Counter()
            for part in restrict(t, var, s).off_set_slices:
                off.update(part.values)
            assert on + off == Counter(t.values)


def test_restrict_bad_variable():
    t = TruthTable.from_values(PrimeField(2), 2, [0, 0, 0, 1])
    with pytest.raises(BadVariable):
        restrict(t, 3, IntervalSet.prefix(0))
    with pytest.raises(BadVariable):
        slice_table(t, 0, 0)


def test_table_validation():
    f3 = PrimeField(3)
    with pytest.raises(ValueError):
        TruthTable.from_values(f3, 2, [0] * 8)  # wrong length
    with pytest.raises(ValueError):
        TruthTable.from_values(f3, 1, [0, 1, 3])  # entry out of range
    with pytest.raises(ValueError):
        TruthTable.from_values(PrimeField(101), 1, [0] * 101)  # beyond byte guard


def test_text_round_trip():
    t = TruthTable.from_values(PrimeField(3), 2, [0, 0, 0, 1, 2, 2, 1, 2, 2])
    assert parse_table(t.to_text()) == t
    assert t.to_text() == "3 2\n0 0 0 1 2 2 1 2 2\n"


def test_json_round_trip():
    t = TruthTable.from_values(PrimeField(5), 1, [4, 3, 2, 1, 0])
    assert TruthTable.from_json(t.to_json()) == t
    assert t.to_json() == {"p": 5, "n": 1, "values": [4, 3, 2, 1, 0]}


def test_parse_errors_carry_line_and_column():
    with pytest.raises(ParseError) as err:
        parse_table("")
    assert (err.value.line, err.value.column) == (1, 1)

    with pytest.raises(ParseError) as err:
        parse_table("3 2\n0 0 0 9 2 2 1 2 2\n")
    assert (err.value.line, err.value.column) == (2, 7)

    with pytest.raises(ParseError) as err:
        parse_table("3 2\n0 0 0\n")
    assert err.value.line == 2

    with pytest.raises(ParseError) as err:
        parse_table("4 1\n0 0 0 0\n")
    assert "prime" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_table("3 2\n0 0 x 1 2 2 1 2 2\n")
    assert (err.value.line, err.value.column) == (2, 5)

    with pytest.raises(ParseError):
        parse_table("3\n0\n")
    with pytest.raises(ParseError):
        parse_table("3 0\n\n")

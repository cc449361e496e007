import pytest

from ncfkit import IntervalSet, PrimeField, ZeroInverse, complement, interval_sets

PRIMES = [2, 3, 5, 7, 11, 13]


def test_primality_enforced():
    for p in PRIMES + [17, 97]:
        assert PrimeField(p).p == p
    for bad in [0, 1, 4, 6, 9, 91]:
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_add_examples():
    f5 = PrimeField(5)
    for x in range(5):
        assert f5.add(0, x) == x
    assert PrimeField(3).add(2, 2) == 1
    assert f5.add(4, 4) == 3


def test_inv_examples():
    assert PrimeField(7).inv(1) == 1
    assert PrimeField(5).inv(2) == 3
    assert PrimeField(7).inv(4) == 2


def test_inv_of_zero_raises():
    with pytest.raises(ZeroInverse):
        PrimeField(5).inv(0)


def test_inverse_property():
    for p in PRIMES:
        field = PrimeField(p)
        for a in range(1, p):
            assert field.mul(a, field.inv(a)) == 1


def _interval_subsets(p):
    """Independent enumeration: proper nonempty subsets that are contiguous
    and have contiguous complements."""

    def contiguous(xs):
        return not xs or max(xs) - min(xs) + 1 == len(xs)

    found = set()
    for mask in range(1, 2**p - 1):
        members = [x for x in range(p) if mask >> x & 1]
        others = [x for x in range(p) if not mask >> x & 1]
        if contiguous(members) and contiguous(others):
            found.add(frozenset(members))
    return found


def test_interval_sets_p2():
    f2 = PrimeField(2)
    cat = interval_sets(f2)
    assert [set(s.members(f2)) for s in cat] == [{0}, {1}]


def test_interval_sets_match_enumeration():
    for p in PRIMES:
        field = PrimeField(p)
        cat = interval_sets(field)
        assert len(cat) == 2 * (p - 1)
        as_subsets = {frozenset(s.members(field)) for s in cat}
        assert len(as_subsets) == len(cat)  # no duplicates
        assert as_subsets == _interval_subsets(p)


def test_interval_sets_order():
    f5 = PrimeField(5)
    assert [str(s) for s in interval_sets(f5)] == [
        "P0", "P1", "P2", "P3", "S1", "S2", "S3", "S4",
    ]


def test_membership_matches_expansion():
    for p in PRIMES:
        field = PrimeField(p)
        for s in interval_sets(field):
            expanded = set(s.members(field))
            for x in range(p):
                assert s.contains(x) == (x in expanded)


def test_complement_examples():
    f3, f5 = PrimeField(3), PrimeField(5)
    assert complement(IntervalSet.prefix(0), f3) == IntervalSet.suffix(1)
    for field in (f3, f5):
        assert complement(IntervalSet.suffix(field.p - 1), field) == IntervalSet.prefix(field.p - 2)
    assert complement(IntervalSet.prefix(1), f5) == IntervalSet.suffix(2)


def test_complement_is_involution_and_permutes_catalog():
    for p in PRIMES:
        field = PrimeField(p)
        cat = interval_sets(field)
        images = [complement(s, field) for s in cat]
        assert sorted(map(str, images)) == sorted(map(str, cat))
        for s in cat:
            assert complement(complement(s, field), field) == s
            both = set(s.members(field)) | set(complement(s, field).members(field))
            assert both == set(range(p))


def test_validate_bounds():
    f3 = PrimeField(3)
    with pytest.raises(ValueError):
        IntervalSet.prefix(2).validate(f3)  # would be all of F_3
    with pytest.raises(ValueError):
        IntervalSet.suffix(3).validate(f3)  # empty
    with pytest.raises(ValueError):
        IntervalSet.suffix(0)  # complement would be empty


def test_parse_and_format():
    assert str(IntervalSet.parse("P1")) == "P1"
    assert IntervalSet.parse("S2") == IntervalSet.suffix(2)
    for bad in ["", "P", "Q1", "P-1", "1P", "S"]:
        with pytest.raises(ValueError):
            IntervalSet.parse(bad)


def test_element_check():
    f3 = PrimeField(3)
    assert f3.check(2) == 2
    with pytest.raises(ValueError):
        f3.check(3)
    with pytest.raises(ValueError):
        f3.check(-1)
